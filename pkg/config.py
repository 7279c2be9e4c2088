"""Application configuration loaded from environment variables."""

import os
from dotenv import load_dotenv

load_dotenv()


class Settings:
    """Central configuration for the DFI toolkit."""

    EPS_TAIL: float = float(os.getenv("DFI_EPS_TAIL", "1e-12"))
    NORMALIZATION_TOL: float = float(os.getenv("DFI_NORMALIZATION_TOL", "1e-12"))
    MAX_SUPPORT: int = int(os.getenv("DFI_MAX_SUPPORT", "10000000"))
    SECOND_MOMENT_TAIL: float = float(os.getenv("DFI_SECOND_MOMENT_TAIL", "1e-9"))
    VARIANCE_CHECK_TAIL: float = float(os.getenv("DFI_VARIANCE_CHECK_TAIL", "1e-9"))
    WORKERS: int = int(os.getenv("DFI_WORKERS", "1"))
    DEFAULT_SEED: int = int(os.getenv("DFI_SEED", "0"))
    OPT_MIN_STEP: float = float(os.getenv("DFI_OPT_MIN_STEP", "1e-9"))
    OPT_MAX_PASSES: int = int(os.getenv("DFI_OPT_MAX_PASSES", "5000"))
    LOG_LEVEL: str = os.getenv("DFI_LOG_LEVEL", "WARNING")


settings = Settings()
