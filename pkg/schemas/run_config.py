"""Validated configuration of one CLI invocation."""

from __future__ import annotations

from typing import Literal

from pydantic import BaseModel, Field, model_validator

Subcommand = Literal["compute", "verify", "sweep", "random-check", "optimize", "grid"]

PMF_SUBCOMMANDS = {"compute", "verify"}


class RunConfig(BaseModel):
    """Everything a subcommand needs; built from argparse, then validated."""
    subcommand: Subcommand
    family: str | None = Field(default=None, description="Family spec name:param[,param]")
    pmf_file: str | None = None
    eps_tail: float = Field(gt=0.0)
    seed: int = 0
    output_format: Literal["json", "csv", "plain"] = "plain"
    output: str | None = None
    workers: int = Field(default=1, ge=1)
    proof_bounds: bool = False
    # sweep
    q_grid: list[float] = Field(default_factory=list)
    # random-check
    corpus_size: int = Field(default=1000, ge=1)
    min_support: int = Field(default=1, ge=1)
    max_support: int = Field(default=64, ge=1)
    concentrations: list[float] = Field(default_factory=lambda: [0.1, 1.0, 10.0], min_length=1)
    witness_file: str = "violations.json"
    # optimize / grid
    support: int = Field(default=2, ge=1)
    restarts: int = Field(default=8, ge=1)
    step_tol: float = Field(default=1e-12, gt=0.0)
    step: float = Field(default=1e-3, gt=0.0, le=0.1)
    objective: Literal["stam", "max-pmf-ratio"] = "stam"

    @model_validator(mode="after")
    def _one_input_source(self) -> RunConfig:
        if self.subcommand in PMF_SUBCOMMANDS and (self.family is None) == (self.pmf_file is None):
            raise ValueError("exactly one of --family or --pmf-file is required")
        if self.max_support < self.min_support:
            raise ValueError("--max-support must be >= --min-support")
        if any(not c > 0.0 for c in self.concentrations):
            raise ValueError("concentrations must be positive")
        return self
