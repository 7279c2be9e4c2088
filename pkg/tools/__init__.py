from tools.cramer_rao import check_cramer_rao, check_cramer_rao_simplified
from tools.max_pmf import check_max_pmf
from tools.stam import check_stam, check_stam_type
from tools.proof_bounds import proof_bounds

__all__ = [
    "check_cramer_rao", "check_cramer_rao_simplified", "check_max_pmf",
    "check_stam", "check_stam_type", "proof_bounds",
]
