from analysis.sampling import random_pmf, random_corpus
from analysis.tightness import geometric_sweep, dfi_smallq_residual
from analysis.optimizer import minimize_stam_product, maximize_max_pmf_ratio, brute_force_grid

__all__ = [
    "random_pmf", "random_corpus", "geometric_sweep", "dfi_smallq_residual",
    "minimize_stam_product", "maximize_max_pmf_ratio", "brute_force_grid",
]
