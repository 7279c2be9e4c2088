"""Seeded random pmfs on {0, ..., support-1}."""

import logging
import math
from collections.abc import Iterator, Sequence

import numpy as np

from errors import PreconditionError
from schemas.pmf import Pmf

logger = logging.getLogger(__name__)

DEFAULT_CONCENTRATIONS = (0.1, 1.0, 10.0)


def random_pmf(seed: int, support: int, concentration: float) -> Pmf:
    """Dirichlet(concentration, ..., concentration) draw; tail 0; deterministic in seed."""
    if support < 1:
        raise PreconditionError(f"support must be >= 1, got {support}")
    if not concentration > 0.0:
        raise PreconditionError(f"concentration must be positive, got {concentration}")
    if support == 1:
        return Pmf(values=(1.0,))

    rng = np.random.default_rng(seed)
    x = rng.dirichlet(np.full(support, concentration))
    if not np.isfinite(x).all() or x.sum() <= 0.0:
        # every gamma draw underflowed; the small-concentration limit is a vertex
        x = np.zeros(support)
        x[int(rng.integers(support))] = 1.0
    x = x / math.fsum(x.tolist())
    return Pmf(values=tuple(x.tolist()))


def random_corpus(
    seed: int,
    size: int,
    supports: tuple[int, int] = (1, 64),
    concentrations: Sequence[float] = DEFAULT_CONCENTRATIONS,
) -> Iterator[tuple[int, Pmf]]:
    """
    Yield (index, pmf) for a reproducible corpus.

    Support is uniform on the inclusive range, concentration uniform over the list;
    each pmf gets its own child seed so the stream is stable under slicing.
    """
    lo, hi = supports
    if lo < 1 or hi < lo:
        raise PreconditionError(f"support range must satisfy 1 <= lo <= hi, got {supports}")
    if not concentrations:
        raise PreconditionError("at least one concentration is required")
    rng = np.random.default_rng(seed)
    for index in range(size):
        support = int(rng.integers(lo, hi + 1))
        concentration = float(concentrations[int(rng.integers(len(concentrations)))])
        child_seed = int(rng.integers(0, 2**63 - 1))
        yield index, random_pmf(child_seed, support, concentration)
