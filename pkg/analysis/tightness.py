"""Geometric q -> 0 sweeps showing how close the max-pmf and Stam bounds come to equality."""

import logging
import math
from collections.abc import Sequence

from errors import InputError, PreconditionError
from schemas.reports import SweepPoint, SweepResult
from services.families import geometric_oracle

logger = logging.getLogger(__name__)

DEFAULT_Q_GRID = (0.5, 0.1, 0.01, 1e-3, 1e-4)
STAM_LIMIT = math.exp(-2.0)


def dfi_smallq_residual(q: float) -> float:
    """(I_d - q^2) / q^3 for the geometric family; tends to 1/2 as q -> 0."""
    if not 0.0 < q <= 0.5:
        raise PreconditionError(f"residual is defined for q in (0, 0.5], got {q}")
    return (geometric_oracle(q).dfi - q * q) / q ** 3


def geometric_sweep(q_grid: Sequence[float] = DEFAULT_Q_GRID) -> SweepResult:
    """
    Closed-form ratios along a strictly decreasing grid of q in (0, 1]:
        ratio_max_pmf = (||p||^2 + (||p|| - p(0))^2) / I_d  -> 1
        ratio_stam    = 1 / (N_d I_d)                       -> e^-2
    """
    grid = [float(q) for q in q_grid]
    if not grid:
        raise InputError("q grid is empty")
    for q in grid:
        if not 0.0 < q <= 1.0:
            raise InputError(f"q must lie in (0, 1], got {q}")
    if any(b >= a for a, b in zip(grid, grid[1:])):
        raise InputError(f"q grid must be strictly decreasing: {grid}")

    points = []
    for q in grid:
        oracle = geometric_oracle(q)
        top, p0 = oracle.max_pmf, q
        ratio_mp = (top * top + (top - p0) ** 2) / oracle.dfi
        ratio_stam = 1.0 / (oracle.entropy_power * oracle.dfi)
        points.append(SweepPoint(
            q=q,
            dfi=oracle.dfi,
            ratio_max_pmf=ratio_mp,
            ratio_stam=ratio_stam,
            residual_max_pmf=abs(ratio_mp - 1.0),
            residual_stam=abs(ratio_stam - STAM_LIMIT),
            dfi_smallq_residual=dfi_smallq_residual(q) if q <= 0.5 else None,
        ))
        logger.info(f"q={q:.3g}: ratio_max_pmf={ratio_mp:.9f} ratio_stam={ratio_stam:.9f}")
    return SweepResult(points=points)
