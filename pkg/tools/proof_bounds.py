"""Tool: intermediate bounds that the Cramér-Rao and Stam arguments chain together.

Each is checked numerically on its own, so a failure localizes which step of
an argument a pmf breaks.
"""

import logging
import math

import numpy as np

from config import settings
from schemas.pmf import Pmf
from schemas.reports import InequalityCheck, QuantityReport
from tools.base import build_check, report_for

logger = logging.getLogger(__name__)


def _split_dfi(p: Pmf, m: int) -> tuple[float, float]:
    """4 sum_{i<m} (D phi(i))^2 and 4 sum_{i>=m} (D phi(i))^2."""
    phi = np.sqrt(p.array)
    diffs = np.diff(phi)
    sq = (diffs * diffs).tolist()
    upper = sq[m:]
    if p.is_exact:
        upper.append(float(phi[-1]) ** 2)
    return 4.0 * math.fsum(sq[:m]), 4.0 * math.fsum(upper)


def check_v_identity(p: Pmf, report: QuantityReport | None = None) -> InequalityCheck:
    """-sum (i - mu)(p(i+1) - p(i)) = 1 - (mu+1) p(0)."""
    r = report_for(p, report)
    values = np.append(p.array, 0.0)
    i = np.arange(p.support_length, dtype=np.float64)
    v = -math.fsum(((i - r.mean) * np.diff(values)).tolist())
    check = build_check("cramer_rao_v_identity", v, 1.0 - (r.mean + 1.0) * r.p0, strict=False)
    # an identity: both directions must hold
    return check.model_copy(update={
        "satisfied": abs(check.gap) <= 1e-9,
        "equality_case": abs(check.gap) <= 1e-9,
    })


def check_max_pmf_parts(p: Pmf, report: QuantityReport | None = None) -> list[InequalityCheck]:
    """
    Split at m = argmax:
        4 sum_{i>=m} (D phi)^2 > ||p||^2
        4 sum_{i<m}  (D phi)^2 >= (||p|| - p(0))^2
    Their sum is the max-pmf bound.
    """
    r = report_for(p, report)
    lower, upper = _split_dfi(p, r.argmax)
    top = r.max_pmf
    return [
        build_check("max_pmf_upper_part", upper, top * top, strict=True),
        build_check("max_pmf_lower_part", lower, (top - r.p0) ** 2, strict=False, tol=1e-12),
    ]


def check_entropy_power_max(p: Pmf, report: QuantityReport | None = None) -> InequalityCheck:
    """N_d(p) >= 1 / ||p||^2, with relative rounding slack."""
    r = report_for(p, report)
    rhs = 1.0 / (r.max_pmf * r.max_pmf)
    return build_check("entropy_power_max_bound", r.entropy_power, rhs, strict=False, tol=1e-12 * rhs)


def check_stam_type_intermediate(p: Pmf, report: QuantityReport | None = None) -> InequalityCheck:
    """I_d + 2 ||p|| p(0) - p(0)^2 > 2 ||p||^2."""
    r = report_for(p, report)
    top = r.max_pmf
    lhs = r.dfi + 2.0 * top * r.p0 - r.p0 * r.p0
    return build_check("stam_type_intermediate", lhs, 2.0 * top * top, strict=True)


def proof_bounds(p: Pmf, report: QuantityReport | None = None) -> list[InequalityCheck]:
    """Every intermediate bound applicable to p."""
    r = report_for(p, report)
    checks = []
    if p.tail_mass_bound <= settings.VARIANCE_CHECK_TAIL:
        checks.append(check_v_identity(p, r))
    else:
        logger.warning(f"Skipping V identity: tail bound {p.tail_mass_bound!r} too large")
    checks.extend(check_max_pmf_parts(p, r))
    checks.append(check_entropy_power_max(p, r))
    checks.append(check_stam_type_intermediate(p, r))
    return checks
