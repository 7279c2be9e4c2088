"""Tool: discrete Cramér-Rao-type bound and its p(0) = 0 simplification."""

import logging

from config import settings
from errors import PreconditionError
from schemas.pmf import Pmf
from schemas.reports import InequalityCheck, QuantityReport
from tools.base import build_check, report_for

logger = logging.getLogger(__name__)

# p(0) at or below this counts as zero for the simplified form
SIMPLIFIED_P0_TOL = 1e-12


def _require_small_tail(p: Pmf, name: str) -> None:
    # a tail can hide unbounded variance error
    if p.tail_mass_bound > settings.VARIANCE_CHECK_TAIL:
        raise PreconditionError(
            f"{name} needs tail bound <= {settings.VARIANCE_CHECK_TAIL}, got {p.tail_mass_bound!r}"
        )


def check_cramer_rao(p: Pmf, report: QuantityReport | None = None) -> InequalityCheck:
    """
    (sigma^2 + 1/2 - (mu+1)^2 p(0) / 2) I_d >= (1 - (mu+1) p(0))^2

    Equality holds only for the point mass at 0, where both sides are 0.
    """
    _require_small_tail(p, "cramer_rao")
    r = report_for(p, report)
    shift = r.mean + 1.0
    lhs = (r.variance + 0.5 - shift * shift / 2.0 * r.p0) * r.dfi
    rhs = (1.0 - shift * r.p0) ** 2
    check = build_check("cramer_rao", lhs, rhs, strict=False)
    if check.equality_case:
        logger.info(f"Cramér-Rao equality case reached (p(0)={r.p0!r})")
    return check


def check_cramer_rao_simplified(p: Pmf, report: QuantityReport | None = None) -> InequalityCheck:
    """(sigma^2 + 1/2) I_d >= 1, for pmfs with p(0) = 0."""
    _require_small_tail(p, "cramer_rao_simplified")
    if p.p0 > SIMPLIFIED_P0_TOL:
        raise PreconditionError(f"simplified Cramér-Rao form needs p(0) = 0, got {p.p0!r}")
    r = report_for(p, report)
    return build_check("cramer_rao_simplified", (r.variance + 0.5) * r.dfi, 1.0, strict=False)
