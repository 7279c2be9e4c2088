"""Shared construction of InequalityCheck results."""

from schemas.pmf import Pmf
from schemas.reports import CheckName, InequalityCheck, QuantityReport
from services.quantities import quantity_report

# Slack granted to non-strict bounds for rounding
NONSTRICT_TOL = 1e-9
# |gap| and both sides below this count as equality
EQUALITY_TOL = 1e-10


def report_for(p: Pmf, report: QuantityReport | None) -> QuantityReport:
    """Reuse a precomputed report or compute one (which validates p)."""
    return report if report is not None else quantity_report(p)


def build_check(
    name: CheckName,
    lhs: float,
    rhs: float,
    strict: bool,
    tol: float = NONSTRICT_TOL,
) -> InequalityCheck:
    """
    Strict bounds need a positive floating-point gap, no tolerance.
    Non-strict bounds accept gap >= -tol.
    """
    gap = lhs - rhs
    satisfied = gap > 0.0 if strict else gap >= -tol
    equality = abs(gap) <= EQUALITY_TOL and abs(lhs) <= EQUALITY_TOL and abs(rhs) <= EQUALITY_TOL
    return InequalityCheck(
        name=name,
        lhs=lhs,
        rhs=rhs,
        gap=gap,
        strict=strict,
        satisfied=satisfied,
        equality_case=equality,
    )
