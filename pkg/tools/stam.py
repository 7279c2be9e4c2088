"""Tool: discrete Stam inequality and the p(0)-corrected Stam-type variant."""

from schemas.pmf import Pmf
from schemas.reports import InequalityCheck, QuantityReport
from tools.base import build_check, report_for


def check_stam(p: Pmf, report: QuantityReport | None = None) -> InequalityCheck:
    """N_d(p) I_d(p) > 1."""
    r = report_for(p, report)
    return build_check("stam", r.entropy_power * r.dfi, 1.0, strict=True)


def check_stam_type(p: Pmf, report: QuantityReport | None = None) -> InequalityCheck:
    """
    N_d(p) (I_d(p) + 2p(0) - p(0)^2) / 2 > 1.

    With p(0) = 0 the left side is exactly half the Stam left side.
    """
    r = report_for(p, report)
    lhs = 0.5 * r.entropy_power * (r.dfi + 2.0 * r.p0 - r.p0 * r.p0)
    return build_check("stam_type", lhs, 1.0, strict=True)
