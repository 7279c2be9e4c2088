"""Tool: I_d(p) > ||p||^2 + (||p|| - p(0))^2."""

from schemas.pmf import Pmf
from schemas.reports import InequalityCheck, QuantityReport
from tools.base import build_check, report_for


def check_max_pmf(p: Pmf, report: QuantityReport | None = None) -> InequalityCheck:
    r = report_for(p, report)
    top = r.max_pmf
    return build_check("max_pmf_bound", r.dfi, top * top + (top - r.p0) ** 2, strict=True)
