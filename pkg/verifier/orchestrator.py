"""Verification orchestrator.

Decides which inequality checks apply to a pmf, runs them in order, logs the
outcome of each, and aggregates seeded random corpora.
"""

import logging
from collections.abc import Sequence
from concurrent.futures import ThreadPoolExecutor

from analysis.sampling import DEFAULT_CONCENTRATIONS, random_corpus
from config import settings
from errors import DfiError, InconsistencyError, InputError
from schemas.pmf import Pmf
from schemas.reports import CheckSummary, CorpusSummary, CorpusViolation, InequalityCheck, QuantityReport
from services.quantities import quantity_report
from tools.cramer_rao import SIMPLIFIED_P0_TOL, check_cramer_rao, check_cramer_rao_simplified
from tools.max_pmf import check_max_pmf
from tools.proof_bounds import proof_bounds
from tools.stam import check_stam, check_stam_type

logger = logging.getLogger(__name__)

_CHECKS = {
    "cramer_rao": check_cramer_rao,
    "cramer_rao_simplified": check_cramer_rao_simplified,
    "max_pmf_bound": check_max_pmf,
    "stam": check_stam,
    "stam_type": check_stam_type,
}


def _determine_checks(p: Pmf, report: QuantityReport) -> list[dict]:
    """
    Decide which checks apply.

    Rules:
    1. Cramér-Rao whenever the tail is small enough to trust the variance
    2. Its simplified form only when p(0) is zero
    3. Max-pmf, Stam and Stam-type always
    """
    checks = []

    if p.tail_mass_bound <= settings.VARIANCE_CHECK_TAIL:
        checks.append({
            "name": "cramer_rao",
            "reasoning": f"Tail bound {p.tail_mass_bound:.1e} keeps the variance trustworthy.",
        })
        if report.p0 <= SIMPLIFIED_P0_TOL:
            checks.append({
                "name": "cramer_rao_simplified",
                "reasoning": "p(0) = 0, so the Cramér-Rao bound reduces to (sigma^2 + 1/2) I_d >= 1.",
            })
    else:
        logger.warning(f"Skipping Cramér-Rao checks: tail bound {p.tail_mass_bound!r} too large for the variance")

    checks.append({"name": "max_pmf_bound", "reasoning": "Holds for every pmf."})
    checks.append({"name": "stam", "reasoning": "Holds for every pmf."})
    checks.append({"name": "stam_type", "reasoning": "Holds for every pmf."})
    return checks


def _run_checks(p: Pmf, report: QuantityReport, include_proof_bounds: bool) -> list[InequalityCheck]:
    results = []
    for plan in _determine_checks(p, report):
        name = plan["name"]
        logger.debug(f"Running {name}: {plan['reasoning']}")
        try:
            results.append(_CHECKS[name](p, report))
        except DfiError:
            raise
        except Exception as e:
            logger.error(f"Check {name} crashed: {str(e)}")
            raise InconsistencyError(f"check {name} crashed: {e}") from e
    if include_proof_bounds:
        results.extend(proof_bounds(p, report))
    return results


def check_all(p: Pmf, include_proof_bounds: bool = False) -> list[InequalityCheck]:
    """Run every applicable check on p and return all results."""
    report = quantity_report(p)
    origin = p.origin.label if p.origin is not None else "explicit pmf"

    logger.info("=" * 60)
    logger.info(f"VERIFY: {origin}, support {p.support_length}")
    logger.info("=" * 60)

    results = _run_checks(p, report, include_proof_bounds)
    for check in results:
        if check.satisfied:
            logger.info(f"  ✓ {check.name}: gap {check.gap:.6g}")
        else:
            logger.warning(f"  ✗ {check.name}: gap {check.gap:.6g}")

    satisfied = sum(c.satisfied for c in results)
    logger.info(f"VERIFY COMPLETE: {satisfied}/{len(results)} satisfied")
    return results


def _check_corpus_item(item: tuple[int, Pmf]) -> tuple[int, Pmf, list[InequalityCheck]]:
    index, p = item
    checks = _run_checks(p, quantity_report(p), include_proof_bounds=False)
    logger.debug(f"corpus #{index}: support {p.support_length}, {sum(c.satisfied for c in checks)}/{len(checks)}")
    return index, p, checks


def run_corpus(
    seed: int,
    size: int,
    supports: tuple[int, int] = (1, 64),
    concentrations: Sequence[float] = DEFAULT_CONCENTRATIONS,
    workers: int | None = None,
) -> CorpusSummary:
    """check_all over a seeded Dirichlet corpus; summaries keep first-seen check order."""
    if size < 1:
        raise InputError(f"corpus size must be >= 1, got {size}")
    workers = settings.WORKERS if workers is None else workers
    logger.info(f"Checking {size} random pmfs (seed {seed}, supports {supports}, concentrations {list(concentrations)})")

    corpus = random_corpus(seed, size, supports, concentrations)
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            outcomes = list(pool.map(_check_corpus_item, corpus))
    else:
        outcomes = [_check_corpus_item(item) for item in corpus]

    summaries: dict[str, CheckSummary] = {}
    violations: list[CorpusViolation] = []
    for index, p, checks in outcomes:
        for check in checks:
            summary = summaries.setdefault(check.name, CheckSummary(name=check.name))
            summary.checks += 1
            summary.min_gap = check.gap if summary.min_gap is None else min(summary.min_gap, check.gap)
            summary.equality_cases += check.equality_case
            if not check.satisfied:
                summary.violations += 1
                violations.append(CorpusViolation(index=index, check=check.name, gap=check.gap, pmf=p))
                logger.warning(f"  ✗ corpus #{index}: {check.name} gap {check.gap!r}")

    result = CorpusSummary(seed=seed, size=size, summaries=list(summaries.values()), violations=violations)
    logger.info(f"Corpus complete: {len(violations)} violation(s)")
    return result
