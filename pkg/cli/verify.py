"""Subcommand: check every applicable inequality on one pmf."""

import argparse
import logging

from cli.compute import add_input_arguments
from cli.inputs import load_input_pmf
from cli.output import emit
from schemas.reports import VerifyResult
from schemas.run_config import RunConfig
from verifier.orchestrator import check_all

logger = logging.getLogger(__name__)

COLUMNS = ["name", "lhs", "rhs", "gap", "strict", "satisfied", "equality_case"]


def register(subparsers, parents: list[argparse.ArgumentParser]) -> None:
    parser = subparsers.add_parser("verify", parents=parents, help="Check the Cramér-Rao, max-pmf, Stam and Stam-type bounds")
    add_input_arguments(parser)
    parser.add_argument("--proof-bounds", action="store_true", help="Also check the intermediate bounds")


def cmd_verify(config: RunConfig) -> int:
    """Exit 0 when every check holds, 1 when any fails."""
    p, source = load_input_pmf(config)
    checks = check_all(p, include_proof_bounds=config.proof_bounds)
    all_ok = all(c.satisfied for c in checks)

    notes = ["  equality case: point mass at 0"] if any(c.equality_case for c in checks) else []
    emit(
        config,
        VerifyResult(source=source, all_satisfied=all_ok, checks=checks),
        COLUMNS,
        [c.record() for c in checks],
        title=f"Inequality checks for {source}: {'all satisfied' if all_ok else 'VIOLATION'}",
        notes=notes,
    )
    if not all_ok:
        failed = [c.name for c in checks if not c.satisfied]
        logger.error(f"Violated: {', '.join(failed)}")
        return 1
    return 0
