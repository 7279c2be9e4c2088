"""Subcommand: run every check over a seeded random corpus."""

import argparse
import json
import logging
from pathlib import Path

from cli.output import emit
from schemas.run_config import RunConfig
from verifier.orchestrator import run_corpus

logger = logging.getLogger(__name__)

COLUMNS = ["name", "checks", "min_gap", "violations", "equality_cases"]


def register(subparsers, parents: list[argparse.ArgumentParser]) -> None:
    parser = subparsers.add_parser("random-check", parents=parents, help="Check all bounds on seeded Dirichlet pmfs")
    parser.add_argument("--n", type=int, default=1000, help="Corpus size")
    parser.add_argument("--support", type=int, help="Fixed support size (overrides the range)")
    parser.add_argument("--min-support", type=int, default=1)
    parser.add_argument("--max-support", type=int, default=64)
    parser.add_argument("--concentration", default="0.1,1,10", help="Comma-separated Dirichlet concentrations")
    parser.add_argument("--witness-file", default="violations.json", help="Where violating pmfs are written")


def cmd_random_check(config: RunConfig) -> int:
    """Exit 0 with no violations; 1 and a witness dump otherwise."""
    summary = run_corpus(
        config.seed,
        config.corpus_size,
        supports=(config.min_support, config.max_support),
        concentrations=config.concentrations,
        workers=config.workers,
    )
    notes = [f"  seed={config.seed} size={config.corpus_size} violations={len(summary.violations)}"]
    emit(
        config,
        summary,
        COLUMNS,
        [s.model_dump() for s in summary.summaries],
        title="Random corpus check",
        notes=notes,
    )
    if summary.violations:
        path = Path(config.witness_file)
        records = [v.model_dump(mode="json") for v in summary.violations]
        with path.open("w", encoding="utf-8", newline="\n") as fh:
            fh.write(json.dumps(records, indent=2) + "\n")
        logger.error(f"{len(records)} violation(s); witnesses written to {path}")
        return 1
    return 0
