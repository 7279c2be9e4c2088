"""Subcommand: geometric q -> 0 tightness sweep."""

import argparse

from analysis.tightness import DEFAULT_Q_GRID, geometric_sweep
from cli.output import emit
from errors import InputError
from schemas.run_config import RunConfig

COLUMNS = [
    "q", "dfi", "ratio_max_pmf", "ratio_stam",
    "residual_max_pmf", "residual_stam", "dfi_smallq_residual",
]


def parse_float_list(text: str, what: str) -> list[float]:
    try:
        return [float(part) for part in text.split(",") if part.strip()]
    except ValueError as e:
        raise InputError(f"Malformed {what} '{text}': {e}") from e


def register(subparsers, parents: list[argparse.ArgumentParser]) -> None:
    parser = subparsers.add_parser("sweep", parents=parents, help="Ratios of the max-pmf and Stam bounds along geometric q -> 0")
    parser.add_argument(
        "--q-grid",
        default=",".join(repr(q) for q in DEFAULT_Q_GRID),
        help="Comma-separated, strictly decreasing values in (0, 1]",
    )


def cmd_sweep(config: RunConfig) -> int:
    result = geometric_sweep(config.q_grid)
    emit(
        config,
        result,
        COLUMNS,
        [point.model_dump() for point in result.points],
        title="Geometric sweep (limits: ratio_max_pmf -> 1, ratio_stam -> e^-2)",
    )
    return 0
