"""Subcommands: simplex search for extremal pmfs, and its brute-force grid oracle."""

import argparse

from analysis.optimizer import brute_force_grid, maximize_max_pmf_ratio, minimize_stam_product
from cli.output import emit
from schemas.reports import OptimizeResult
from schemas.run_config import RunConfig

COLUMNS = ["label", "objective_name", "index", "start", "objective", "passes", "converged"]


def register(subparsers, parents: list[argparse.ArgumentParser]) -> None:
    parser = subparsers.add_parser("optimize", parents=parents, help="Search the simplex for small N_d*I_d (conjecture data)")
    parser.add_argument("--support", type=int, default=2)
    parser.add_argument("--restarts", type=int, default=8)
    parser.add_argument("--step-tol", type=float, default=1e-12)
    parser.add_argument("--objective", choices=["stam", "max-pmf-ratio"], default="stam")

    grid = subparsers.add_parser("grid", parents=parents, help="Exhaustive lattice scan of N_d*I_d on 2 or 3 coordinates")
    grid.add_argument("--support", type=int, choices=[2, 3], default=2)
    grid.add_argument("--step", type=float, default=1e-3)


def _emit_result(config: RunConfig, result: OptimizeResult, title: str) -> None:
    rows = [
        {"label": result.label, "objective_name": result.objective_name, **rec.model_dump()}
        for rec in result.restarts
    ]
    notes = [
        f"  best {result.objective_name} = {result.objective!r} (support {result.support_size}, "
        f"converged {result.converged})",
        "  witness = [" + ", ".join(repr(v) for v in result.witness.values) + "]",
    ]
    emit(config, result, COLUMNS, rows, title=title, notes=notes)


def cmd_optimize(config: RunConfig) -> int:
    search = minimize_stam_product if config.objective == "stam" else maximize_max_pmf_ratio
    result = search(
        config.support,
        restarts=config.restarts,
        step_tol=config.step_tol,
        seed=config.seed,
        workers=config.workers,
    )
    _emit_result(config, result, title="Simplex search (conjecture data, not a proof)")
    return 0


def cmd_grid(config: RunConfig) -> int:
    result = brute_force_grid(config.support, config.step)
    _emit_result(config, result, title=f"Grid scan on {config.support} coordinates, step {config.step!r}")
    return 0
