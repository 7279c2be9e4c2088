"""dfi: command-line entry point.

Subcommands: compute, verify, sweep, random-check, optimize, grid.
Exit codes: 0 ok, 1 inequality violation, 2 input error, 3 internal inconsistency.
"""

import argparse
import logging
import sys

from pydantic import ValidationError

import cli.compute
import cli.optimize
import cli.random_check
import cli.sweep
import cli.verify
from cli import cmd_compute, cmd_grid, cmd_optimize, cmd_random_check, cmd_sweep, cmd_verify
from cli.sweep import parse_float_list
from config import settings
from errors import DfiError, InputError
from schemas.run_config import RunConfig

logger = logging.getLogger(__name__)

COMMANDS = {
    "compute": cmd_compute,
    "verify": cmd_verify,
    "sweep": cmd_sweep,
    "random-check": cmd_random_check,
    "optimize": cmd_optimize,
    "grid": cmd_grid,
}


def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", dest="output_format", choices=["json", "csv", "plain"], default="plain")
    common.add_argument("--output", help="Write the result here instead of stdout")
    common.add_argument("--eps-tail", type=float, default=settings.EPS_TAIL, help="Truncation tail ceiling")
    common.add_argument("--seed", type=int, default=settings.DEFAULT_SEED)
    common.add_argument("--workers", type=int, default=settings.WORKERS)
    common.add_argument("--log-level", default=settings.LOG_LEVEL, help="DEBUG, INFO, WARNING or ERROR")
    return common


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="dfi", description="Discrete Fisher information toolkit")
    subparsers = parser.add_subparsers(dest="subcommand", required=True)

    # common options go on each subparser so they may follow the subcommand
    parents = [_common_options()]
    cli.compute.register(subparsers, parents)
    cli.verify.register(subparsers, parents)
    cli.sweep.register(subparsers, parents)
    cli.random_check.register(subparsers, parents)
    cli.optimize.register(subparsers, parents)
    return parser


def build_config(args: argparse.Namespace) -> RunConfig:
    """Translate parsed arguments into a validated RunConfig."""
    values = {
        "subcommand": args.subcommand,
        "eps_tail": args.eps_tail,
        "seed": args.seed,
        "output_format": args.output_format,
        "output": args.output,
        "workers": args.workers,
    }
    if args.subcommand in ("compute", "verify"):
        values.update(family=args.family, pmf_file=args.pmf_file)
    if args.subcommand == "verify":
        values["proof_bounds"] = args.proof_bounds
    elif args.subcommand == "sweep":
        values["q_grid"] = parse_float_list(args.q_grid, "--q-grid")
    elif args.subcommand == "random-check":
        values.update(
            corpus_size=args.n,
            min_support=args.support if args.support is not None else args.min_support,
            max_support=args.support if args.support is not None else args.max_support,
            concentrations=parse_float_list(args.concentration, "--concentration"),
            witness_file=args.witness_file,
        )
    elif args.subcommand == "optimize":
        values.update(
            support=args.support, restarts=args.restarts, step_tol=args.step_tol, objective=args.objective
        )
    elif args.subcommand == "grid":
        values.update(support=args.support, step=args.step)
    return RunConfig(**values)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)

    logging.basicConfig(
        level=getattr(logging, str(args.log_level).upper(), logging.WARNING),
        format="%(asctime)s | %(levelname)-7s | %(name)-25s | %(message)s",
        datefmt="%H:%M:%S",
        stream=sys.stderr,
    )

    try:
        config = build_config(args)
    except ValidationError as e:
        print(f"dfi: invalid arguments: {e}", file=sys.stderr)
        return InputError.exit_code
    except DfiError as e:
        print(f"dfi: {e}", file=sys.stderr)
        return e.exit_code

    logger.info(f"Running {config.subcommand} (format {config.output_format}, seed {config.seed})")
    try:
        return COMMANDS[config.subcommand](config)
    except DfiError as e:
        logger.error(f"{type(e).__name__}: {str(e)}")
        print(f"dfi: {e}", file=sys.stderr)
        return e.exit_code
    except OSError as e:
        print(f"dfi: {e}", file=sys.stderr)
        return InputError.exit_code


if __name__ == "__main__":
    sys.exit(main())
