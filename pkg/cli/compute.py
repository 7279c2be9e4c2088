"""Subcommand: compute every quantity of one pmf, with oracle comparison where available."""

import argparse
import logging

from cli.inputs import load_input_pmf
from cli.output import emit
from schemas.reports import ComputeResult
from schemas.run_config import RunConfig
from services.families import compare_with_oracle, oracle_for
from services.quantities import quantity_report

logger = logging.getLogger(__name__)

COLUMNS = ["quantity", "value", "oracle", "difference"]


def register(subparsers, parents: list[argparse.ArgumentParser]) -> None:
    parser = subparsers.add_parser("compute", parents=parents, help="Compute DFI, entropy, moments and related quantities")
    add_input_arguments(parser)


def add_input_arguments(parser: argparse.ArgumentParser) -> None:
    source = parser.add_mutually_exclusive_group(required=True)
    source.add_argument("--family", help="Family spec, e.g. uniform:4, geometric:0.25, binomial:10,0.3")
    source.add_argument("--pmf-file", help="JSON {values, tail_mass_bound} or one probability per line")


def cmd_compute(config: RunConfig) -> int:
    p, source = load_input_pmf(config)
    report = quantity_report(p)
    oracle = oracle_for(p.origin, config.eps_tail)
    comparison = compare_with_oracle(report, oracle) if oracle is not None else []
    logger.info(f"Computed quantities for {source}: dfi={report.dfi!r}")

    by_field = {row.field: row for row in comparison}
    rows = []
    for name, value in report.model_dump().items():
        match = by_field.get(name)
        rows.append({
            "quantity": name,
            "value": value,
            "oracle": match.oracle if match else None,
            "difference": match.difference if match else None,
        })

    emit(
        config,
        ComputeResult(source=source, report=report, oracle=oracle, comparison=comparison),
        COLUMNS,
        rows,
        title=f"Quantities for {source}",
    )
    return 0
