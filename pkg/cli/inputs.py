"""Resolving the pmf a subcommand operates on."""

from schemas.pmf import Pmf
from schemas.run_config import RunConfig
from services.pmf import from_family, parse_family_spec, require_valid
from services.pmf_io import load_pmf_file


def load_input_pmf(config: RunConfig) -> tuple[Pmf, str]:
    """The pmf named by --family or --pmf-file, validated, with a label for reports."""
    if config.family is not None:
        family = parse_family_spec(config.family)
        return from_family(family, config.eps_tail), family.label
    # a file's tail bound is judged against the invocation's eps_tail
    p = load_pmf_file(config.pmf_file).model_copy(update={"eps_tail": config.eps_tail})
    return require_valid(p), f"file:{config.pmf_file}"
