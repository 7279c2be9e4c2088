from services.pmf import validate, require_valid, from_family, shifted, parse_family_spec
from services.pmf_io import load_pmf_file, parse_pmf_text
from services.quantities import dfi_direct, dfi_autocorr, hellinger_sq, quantity_report
from services.families import oracle_for, compare_with_oracle

__all__ = [
    "validate", "require_valid", "from_family", "shifted", "parse_family_spec",
    "load_pmf_file", "parse_pmf_text",
    "dfi_direct", "dfi_autocorr", "hellinger_sq", "quantity_report",
    "oracle_for", "compare_with_oracle",
]
