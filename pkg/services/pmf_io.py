"""Reading pmfs from files: a JSON object or one probability per line."""

import json
import logging
import math
from pathlib import Path

from pydantic import ValidationError

from errors import InputError
from schemas.pmf import Pmf

logger = logging.getLogger(__name__)


def _check_entries(values: list, source: str) -> list[float]:
    if not values:
        raise InputError(f"{source}: no probabilities found")
    checked = []
    for i, v in enumerate(values):
        if isinstance(v, bool) or not isinstance(v, (int, float)):
            raise InputError(f"{source}: entry {i} is not a number: {v!r}")
        v = float(v)
        if not math.isfinite(v):
            raise InputError(f"{source}: entry {i} is not finite")
        if v < 0.0:
            raise InputError(f"{source}: entry {i} is negative ({v!r})")
        checked.append(v)
    return checked


def parse_pmf_text(text: str, source: str = "<text>") -> Pmf:
    """
    Parse either shape:
        {"values": [0.5, 0.5], "tail_mass_bound": 0.0}
        plain text, one probability per line (tail bound 0)
    """
    stripped = text.strip()
    if stripped.startswith("{"):
        try:
            doc = json.loads(stripped)
        except json.JSONDecodeError as e:
            raise InputError(f"{source}: invalid JSON: {e}") from e
        if not isinstance(doc.get("values"), list):
            raise InputError(f"{source}: JSON document needs a 'values' list")
        values = _check_entries(doc["values"], source)
        tail = doc.get("tail_mass_bound", 0.0)
        if isinstance(tail, bool) or not isinstance(tail, (int, float)) or not math.isfinite(tail) or tail < 0:
            raise InputError(f"{source}: tail_mass_bound must be a nonnegative finite number")
    else:
        raw = []
        for lineno, line in enumerate(stripped.splitlines(), start=1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            try:
                raw.append(float(line))
            except ValueError as e:
                raise InputError(f"{source}: line {lineno} is not a number: {line!r}") from e
        values = _check_entries(raw, source)
        tail = 0.0

    try:
        return Pmf(values=tuple(values), tail_mass_bound=float(tail))
    except ValidationError as e:
        raise InputError(f"{source}: {e}") from e


def load_pmf_file(path: str | Path) -> Pmf:
    """Read a pmf file; raises InputError on anything malformed."""
    path = Path(path)
    logger.info(f"Loading pmf from {path}")
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        logger.error(f"Cannot read pmf file {path}: {e}")
        raise InputError(f"Cannot read pmf file {path}: {e}") from e
    except UnicodeDecodeError as e:
        logger.error(f"Pmf file {path} is not UTF-8 text: {e}")
        raise InputError(f"Pmf file {path} is not UTF-8 text: {e}") from e
    return parse_pmf_text(text, source=str(path))
