"""Rendering of subcommand results as JSON, CSV or plain text.

Output carries no timestamps or other run-dependent data, so identical
inputs give byte-identical files.
"""

import csv
import io
import json
import logging
import sys
from pathlib import Path

from pydantic import BaseModel

from schemas.run_config import RunConfig

logger = logging.getLogger(__name__)


def fmt_value(value) -> str:
    """Floats with 17 significant digits (round-trip exact); None as empty."""
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return format(value, ".17g")
    return str(value)


def render_json(payload: BaseModel) -> str:
    return json.dumps(payload.model_dump(mode="json"), indent=2, ensure_ascii=False) + "\n"


def render_csv(columns: list[str], rows: list[dict]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([fmt_value(row.get(col)) for col in columns])
    return buf.getvalue()


def render_plain(title: str, columns: list[str], rows: list[dict], notes: list[str] | None = None) -> str:
    lines = [title]
    lines.extend(notes or [])
    if len(rows) == 1:
        width = max(len(col) for col in columns)
        lines.extend(f"  {col:<{width}} : {fmt_value(rows[0].get(col))}" for col in columns)
    else:
        for row in rows:
            lines.append("  " + "  ".join(f"{col}={fmt_value(row.get(col))}" for col in columns))
    return "\n".join(lines) + "\n"


def emit(
    config: RunConfig,
    payload: BaseModel,
    columns: list[str],
    rows: list[dict],
    title: str,
    notes: list[str] | None = None,
) -> None:
    """Render in the configured format and write to --output or stdout."""
    if config.output_format == "json":
        text = render_json(payload)
    elif config.output_format == "csv":
        text = render_csv(columns, rows)
    else:
        text = render_plain(title, columns, rows, notes)

    if config.output:
        path = Path(config.output)
        with path.open("w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
        logger.info(f"Wrote {config.output_format} output to {path}")
    else:
        sys.stdout.write(text)
