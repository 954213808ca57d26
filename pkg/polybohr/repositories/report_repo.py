"""
Report repository - CSV and JSON rendering of tables and suite reports
"""

import csv
import io
import json
import logging
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Union

from polybohr.core.config import settings
from polybohr.core.exceptions import ArgumentError
from polybohr.models.suite import SuiteReport

logger = logging.getLogger(__name__)


def format_number(value: Any, digits: Optional[int] = None) -> str:
    """Locale-independent text of a table cell; floats get PRINT_DIGITS significant digits"""
    digits = settings.PRINT_DIGITS if digits is None else digits
    if isinstance(value, bool) or value is None:
        return "" if value is None else str(value).lower()
    if isinstance(value, complex):
        return f"{value.real:.{digits}g}{value.imag:+.{digits}g}j"
    if isinstance(value, float):
        return f"{value:.{digits}g}"
    return str(value)


def render_csv(rows: Sequence[Dict[str, Any]], columns: Sequence[str]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([format_number(row.get(col)) for col in columns])
    return buffer.getvalue()


def _json_value(value: Any) -> Any:
    if isinstance(value, complex):
        return [value.real, value.imag]
    return value


def render_json(rows: Sequence[Dict[str, Any]], columns: Sequence[str]) -> str:
    records = [{col: _json_value(row.get(col)) for col in columns} for row in rows]
    return json.dumps(records, indent=2) + "\n"


def render_table(rows: Sequence[Dict[str, Any]], columns: Sequence[str], fmt: str = "csv") -> str:
    """
    Render rows as CSV or JSON

    Args:
        rows: One dict per row
        columns: Column order
        fmt: csv or json

    Returns:
        str: the document text
    """
    if fmt == "csv":
        return render_csv(rows, columns)
    if fmt == "json":
        return render_json(rows, columns)
    raise ArgumentError(f"unknown format {fmt}, expected csv or json")


def render_reports(reports: Sequence[SuiteReport], fmt: str = "json") -> str:
    """Suite reports as a JSON list, or a CSV summary with one row per suite"""
    if fmt == "json":
        return json.dumps([r.model_dump(mode="json") for r in reports], indent=2) + "\n"
    rows = [{
        "suite": r.suite,
        "passed": r.passed,
        "cases_run": r.cases_run,
        "violations": len(r.violations),
        "max_slack_used": r.max_slack_used,
        "tolerance": r.tolerance,
        "rhs_scale": r.rhs_scale,
        "seed": r.seed,
        "trials": r.trials,
    } for r in reports]
    return render_table(rows, REPORT_COLUMNS, fmt)


REPORT_COLUMNS: List[str] = [
    "suite", "passed", "cases_run", "violations", "max_slack_used", "tolerance", "rhs_scale", "seed", "trials",
]


def write_text(text: str, path: Optional[Union[str, Path]]) -> None:
    """Write to path, or to stdout when path is None"""
    if path is None:
        print(text, end="")
        return
    try:
        Path(path).write_text(text, encoding="utf-8")
    except OSError as e:
        logger.error(f"Error writing {path}: {str(e)}")
        raise ArgumentError(f"cannot write {path}: {str(e)}")
    logger.info(f"Wrote {len(text)} characters to {path}")
