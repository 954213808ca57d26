"""
File Access Layer (Repositories)
"""

from polybohr.repositories.polynomial_repo import (
    parse_polynomial,
    dump_polynomial,
    load_polynomial,
    save_polynomial,
)

from polybohr.repositories.report_repo import (
    format_number,
    render_table,
    render_reports,
    write_text,
)

__all__ = [
    # Polynomial repository
    "parse_polynomial",
    "dump_polynomial",
    "load_polynomial",
    "save_polynomial",
    # Report repository
    "format_number",
    "render_table",
    "render_reports",
    "write_text",
]
