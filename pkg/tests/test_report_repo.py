"""
Tests for table and report rendering
"""

import json

import pytest

from polybohr.core.exceptions import ArgumentError
from polybohr.models.suite import ProbeResult, SuiteReport, Violation
from polybohr.repositories.report_repo import (
    REPORT_COLUMNS,
    format_number,
    render_reports,
    render_table,
    write_text,
)


def _report(passed: bool) -> SuiteReport:
    violations = [] if passed else [
        Violation(seed=1, trial=0, check="demo", parameters={"r": 0.5}, lhs=1.5, rhs=1.0, slack=0.5)]
    return SuiteReport(suite="demo", seed=1, trials=2, cases_run=4, tolerance=1e-8, violations=violations,
                       max_slack_used=0.5 if violations else -0.1,
                       probes=[ProbeResult(name="p", value=1.0, expected="1", ok=True)], passed=passed)


def test_format_number():
    assert format_number(1.0 / 3.0) == "0.333333333333"
    assert format_number(1.0 / 3.0, digits=3) == "0.333"
    assert format_number(True) == "true"
    assert format_number(None) == ""
    assert format_number(7) == "7"
    assert format_number(0.5 - 0.25j) == "0.5-0.25j"


def test_render_csv():
    text = render_table([{"r": 0.5, "value": 1.0}, {"r": 0.25}], ["r", "value"])
    assert text == "r,value\n0.5,1\n0.25,\n"


def test_render_json():
    records = json.loads(render_table([{"z": 1 + 2j, "k": 3}], ["k", "z"], "json"))
    assert records == [{"k": 3, "z": [1.0, 2.0]}]


def test_unknown_format():
    with pytest.raises(ArgumentError):
        render_table([], ["a"], "xml")


def test_render_reports_json_and_csv():
    reports = [_report(True), _report(False)]
    decoded = json.loads(render_reports(reports, "json"))
    assert [r["passed"] for r in decoded] == [True, False]
    assert decoded[1]["violations"][0]["check"] == "demo"
    lines = render_reports(reports, "csv").splitlines()
    assert lines[0] == ",".join(REPORT_COLUMNS)
    assert lines[2].startswith("demo,false,4,1,0.5,")


def test_report_consistency_is_validated():
    with pytest.raises(ValueError):
        SuiteReport(suite="demo", seed=1, trials=1, tolerance=1e-8, passed=False)


def test_write_text(tmp_path, capsys):
    write_text("a,b\n", None)
    assert capsys.readouterr().out == "a,b\n"
    target = tmp_path / "out.csv"
    write_text("a,b\n", target)
    assert target.read_text() == "a,b\n"
    with pytest.raises(ArgumentError):
        write_text("x", tmp_path / "missing" / "out.csv")
