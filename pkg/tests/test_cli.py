"""
Tests for the command line
"""

import json
import math

import pytest

from polybohr.cli.deps import parse_grid, parse_int_list, parse_perturb, parse_point
from polybohr.cli.router import build_parser, main
from polybohr.core.exceptions import ArgumentError
from polybohr.models.polynomial import FreePolynomial
from polybohr.models.suite import SuiteReport
from polybohr.models.words import MultiWord
from polybohr.repositories.polynomial_repo import save_polynomial


@pytest.fixture
def shift_file(tmp_path):
    n = (1,)
    path = tmp_path / "shift.json"
    save_polynomial(FreePolynomial.from_scalars(n, {MultiWord.of(n, [[1]]): 1.0}), path)
    return path


@pytest.fixture
def constant_file(tmp_path):
    n = (2,)
    path = tmp_path / "constant.json"
    save_polynomial(FreePolynomial.from_scalars(n, {MultiWord.identity(n): -0.75}), path)
    return path


def _rows(text):
    header, *rows = text.strip().splitlines()
    return [dict(zip(header.split(","), row.split(","))) for row in rows]


def test_parse_helpers():
    assert parse_int_list("3") == [3]
    assert parse_int_list("1,2,4") == [1, 2, 4]
    assert parse_int_list("2..5") == [2, 3, 4, 5]
    assert parse_grid("0:1:3") == [0.0, 0.5, 1.0]
    assert parse_grid("0.1,0.2") == [0.1, 0.2]
    assert parse_point("0.1,0.2j;0.3") == [[0.1, 0.2j], [0.3]]
    assert parse_perturb(["landau_op=0.75"]) == {"landau_op": 0.75}
    for bad in (lambda: parse_int_list("a"), lambda: parse_grid("0:1:x"), lambda: parse_perturb(["x"])):
        with pytest.raises(ArgumentError):
            bad()


def test_every_command_is_registered():
    parser = build_parser()
    for command in ("radii", "bounds", "curve", "norm", "numrad", "eval", "verify", "suites"):
        args = parser.parse_args([command] + {"curve": ["C"], "norm": ["f"], "numrad": ["f"],
                                              "eval": ["f", "--point", "0"]}.get(command, []))
        assert callable(args.handler)


def test_radii_table(capsys):
    assert main(["radii", "--k", "1..2", "--m", "2"]) == 0
    rows = _rows(capsys.readouterr().out)
    assert [r["row"] for r in rows] == ["k", "k", "m"]
    assert float(rows[0]["gamma_k"]) == pytest.approx(1.0 / 3.0, abs=1e-10)
    assert float(rows[0]["t_k0"]) == pytest.approx(0.5, abs=1e-10)
    assert rows[0]["log_upper"] == ""
    assert float(rows[2]["t_m"]) == pytest.approx(0.5176, abs=1e-4)


def test_radii_output_is_byte_identical(tmp_path):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    assert main(["radii", "--k", "1..3", "--out", str(a)]) == 0
    assert main(["radii", "--k", "1..3", "--out", str(b), "--workers", "1"]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_bounds_json(capsys):
    assert main(["bounds", "--k", "1", "--format", "json"]) == 0
    record = json.loads(capsys.readouterr().out)[0]
    assert record["k"] == 1
    assert record["h_exact"] == pytest.approx(1.0 / 3.0)


def test_omega_curve_is_one_up_to_a_third(capsys):
    assert main(["curve", "Omega", "--r-grid", "0:0.3333:5"]) == 0
    assert all(float(r["value"]) == 1.0 for r in _rows(capsys.readouterr().out))


def test_K_curve_below_C(capsys):
    main(["curve", "K", "--k", "2", "--r-grid", "0.1,0.5,0.9"])
    k_values = [float(r["value"]) for r in _rows(capsys.readouterr().out)]
    main(["curve", "C", "--k", "2", "--r-grid", "0.1,0.5,0.9"])
    c_values = [float(r["value"]) for r in _rows(capsys.readouterr().out)]
    assert all(k <= c for k, c in zip(k_values, c_values))


def test_majorant_curve_needs_file(capsys):
    assert main(["curve", "D"]) == 2
    assert "needs --file" in capsys.readouterr().err


def test_majorant_curve_from_file(shift_file, capsys):
    assert main(["curve", "D", "--file", str(shift_file), "--r-grid", "0.25,0.5"]) == 0
    assert [float(r["value"]) for r in _rows(capsys.readouterr().out)] == pytest.approx([0.25, 0.5])


def test_norm_of_constant_and_shift(constant_file, shift_file, capsys):
    assert main(["norm", str(constant_file)]) == 0
    assert float(_rows(capsys.readouterr().out)[0]["value"]) == pytest.approx(0.75)
    assert main(["norm", str(shift_file), "--r", "0.4"]) == 0
    row = _rows(capsys.readouterr().out)[0]
    assert float(row["value"]) == pytest.approx(0.4)
    assert row["truncation"] == "5"


def test_norm_profile_is_monotone(shift_file, capsys):
    assert main(["norm", str(shift_file), "--profile", "--headroom", "3"]) == 0
    rows = _rows(capsys.readouterr().out)
    assert [r["truncation"] for r in rows] == ["1", "2", "3", "4"]


def test_numrad_of_shift(shift_file, capsys):
    assert main(["numrad", str(shift_file), "--trunc", "3"]) == 0
    value = float(_rows(capsys.readouterr().out)[0]["value"])
    assert value == pytest.approx(math.cos(math.pi / 5), abs=1e-6)


def test_eval_with_berezin(shift_file, capsys):
    assert main(["eval", str(shift_file), "--point", "0.5j", "--berezin", "--trunc", "30"]) == 0
    row = _rows(capsys.readouterr().out)[0]
    assert complex(row["value"]) == pytest.approx(0.5j)
    assert complex(row["berezin"]) == pytest.approx(0.5j, abs=1e-8)
    assert float(row["tail_bound"]) < 1e-8


def test_missing_file_exits_with_two(tmp_path, capsys):
    assert main(["norm", str(tmp_path / "missing.json")]) == 2
    assert "✗" in capsys.readouterr().err


def test_verify_exit_status(mocker, capsys):
    passing = SuiteReport(suite="wiener", seed=1, trials=1, tolerance=1e-8)
    run = mocker.patch("polybohr.cli.commands.verify.run_suites", return_value=[passing])
    assert main(["verify", "wiener", "--trials", "1"]) == 0
    assert json.loads(capsys.readouterr().out)[0]["passed"] is True
    assert run.call_args.kwargs["names"] == ["wiener"]

    run.return_value = [passing.model_copy(update={"passed": False})]
    assert main(["verify", "--perturb", "wiener=0.5"]) == 1
    assert run.call_args.kwargs["perturb"] == {"wiener": 0.5}


def test_verify_negative_control_end_to_end(capsys):
    assert main(["verify", "landau_op", "--trials", "1", "--perturb", "landau_op=0.75", "--workers", "1"]) == 1
    report = json.loads(capsys.readouterr().out)[0]
    assert report["violations"]


def test_verify_rejects_unknown_suite(capsys):
    assert main(["verify", "nope", "--trials", "1"]) == 2


@pytest.mark.parametrize("flags", [["--trunc", "3"], ["--headroom", "2"], ["--trunc", "3", "--headroom", "2"]])
def test_verify_rejects_truncation_flags(mocker, capsys, flags):
    run = mocker.patch("polybohr.cli.commands.verify.run_suites")
    assert main(["verify", "wiener", "--trials", "1", *flags]) == 2
    assert "✗" in capsys.readouterr().err
    run.assert_not_called()


def test_suites_listing(capsys):
    assert main(["suites"]) == 0
    names = [r["suite"] for r in _rows(capsys.readouterr().out)]
    assert "landau_op" in names and "bombieri_upper" in names
