"""
Tests for the randomized verification suites
"""

import time

import numpy as np
import pytest

from polybohr.core.config import settings
from polybohr.core.exceptions import ArgumentError
from polybohr.models.polynomial import FreePolynomial
from polybohr.models.words import MultiWord
from polybohr.services.verification_service import (
    SUITES,
    fejer_suite,
    harnack_suite,
    landau_op_suite,
    run_suites,
    wiener_suite,
)

# Suites held to the combined time budget at the default trial count
TIMED_SUITES = [
    "wiener",
    "landau_op",
    "bohr_mh",
    "bohr_numrad",
    "landau_polydisc",
    "harnack",
    "re_bridge",
    "bombieri_upper",
]


@pytest.mark.slow
@pytest.mark.parametrize("name", sorted(SUITES))
def test_suites_pass_on_few_trials(name):
    report = SUITES[name](seed=42, trials=3, workers=1)
    assert report.suite == name
    assert report.cases_run > 0
    assert report.violations == []
    assert report.passed
    assert report.max_slack_used is not None and report.max_slack_used <= report.tolerance


@pytest.mark.slow
@pytest.mark.parametrize("name", sorted(SUITES))
def test_suites_pass_at_default_trials(name):
    report = SUITES[name](seed=settings.SEED)
    assert report.trials == settings.TRIALS
    assert report.violations == []
    assert report.passed


@pytest.mark.slow
def test_timed_suites_run_within_budget():
    start = time.perf_counter()
    reports = run_suites(TIMED_SUITES, seed=settings.SEED, trials=max(settings.TRIALS, 500))
    elapsed = time.perf_counter() - start
    assert [r.suite for r in reports] == TIMED_SUITES
    assert all(r.passed for r in reports)
    assert elapsed < 60.0


def test_landau_perturbed_constant_is_detected():
    report = landau_op_suite(seed=42, trials=2, rhs_scale=0.75, workers=1)
    assert not report.passed
    assert any(v.check == "landau_mobius" and v.trial == -1 for v in report.violations)
    assert report.rhs_scale == 0.75


def test_wiener_probes_are_near_sharp():
    report = wiener_suite(seed=1, trials=1, workers=1)
    assert report.probes
    assert all(p.ok for p in report.probes)


def test_harnack_poisson_probe_is_near_sharp():
    report = harnack_suite(seed=1, trials=1, workers=1)
    probe = next(p for p in report.probes if p.name == "harnack_poisson_c0.999")
    assert probe.value >= 0.95
    assert probe.value == pytest.approx(0.9907, abs=1e-3)


def test_fejer_extremal_probes():
    report = fejer_suite(seed=3, trials=1, workers=1, m_max=4)
    assert [p.name for p in report.probes] == [f"fejer_extremal_m{m}" for m in range(1, 5)]
    assert all(p.ok for p in report.probes)


def test_reports_do_not_depend_on_worker_count():
    serial = wiener_suite(seed=9, trials=4, workers=1)
    threaded = wiener_suite(seed=9, trials=4, workers=3)
    assert serial.model_dump() == threaded.model_dump()


def test_seed_changes_the_draws():
    a = wiener_suite(seed=1, trials=2, workers=1)
    b = wiener_suite(seed=2, trials=2, workers=1)
    assert a.max_slack_used != b.max_slack_used


def test_run_suites_selects_and_perturbs():
    reports = run_suites(["harnack", "wiener"], seed=5, trials=1, perturb={"wiener": 0.5}, workers=1)
    assert [r.suite for r in reports] == ["harnack", "wiener"]
    assert reports[0].rhs_scale == 1.0
    assert reports[1].rhs_scale == 0.5
    assert not reports[1].passed


def test_run_suites_rejects_unknown_names():
    with pytest.raises(ArgumentError):
        run_suites(["nope"], trials=1)
    with pytest.raises(ArgumentError):
        run_suites(["wiener"], trials=1, perturb={"nope": 0.5})


@pytest.mark.parametrize("kwargs", [{"trials": 0}, {"tol": 0.0}, {"rhs_scale": -1.0}])
def test_suite_arguments_are_validated(kwargs):
    with pytest.raises(ArgumentError):
        wiener_suite(seed=1, workers=1, **{"trials": 1, **kwargs})


@pytest.mark.parametrize("kernel_coeff,holds", [(0.0, True), (0.3, False)])
def test_landau_gram_check_with_singular_gap(mocker, kernel_coeff, holds):
    from polybohr.services import verification_service

    n = (1,)
    F = FreePolynomial(alphabet_sizes=n, coefficient_dim=2, terms={
        MultiWord.of(n, [[]]): np.diag([1.0, 0.5]).astype(complex),
        MultiWord.of(n, [[1]]): np.diag([kernel_coeff, 0.5]).astype(complex),
    })
    mocker.patch.object(verification_service, "_draw_shape", return_value=(n, 1))
    mocker.patch.object(verification_service, "gen_re_bounded", return_value=F)
    rng = mocker.Mock()
    rng.integers.return_value = 2

    checks = verification_service._landau_op_trial(rng, 1.0)
    gram = [(lhs, rhs) for name, lhs, rhs, _ in checks if name.startswith("landau_gram_")]
    assert len(gram) == 2
    for lhs, rhs in gram:
        assert rhs == pytest.approx(2.0)
        if holds:
            assert lhs - rhs <= 1e-12
        else:
            assert lhs - rhs == pytest.approx(kernel_coeff ** 2)


@pytest.mark.parametrize("seed", [0, 1, 2])
def test_re_bridge_checks_a_re_bounded_draw(seed):
    from polybohr.services.verification_service import _re_bridge_trial

    checks = _re_bridge_trial(np.random.default_rng(seed), 1.0)
    operator = [(lhs, rhs) for name, lhs, rhs, _ in checks if name == "re_bridge_operator"]
    assert len(operator) == 1
    lhs, rhs = operator[0]
    assert lhs - rhs <= 1e-10
