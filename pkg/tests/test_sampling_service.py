"""
Tests for the seeded generators and polydisc helpers
"""

import logging

import numpy as np
import pytest

from polybohr.core.exceptions import ArgumentError
from polybohr.models.polynomial import Truncation
from polybohr.models.results import SpectralResult
from polybohr.services.fock_service import assemble, evaluate_scalar
from polybohr.services.sampling_service import (
    fejer_extremal_factor,
    gen_polydisc,
    gen_positive_trig,
    gen_re_bounded,
    gen_schur,
    mobius_coefficients,
    mobius_polynomial,
    polydisc_array,
    polydisc_gradient,
    polydisc_polynomial,
    polydisc_value,
    positive_trig_coefficients,
    product_polynomial,
    torus_sup_bound,
    torus_values,
    trial_entropy,
)
from polybohr.services.spectral_service import min_eig_hermitian, operator_norm


def test_trial_entropy_is_deterministic():
    assert trial_entropy(42, "wiener", 3) == trial_entropy(42, "wiener", 3)
    assert trial_entropy(42, "wiener", 3) != trial_entropy(42, "harnack", 3)
    assert trial_entropy(42, "wiener", 3)[2] == 3


def test_gen_schur_is_reproducible():
    a = gen_schur([1, 2, 3], 2, (1, 2), 2, m_coeff=2)
    b = gen_schur([1, 2, 3], 2, (1, 2), 2, m_coeff=2)
    assert a.F.terms.keys() == b.F.terms.keys()
    for word in a.F.terms:
        assert np.array_equal(a.F.terms[word], b.F.terms[word])


@pytest.mark.parametrize("n,degree,m", [((1,), 4, 1), ((2,), 2, 2), ((1, 1), 3, 1), ((1, 2), 1, 2)])
def test_gen_schur_has_unit_norm_and_positive_constant(n, degree, m):
    sample = gen_schur(7, len(n), n, degree, m_coeff=m)
    T = assemble(sample.F, 1.0, sample.truncation)
    assert operator_norm(T).value == pytest.approx(1.0, abs=1e-10)
    A0 = sample.F.constant
    assert np.allclose(A0, A0.conj().T, atol=1e-12)
    assert np.linalg.eigvalsh(A0).min() >= -1e-12
    assert sample.truncation.degrees == (degree + sample.headroom,) * len(n)


def test_gen_schur_reports_measured_norm_bound():
    sample = gen_schur(4, 2, (1, 2), 2, m_coeff=2)
    assert sample.certified_norm_lower == pytest.approx(1.0, abs=1e-12)
    assert sample.certified_norm_lower <= 1.0 + 1e-12
    assert sample.note is None


def test_gen_schur_lowers_bound_by_solver_residual(mocker, caplog):
    from polybohr.services import sampling_service
    mocker.patch.object(sampling_service, "operator_norm",
                        return_value=SpectralResult(value=2.0, residual=0.5, converged=False, method="lanczos"))
    with caplog.at_level(logging.WARNING, logger="polybohr.services.sampling_service"):
        sample = gen_schur(4, 1, (2,), 2)
    assert sample.scaling == 0.5
    assert sample.certified_norm_lower == pytest.approx(0.75)
    assert sample.note == "norm not converged"
    assert "did not converge" in caplog.text


def test_gen_schur_constant_options():
    zero = gen_schur(1, 1, (2,), 2, zero_a0=True).F
    assert not np.any(zero.constant)
    scalar = gen_schur(1, 1, (2,), 2, m_coeff=3, scalar_a0=True).F
    assert scalar.has_scalar_constant()


def test_gen_schur_rejects_bad_shapes():
    with pytest.raises(ArgumentError):
        gen_schur(1, 2, (1,), 2)


def test_gen_re_bounded_real_part(rng):
    F = gen_re_bounded(rng, 2, (1, 1), 2, m_coeff=2)
    T = assemble(F, 1.0, Truncation(degrees=(4, 4), alphabet_sizes=(1, 1))).toarray()
    gap = 2.0 * np.eye(T.shape[0]) - T - T.conj().T
    assert min_eig_hermitian(gap).value >= -1e-10


def test_mobius_coefficients():
    assert np.allclose(mobius_coefficients(0.5, 3), [0.5, -0.75, -0.375, -0.1875])
    F = mobius_polynomial(0.5, 3)
    assert evaluate_scalar(F, [[0.2]])[0, 0] == pytest.approx(0.5 - 0.75 * 0.2 - 0.375 * 0.04 - 0.1875 * 0.008)


def test_positive_trig_coefficients_match_squared_modulus(rng):
    q = rng.standard_normal(4) + 1j * rng.standard_normal(4)
    c = positive_trig_coefficients(q)
    for theta in np.linspace(0.0, 2 * np.pi, 7):
        w = np.exp(1j * theta)
        direct = abs(np.polyval(q[::-1], w)) ** 2
        series = c[0].real + 2.0 * np.real(np.sum(c[1:] * w ** np.arange(1, 4)))
        assert series == pytest.approx(direct)


@pytest.mark.parametrize("m", range(1, 9))
def test_fejer_extremal_factor_is_extremal(m):
    c = positive_trig_coefficients(fejer_extremal_factor(m))
    assert abs(c[1]) / c[0].real == pytest.approx(np.cos(np.pi / (m + 2)), abs=1e-12)


def test_gen_positive_trig_is_normalized():
    c = gen_positive_trig(3, 5)
    assert c.shape == (6,)
    assert c[0] == pytest.approx(1.0)


def test_polydisc_value_matches_scalar_evaluation(rng):
    arr = gen_polydisc(rng, 2, 3)
    F = polydisc_polynomial(arr)
    z = [0.3 + 0.1j, -0.5j]
    assert polydisc_value(arr, z) == pytest.approx(evaluate_scalar(F, [[z[0]], [z[1]]])[0, 0])
    assert np.allclose(polydisc_array(F), arr)


def test_polydisc_gradient_matches_finite_differences(rng):
    arr = gen_polydisc(rng, 2, 3)
    z = np.array([0.2 - 0.3j, 0.4 + 0.1j])
    grad = polydisc_gradient(arr, z)
    h = 1e-6
    for i in range(2):
        step = np.zeros(2, dtype=complex)
        step[i] = h
        numeric = (polydisc_value(arr, z + step) - polydisc_value(arr, z - step)) / (2 * h)
        assert grad[i] == pytest.approx(numeric, abs=1e-6)


def test_gen_polydisc_sup_is_certified(rng):
    arr = gen_polydisc(rng, 2, 4, grid=32)
    fine = np.abs(torus_values(arr, 256)).max()
    assert fine <= 1.0 + 1e-12
    assert torus_sup_bound(arr, 256) >= fine


def test_torus_grid_must_exceed_degree():
    with pytest.raises(ArgumentError):
        torus_values(np.ones((5, 5)), 4)


def test_polydisc_array_needs_single_letters():
    with pytest.raises(ArgumentError):
        polydisc_array(mobius_polynomial(0.5, 2, n=(2,)))


def test_product_polynomial_evaluates_to_product():
    f1 = mobius_polynomial(0.3, 4)
    f2 = mobius_polynomial(0.6, 3)
    G = product_polynomial([f1, f2])
    z1, z2 = 0.25, -0.4j
    expected = evaluate_scalar(f1, [[z1]])[0, 0] * evaluate_scalar(f2, [[z2]])[0, 0]
    assert evaluate_scalar(G, [[z1], [z2]])[0, 0] == pytest.approx(expected)


def test_gen_re_bounded_scalar_constant_is_positive(rng):
    F = gen_re_bounded(rng, 1, (2,), 2, m_coeff=2, scalar_a0=True)
    assert F.has_scalar_constant()
    a0 = F.constant[0, 0]
    assert abs(a0.imag) <= 1e-12
    assert 0.0 <= a0.real < 1.0
