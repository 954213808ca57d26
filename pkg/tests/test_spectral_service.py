"""
Tests for norms, extremal eigenvalues and numerical radii
"""

import math

import numpy as np
import pytest
import scipy.linalg as la
import scipy.sparse as sp
from hypothesis import given, settings as hsettings, strategies as st

from polybohr.core.config import settings
from polybohr.core.exceptions import ArgumentError, NotHermitianError
from polybohr.models.polynomial import Truncation
from polybohr.services.fock_service import assemble, left_creation
from polybohr.services.sampling_service import one_variable_polynomial
from polybohr.services.spectral_service import (
    is_positive,
    joint_numerical_radius,
    max_eig_hermitian,
    min_eig_hermitian,
    numerical_radius,
    operator_norm,
)


def _shift(d: int) -> sp.csr_matrix:
    return assemble(one_variable_polynomial([0.0, 1.0]), 1.0, Truncation(degrees=(d,), alphabet_sizes=(1,)))


@pytest.mark.parametrize("d", range(1, 21))
def test_truncated_shift_numerical_radius(d):
    expected = math.cos(math.pi / (d + 2))
    assert numerical_radius(_shift(d), rotation_invariant=True).value == pytest.approx(expected, abs=1e-8)


@pytest.mark.parametrize("d", [1, 4, 9])
def test_truncated_shift_numerical_radius_by_angle_sweep(d):
    result = numerical_radius(_shift(d), strict=False)
    assert result.value == pytest.approx(math.cos(math.pi / (d + 2)), abs=1e-8)
    assert result.method == "theta-sweep"


def test_numerical_radius_of_shifted_jordan_block():
    T = np.array([[1.0, 1.0], [0.0, 1.0]])
    assert numerical_radius(T, strict=False).value == pytest.approx(1.5, abs=1e-8)


def test_numerical_radius_of_hermitian_matrix():
    H = np.diag([-3.0, 1.0, 2.0])
    result = numerical_radius(H)
    assert result.value == pytest.approx(3.0)
    assert result.method == "hermitian"


def test_numerical_radius_between_half_norm_and_norm(rng):
    for _ in range(10):
        T = rng.standard_normal((6, 6)) + 1j * rng.standard_normal((6, 6))
        w = numerical_radius(T, strict=False).value
        norm = operator_norm(T).value
        assert norm / 2.0 - 1e-9 <= w <= norm + 1e-9


def test_numerical_radius_needs_square_matrix():
    with pytest.raises(ArgumentError):
        numerical_radius(np.zeros((2, 3)))


def test_operator_norm_dense_and_lanczos_agree(mocker, rng):
    from polybohr.core.config import settings

    A = sp.random(60, 60, density=0.1, random_state=3, format="csr") * (1.0 + 0.5j)
    dense = operator_norm(A)
    mocker.patch.object(settings, "DENSE_CUTOFF", 10)
    lanczos = operator_norm(A, tol=1e-9)
    assert dense.method == "dense"
    assert lanczos.method == "lanczos"
    assert lanczos.value == pytest.approx(dense.value, abs=1e-7)


def test_operator_norm_rejects_nan():
    with pytest.raises(ArgumentError):
        operator_norm(np.array([[np.nan]]))


def test_hermitian_extremes():
    H = np.array([[2.0, 1.0j], [-1.0j, 2.0]])
    assert min_eig_hermitian(H).value == pytest.approx(1.0)
    assert max_eig_hermitian(H).value == pytest.approx(3.0)
    assert is_positive(H)
    assert not is_positive(H - 1.5 * np.eye(2))


def test_hermitian_check():
    with pytest.raises(NotHermitianError):
        min_eig_hermitian(np.array([[0.0, 1.0], [0.0, 0.0]]))


def test_joint_numerical_radius_of_single_operator():
    T = np.diag([0.5, -0.25])
    result = joint_numerical_radius([T], aux_degree=3)
    # sum_i T_i^* (x) S_i with one letter is T^* (x) S, a truncated shift scaled by |T|
    assert result.value == pytest.approx(0.5 * math.cos(math.pi / 5), abs=1e-8)
    assert result.truncation == [3]


def test_joint_numerical_radius_is_monotone_in_aux_degree():
    trunc = Truncation(degrees=(2,), alphabet_sizes=(2,))
    Ts = [left_creation(trunc, 1, 1).toarray(), left_creation(trunc, 1, 2).toarray()]
    values = [joint_numerical_radius(Ts, d).value for d in (1, 2, 3)]
    assert all(b >= a - 1e-10 for a, b in zip(values, values[1:]))


seeds = st.integers(min_value=0, max_value=2**32 - 1)


def _complex_matrix(rng: np.random.Generator, dim: int = 5) -> np.ndarray:
    return rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))


@given(seeds)
@hsettings(max_examples=25, deadline=None)
def test_numerical_radius_is_subadditive(seed):
    rng = np.random.default_rng(seed)
    A, B = _complex_matrix(rng), _complex_matrix(rng)
    total = numerical_radius(A + B).value
    assert total <= numerical_radius(A).value + numerical_radius(B).value + 1e-7


@given(seeds, st.complex_numbers(max_magnitude=5.0, allow_nan=False, allow_infinity=False))
@hsettings(max_examples=25, deadline=None)
def test_numerical_radius_is_absolutely_homogeneous(seed, scale):
    A = _complex_matrix(np.random.default_rng(seed))
    expected = abs(scale) * numerical_radius(A).value
    assert numerical_radius(scale * A).value == pytest.approx(expected, abs=1e-7 * max(1.0, abs(scale)))


@given(seeds)
@hsettings(max_examples=25, deadline=None)
def test_numerical_radius_is_unitarily_invariant(seed):
    rng = np.random.default_rng(seed)
    A = _complex_matrix(rng)
    U, _ = la.qr(_complex_matrix(rng))
    assert numerical_radius(U.conj().T @ A @ U).value == pytest.approx(numerical_radius(A).value, abs=1e-7)


@given(seeds)
@hsettings(max_examples=25, deadline=None)
def test_numerical_radius_of_positive_matrix_is_its_norm(seed):
    X = _complex_matrix(np.random.default_rng(seed))
    P = X @ X.conj().T
    assert numerical_radius(P).value == pytest.approx(operator_norm(P).value, rel=1e-10)


@given(seeds)
@hsettings(max_examples=10, deadline=None)
def test_joint_numerical_radius_ignores_operator_order(seed):
    rng = np.random.default_rng(seed)
    Ts = [_complex_matrix(rng, 3) for _ in range(3)]
    forward = joint_numerical_radius(Ts, 2).value
    for order in ([2, 0, 1], [1, 0, 2]):
        assert joint_numerical_radius([Ts[i] for i in order], 2).value == pytest.approx(forward, abs=1e-9)


def test_fallback_certificate_refines_angle_grid(mocker, rng):
    from polybohr.services import spectral_service

    T = _complex_matrix(rng, 6)
    exact = numerical_radius(T).value
    mocker.patch.object(spectral_service, "_level_set_angles", return_value=np.array([0.5, 2.5, 4.5]))
    mocker.patch.object(settings, "THETA_GRID_MAX", settings.THETA_GRID)
    coarse = numerical_radius(T, tol=1e-12, strict=False)
    mocker.patch.object(settings, "THETA_GRID_MAX", 16 * settings.THETA_GRID)
    fine = numerical_radius(T, tol=1e-12, strict=False)
    assert not coarse.converged
    assert fine.iterations > coarse.iterations
    assert fine.residual < coarse.residual / 10
    for result in (coarse, fine):
        assert result.value <= exact + 1e-9
        assert exact <= result.value + result.residual + 1e-9
