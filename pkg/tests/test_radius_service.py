"""
Tests for the majorant series, bound functions and radius equations
"""

import math

import numpy as np
import pytest
from hypothesis import given, settings as hsettings, strategies as st

from polybohr.core.exceptions import ArgumentError, TruncationTooSmallError
from polybohr.models.polynomial import FreePolynomial, Truncation
from polybohr.models.words import MultiWord
from polybohr.services.radius_service import (
    T_INFINITY,
    binomial_sqrt_series,
    bound_C,
    bound_K,
    bound_K0,
    bound_M,
    bound_Omega,
    bound_d_upper,
    closed_bounds,
    majorant_curve,
    majorant_h,
    majorant_mh,
    solve_gamma_k,
    solve_t_k0,
    solve_t_m,
)
from polybohr.services.sampling_service import gen_schur

radius = st.floats(min_value=0.0, max_value=0.95)


def test_gamma_one_is_one_third():
    result = solve_gamma_k(1)
    assert abs(result.value - 1.0 / 3.0) < 1e-10
    assert result.residual <= 1e-12


def test_gamma_two():
    # hand summation of sum sqrt(m + 1) r^m = 1/2 puts the root near 0.2482
    assert 0.248 < solve_gamma_k(2).value < 0.2495


@pytest.mark.parametrize("k", range(2, 51))
def test_gamma_bracket(k):
    result = solve_gamma_k(k)
    assert 1.0 / (3.0 * math.sqrt(k)) < result.value < 2.0 * math.sqrt(math.log(k)) / math.sqrt(k)
    assert result.residual <= 1e-12
    assert result.bracket[0] <= result.value <= result.bracket[1]


def test_t_k0_for_one_factor():
    assert abs(solve_t_k0(1).value - 0.5) < 1e-10


def test_t_k0_above_gamma():
    for k in (1, 2, 5):
        assert solve_t_k0(k).value > solve_gamma_k(k).value


def test_t_two():
    assert solve_t_m(2).value == pytest.approx((-math.sqrt(2.0) + math.sqrt(6.0)) / 2.0, abs=1e-10)
    assert solve_t_m(2).value == pytest.approx(0.5176, abs=1e-4)


def test_t_m_strictly_decreases_to_one_third():
    values = [solve_t_m(m).value for m in range(2, 201)]
    assert all(b < a for a, b in zip(values, values[1:]))
    assert all(v > T_INFINITY for v in values)
    assert abs(values[-1] - 1.0 / 3.0) < 1e-3


def test_t_m_at_one_warns():
    result = solve_t_m(1)
    assert result.value == 1.0
    assert result.warning


def test_invalid_indices():
    with pytest.raises(ArgumentError):
        solve_gamma_k(0)
    with pytest.raises(ArgumentError):
        solve_t_m(0)


def test_series_tail_bound():
    total, tail, terms = binomial_sqrt_series(0.5, 1)
    assert total + tail == pytest.approx(1.0, abs=1e-12)
    assert tail <= 1e-13
    assert terms > 10


@pytest.mark.parametrize("a", [round(0.1 + 0.01 * i, 2) for i in range(90)])
def test_mobius_bohr_sharpness(mobius, a):
    value = majorant_mh(mobius(a), 1.0 / 3.0)
    expected = (1 + 3 * a - 2 * a * a) / (3 - a)
    assert value == pytest.approx(expected, abs=1e-10)
    assert 1.0 - value == pytest.approx(2 * (1 - a) ** 2 / (3 - a), abs=1e-10)
    assert value <= 1.0


def test_mobius_beyond_one_third(mobius):
    assert majorant_mh(mobius(0.9), 0.4) == pytest.approx(1.01875, abs=1e-9)


def test_one_variable_majorants_agree(mobius):
    F = mobius(0.5, 20)
    for r in (0.1, 0.3, 0.6):
        assert majorant_h(F, r) == pytest.approx(majorant_mh(F, r), abs=1e-12)


def test_homogeneous_majorant_is_below_multi_homogeneous():
    F = gen_schur(3, 2, (1, 1), 2).F
    for r in (0.2, 0.5):
        assert majorant_h(F, r) <= majorant_mh(F, r) + 1e-12


@pytest.mark.parametrize("n,degree", [((2,), 2), ((1, 2), 2), ((2, 1, 1), 1)])
def test_exact_majorant_matches_truncated_blocks(n, degree):
    F = gen_schur(11, len(n), n, degree, m_coeff=2).F
    trunc = Truncation(degrees=(degree,) * len(n), alphabet_sizes=n)
    r = [0.3 + 0.1 * i for i in range(len(n))]
    assert majorant_mh(F, r) == pytest.approx(majorant_mh(F, r, trunc), abs=1e-10)


def test_exact_majorant_skips_operator_assembly(mocker):
    from polybohr.services import radius_service
    spy = mocker.spy(radius_service, "_block_norm")
    F = gen_schur(5, 3, (1, 1, 1), 1).F
    assert majorant_mh(F, 0.4) > 0.0
    assert spy.call_count == 0


def test_majorant_needs_fitting_truncation():
    n = (1,)
    F = FreePolynomial.from_scalars(n, {MultiWord.of(n, [[1, 1, 1]]): 1.0})
    with pytest.raises(TruncationTooSmallError):
        majorant_mh(F, 0.5, Truncation(degrees=(2,), alphabet_sizes=n))


def test_majorant_radii_validation(mobius):
    with pytest.raises(ArgumentError):
        majorant_mh(mobius(0.5, 5), 1.0)
    with pytest.raises(ArgumentError):
        majorant_mh(mobius(0.5, 5), [0.1, 0.2])


def test_majorant_curve(mobius):
    curve = majorant_curve("D", mobius(0.5, 10), [0.0, 0.2, 0.4])
    assert curve.values[0] == pytest.approx(0.5)
    assert curve.values == sorted(curve.values)
    with pytest.raises(ArgumentError):
        majorant_curve("X", mobius(0.5, 10), [0.1])


def test_bound_C_branches():
    assert bound_C(0.2) == 1.0
    # c = 1/2 at r = 1/3 on one factor, both branches give 1
    assert bound_C(1.0 / 3.0) == pytest.approx(1.0)
    assert bound_C(1.0 / 3.0 + 1e-9) == pytest.approx(1.0, abs=1e-6)
    assert bound_C(0.5) == pytest.approx(1.0 + 0.25)


def test_bound_M_and_Omega():
    assert bound_M(0.3) == 1.0
    assert bound_M(0.5) == pytest.approx((1 + 0.25) / 1.0)
    for r in np.linspace(0.0, 1.0 / 3.0, 11):
        assert bound_Omega(float(r)) == 1.0
    assert bound_Omega(0.9, 1) == pytest.approx(min(bound_M(0.9), (1 - 0.81) ** -0.5))


def test_bound_K0():
    r = 0.3
    assert bound_K0(r) == pytest.approx(min(1 / 0.7 - 1, math.sqrt(1 / 0.91 - 1)))


@given(radius, st.integers(min_value=1, max_value=4))
@hsettings(max_examples=100, deadline=None)
def test_K_is_below_C(r, k):
    assert bound_K([r] * k) <= bound_C([r] * k)
    assert bound_d_upper(r, k) == bound_K([r] * k)
    assert bound_K([r] * k) >= 1.0


def test_closed_bounds_for_one_factor():
    bounds = closed_bounds(1)
    assert bounds.mh_lower_gamma == pytest.approx(1.0 / 3.0)
    assert bounds.mh_lower_simple == pytest.approx(1.0 / 3.0)
    assert bounds.mh0_lower_tk == pytest.approx(0.5)
    assert bounds.mh_upper == pytest.approx(1.0 / 3.0)
    assert bounds.h0_lower == pytest.approx(2 ** -0.5)


def test_closed_bounds_are_consistent():
    for k in (2, 4, 9):
        b = closed_bounds(k)
        assert b.mh_lower == max(b.mh_lower_simple, b.mh_lower_gamma)
        assert b.mh_lower <= b.mh_upper
        assert b.mh0_lower <= b.mh0_upper
        assert b.mh_lower_sqrt < b.mh_lower_gamma
