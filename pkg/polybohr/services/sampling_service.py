"""
Sampling service - Seeded generators of Schur-class and Re-bounded polynomials,
nonnegative trigonometric polynomials and polydisc test functions
"""

import itertools
import logging
import zlib
from typing import List, Optional, Sequence, Union

import numpy as np
import scipy.linalg as la

from polybohr.core.config import settings
from polybohr.core.exceptions import ArgumentError
from polybohr.models.polynomial import FreePolynomial, SchurSample, Truncation
from polybohr.models.words import MultiWord, Word
from polybohr.services.fock_service import assemble
from polybohr.services.spectral_service import operator_norm
from polybohr.services.word_service import enumerate_gamma

logger = logging.getLogger(__name__)

Seed = Union[int, Sequence[int], np.random.Generator]


def make_rng(seed: Seed) -> np.random.Generator:
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.default_rng(seed)


def trial_entropy(seed: int, suite: str, trial: int) -> List[int]:
    """Entropy of one trial, fixed by the suite seed, suite name and trial index"""
    return [int(seed), zlib.crc32(suite.encode("utf-8")), int(trial)]


def _complex_gaussian(rng: np.random.Generator, shape) -> np.ndarray:
    return (rng.standard_normal(shape) + 1j * rng.standard_normal(shape)) / np.sqrt(2.0)


def gen_schur(
    seed: Seed,
    k: int,
    n: Sequence[int],
    degree: int,
    m_coeff: int = 1,
    headroom: Optional[int] = None,
    scalar_a0: bool = False,
    zero_a0: bool = False,
    real_a0: bool = True,
) -> SchurSample:
    """
    Random polynomial of total degree <= degree with unit norm at truncation

    Coefficients are complex Gaussian. With real_a0 the draw is first left
    multiplied by the adjoint polar factor of A_0 (a unimodular constant in
    the scalar case) so that A_0 >= 0; the result is then divided by its
    truncated norm at d_i = degree + headroom.

    Args:
        seed: int, entropy list or numpy Generator
        k: Number of factors
        n: Alphabet sizes
        degree: Max total degree
        m_coeff: Coefficient dimension m
        headroom: Truncation headroom, settings.SUITE_HEADROOM when None
        scalar_a0: Force A_0 = a_0 I
        zero_a0: Force A_0 = 0
        real_a0: Force A_0 >= 0

    Returns:
        SchurSample: the normalized polynomial with its truncation
    """
    if len(n) != k:
        raise ArgumentError(f"{len(n)} alphabet sizes for {k} factors")
    if degree < 0:
        raise ArgumentError("degree must be >= 0")
    headroom = settings.SUITE_HEADROOM if headroom is None else headroom
    rng = make_rng(seed)
    n = tuple(n)
    terms = {}
    for q in range(degree + 1):
        for word in enumerate_gamma(q, n).elements:
            if q == 0 and zero_a0:
                continue
            if q == 0 and scalar_a0:
                terms[word] = complex(_complex_gaussian(rng, ())) * np.eye(m_coeff)
            else:
                terms[word] = _complex_gaussian(rng, (m_coeff, m_coeff))
    F = FreePolynomial(alphabet_sizes=n, coefficient_dim=m_coeff, terms=terms)
    if real_a0 and not zero_a0:
        unitary, _ = la.polar(F.constant)
        F = F.left_multiplied(unitary.conj().T)
    trunc = Truncation(degrees=(degree + headroom,) * k, alphabet_sizes=n)
    measured = operator_norm(assemble(F, 1.0, trunc))
    if measured.value == 0.0:
        raise ArgumentError("drawn polynomial vanishes on the truncated space")
    if not measured.converged:
        logger.warning(f"norm of a Schur draw did not converge, residual {measured.residual:.3e}")
    scaling = 1.0 / measured.value
    return SchurSample(
        F=F.scaled(scaling),
        certified_norm_lower=(measured.value - measured.residual) * scaling,
        scaling=scaling,
        headroom=headroom,
        truncation=trunc,
        note=None if measured.converged else "norm not converged",
    )


def gen_re_bounded(
    seed: Seed,
    k: int,
    n: Sequence[int],
    degree: int,
    m_coeff: int = 1,
    headroom: Optional[int] = None,
    scalar_a0: bool = False,
) -> FreePolynomial:
    """
    Polynomial with F(0) >= 0 and Re F <= I at truncation

    A unit-norm Schur sample satisfies 2I - F - F^* >= 0; its constant term is
    rotated to be positive, with norm < 1 unless F is constant.
    """
    return gen_schur(seed, k, n, degree, m_coeff=m_coeff, headroom=headroom, scalar_a0=scalar_a0,
                     real_a0=True).F


def letter_power(n: Sequence[int], factor: int, power: int, letter: int = 1) -> MultiWord:
    """The multiword g_letter^power placed in factor (1-based), identity elsewhere"""
    parts = []
    for i, size in enumerate(n, start=1):
        letters = (letter,) * power if i == factor else ()
        parts.append(Word.model_construct(letters=letters, n=size))
    return MultiWord.model_construct(parts=tuple(parts))


def one_variable_polynomial(coefficients: Sequence[complex], n: Sequence[int] = (1,), factor: int = 1,
                            letter: int = 1) -> FreePolynomial:
    """sum_j c_j X_{factor,letter}^j as a free polynomial"""
    terms = {letter_power(n, factor, j, letter): np.array([[c]], dtype=np.complex128)
             for j, c in enumerate(coefficients) if c != 0}
    return FreePolynomial(alphabet_sizes=tuple(n), coefficient_dim=1, terms=terms)


def mobius_coefficients(a: float, degree: int) -> np.ndarray:
    """Taylor coefficients of (a - z) / (1 - a z) up to degree"""
    coeffs = np.empty(degree + 1)
    coeffs[0] = a
    coeffs[1:] = -(1.0 - a * a) * a ** np.arange(degree)
    return coeffs


def mobius_polynomial(a: float, degree: int, n: Sequence[int] = (1,), factor: int = 1) -> FreePolynomial:
    """Möbius map truncated at degree, in one letter of one factor"""
    return one_variable_polynomial(mobius_coefficients(a, degree), n=n, factor=factor)


def positive_trig_coefficients(q: Sequence[complex]) -> np.ndarray:
    """
    Coefficients c_0..c_m of |q(e^{i theta})|^2 = c_0 + 2 Re sum_p c_p e^{i p theta}

    c_p = sum_j q_{j+p} conj(q_j), a nonnegative trigonometric polynomial by construction.
    """
    q = np.asarray(q, dtype=np.complex128)
    m = len(q) - 1
    return np.array([np.sum(q[p:] * q[:m + 1 - p].conj()) for p in range(m + 1)])


def fejer_extremal_factor(m: int) -> np.ndarray:
    """q_j = sin(pi (j + 1) / (m + 2)); |c_1| / c_0 = cos(pi / (m + 2)) for its square"""
    return np.sin(np.pi * np.arange(1, m + 2) / (m + 2))


def gen_positive_trig(seed: Seed, m: int) -> np.ndarray:
    """Random nonnegative trigonometric polynomial of degree m, normalized to c_0 = 1"""
    rng = make_rng(seed)
    c = positive_trig_coefficients(_complex_gaussian(rng, m + 1))
    return c / c[0].real


def polydisc_array(F: FreePolynomial) -> np.ndarray:
    """Coefficient array a[p_1, ..., p_k] of a scalar polynomial with one letter per factor"""
    if any(size != 1 for size in F.alphabet_sizes) or F.coefficient_dim != 1:
        raise ArgumentError("polydisc functions need n_i = 1 and scalar coefficients")
    arr = np.zeros(tuple(d + 1 for d in F.factor_degrees), dtype=np.complex128)
    for word, coeff in F.terms.items():
        arr[word.degrees] += coeff[0, 0]
    return arr


def polydisc_polynomial(arr: np.ndarray) -> FreePolynomial:
    """Inverse of polydisc_array"""
    k = arr.ndim
    terms = {}
    for p in itertools.product(*[range(s) for s in arr.shape]):
        if arr[p] != 0:
            word = MultiWord.model_construct(parts=tuple(Word.model_construct(letters=(1,) * pi, n=1) for pi in p))
            terms[word] = np.array([[arr[p]]], dtype=np.complex128)
    return FreePolynomial(alphabet_sizes=(1,) * k, coefficient_dim=1, terms=terms)


def torus_values(arr: np.ndarray, grid: int) -> np.ndarray:
    """f(e^{i theta}) on the uniform grid of grid^k points of the torus"""
    if any(s > grid for s in arr.shape):
        raise ArgumentError("torus grid must be finer than the degree")
    padded = np.zeros((grid,) * arr.ndim, dtype=np.complex128)
    padded[tuple(slice(0, s) for s in arr.shape)] = arr
    return np.fft.ifftn(padded) * grid ** arr.ndim


def torus_sup_bound(arr: np.ndarray, grid: int = 64) -> float:
    """
    Certified upper bound of sup_{T^k} |f|

    Between grid points f moves by at most (pi / grid) sum_p |a_p| |p|_1.
    """
    values = torus_values(arr, grid)
    degrees = np.indices(arr.shape).sum(axis=0)
    margin = np.pi / grid * float(np.sum(np.abs(arr) * degrees))
    return float(np.max(np.abs(values))) + margin


def polydisc_value(arr: np.ndarray, z: Sequence[complex]) -> complex:
    powers = [np.asarray(zi, dtype=np.complex128) ** np.arange(s) for zi, s in zip(z, arr.shape)]
    value = arr
    for pw in powers:
        value = np.tensordot(value, pw, axes=([0], [0]))
    return complex(value)


def polydisc_gradient(arr: np.ndarray, z: Sequence[complex]) -> np.ndarray:
    """Partial derivatives df/dz_i at z by term-wise differentiation"""
    grad = np.empty(arr.ndim, dtype=np.complex128)
    for i in range(arr.ndim):
        if arr.shape[i] == 1:
            grad[i] = 0.0
            continue
        deriv = np.moveaxis(np.moveaxis(arr, i, 0)[1:] * np.arange(1, arr.shape[i]).reshape(
            (-1,) + (1,) * (arr.ndim - 1)), 0, i)
        grad[i] = polydisc_value(deriv, z)
    return grad


def gen_polydisc(seed: Seed, k: int, degree: int, grid: int = 64) -> np.ndarray:
    """Random polydisc polynomial of total degree <= degree with certified sup_{T^k} |f| <= 1"""
    rng = make_rng(seed)
    arr = np.zeros((degree + 1,) * k, dtype=np.complex128)
    for p in itertools.product(range(degree + 1), repeat=k):
        if sum(p) <= degree:
            arr[p] = _complex_gaussian(rng, ())
    return arr / torus_sup_bound(arr, grid)


def product_polynomial(factors: Sequence[FreePolynomial]) -> FreePolynomial:
    """G = f_1 ... f_k with f_i a one-factor polynomial placed in factor i"""
    n = tuple(f.alphabet_sizes[0] for f in factors)
    terms = {}
    for combo in itertools.product(*[list(f.terms.items()) for f in factors]):
        word = MultiWord.model_construct(parts=tuple(w.parts[0] for w, _ in combo))
        coeff = np.array([[np.prod([c[0, 0] for _, c in combo])]], dtype=np.complex128)
        terms[word] = coeff
    return FreePolynomial(alphabet_sizes=n, coefficient_dim=1, terms=terms)
