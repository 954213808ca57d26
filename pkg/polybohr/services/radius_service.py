"""
Radius service - Majorant series, closed-form bound functions and the
radius equations solved by bisection
"""

import logging
import math
from typing import Dict, Optional, Sequence, Tuple, Union

import numpy as np

from polybohr.core.config import settings
from polybohr.core.exceptions import ArgumentError, ConvergenceError, TruncationTooSmallError
from polybohr.models.polynomial import FreePolynomial, Truncation
from polybohr.models.results import ClosedBounds, MajorantCurve, RadiusResult
from polybohr.models.words import MultiWord
from polybohr.services.fock_service import assemble, truncation_for
from polybohr.services.spectral_service import operator_norm
from polybohr.utils.bisection import bisect_increasing, check_increasing

logger = logging.getLogger(__name__)

Radii = Union[float, Sequence[float]]

# Limit of t_m as m grows
T_INFINITY = 1.0 / 3.0
_MAX_SERIES_TERMS = 1_000_000


def _radii(r: Radii, k: int) -> np.ndarray:
    arr = np.full(k, float(r)) if np.isscalar(r) else np.asarray(r, dtype=float)
    if arr.shape != (k,):
        raise ArgumentError(f"{arr.size} radii given for {k} factors")
    if np.any(arr < 0) or np.any(arr >= 1):
        raise ArgumentError("radii must lie in [0, 1)")
    return arr


def _block_norm(block: Dict[MultiWord, np.ndarray], F: FreePolynomial, trunc: Truncation) -> float:
    poly = FreePolynomial(alphabet_sizes=F.alphabet_sizes, coefficient_dim=F.coefficient_dim, terms=block)
    return operator_norm(assemble(poly, 1.0, trunc)).value


def _orthogonal_block_norm(block: Dict[MultiWord, np.ndarray]) -> float:
    """||sum A_alpha (x) S_alpha|| = ||sum A_alpha^* A_alpha||^(1/2) when the S_alpha have orthogonal ranges"""
    gram = sum(c.conj().T @ c for c in block.values())
    return float(np.sqrt(max(np.linalg.eigvalsh(gram)[-1], 0.0)))


def _check_fits(degrees: Sequence[int], trunc: Truncation) -> None:
    if any(p > d for p, d in zip(degrees, trunc.degrees)):
        raise TruncationTooSmallError(f"block of degree {tuple(degrees)} does not fit truncation {trunc.degrees}")


def majorant_mh(F: FreePolynomial, r: Radii, trunc: Optional[Truncation] = None) -> float:
    """
    Multi-homogeneous majorant D(F, r) = sum_p r^p ||sum_{Lambda_p} A_alpha (x) S_alpha||

    Each block norm is computed at truncation trunc. When trunc is None the
    exact norm is taken from the Gram sum of the coefficients, since the
    words of one multidegree have pairwise orthogonal ranges.

    Args:
        F: Free polynomial
        r: Single radius or one radius per factor, in [0, 1)
        trunc: Optional common truncation
    """
    radii = _radii(r, F.k)
    total = 0.0
    for p, block in F.blocks_by_multidegree().items():
        if trunc is None:
            norm = _orthogonal_block_norm(block)
        else:
            _check_fits(p, trunc)
            norm = _block_norm(block, F, trunc)
        total += float(np.prod(radii ** np.array(p))) * norm
    return total


def majorant_h(F: FreePolynomial, r: float, trunc: Optional[Truncation] = None) -> float:
    """
    Homogeneous majorant M(F, r) = sum_q r^q ||sum_{Gamma_q} A_alpha (x) S_alpha||

    Block norms are computed at trunc, truncation_for(F) by default.
    """
    _radii(r, 1)
    trunc = trunc or truncation_for(F)
    _check_fits(F.factor_degrees, trunc)
    total = 0.0
    for q, block in F.blocks_by_total_degree().items():
        total += r ** q * _block_norm(block, F, trunc)
    return total


def majorant_curve(kind: str, F: FreePolynomial, r_grid: Sequence[float],
                   trunc: Optional[Truncation] = None) -> MajorantCurve:
    """D or M sampled on a grid of radii"""
    if kind == "D":
        values = [majorant_mh(F, r, trunc) for r in r_grid]
        used = list(trunc.degrees) if trunc else list(F.factor_degrees)
    elif kind == "M":
        trunc = trunc or truncation_for(F)
        values = [majorant_h(F, r, trunc) for r in r_grid]
        used = list(trunc.degrees)
    else:
        raise ArgumentError(f"unknown majorant kind {kind}, expected D or M")
    return MajorantCurve(kind=kind, radii=list(r_grid), values=values, truncation=used)


def bound_C(r: Radii, k: Optional[int] = None) -> float:
    """C(r) = 1 if c <= 1/2 else c + 1/(4c), with c = prod (1 - r_i)^-1 - 1"""
    radii = _radii(r, k or (1 if np.isscalar(r) else len(r)))
    c = float(1.0 / np.prod(1.0 - radii) - 1.0)
    return 1.0 if c <= 0.5 else c + 1.0 / (4.0 * c)


def bound_K(r: Radii, k: Optional[int] = None) -> float:
    """K(r) = min{C(r), prod (1 - r_i^2)^(-1/2)}"""
    radii = _radii(r, k or (1 if np.isscalar(r) else len(r)))
    return min(bound_C(radii), float(np.prod(1.0 - radii ** 2) ** -0.5))


def bound_K0(r: Radii, k: Optional[int] = None) -> float:
    """Majorant bound when F(0) = 0: min{prod (1 - r_i)^-1 - 1, [prod (1 - r_i^2)^-1 - 1]^(1/2)}"""
    radii = _radii(r, k or (1 if np.isscalar(r) else len(r)))
    first = float(1.0 / np.prod(1.0 - radii) - 1.0)
    second = float(max(1.0 / np.prod(1.0 - radii ** 2) - 1.0, 0.0)) ** 0.5
    return min(first, second)


def bound_M(r: float) -> float:
    """M(r) = 1 for r <= 1/3, (4r^2 + (1 - r)^2) / (4r(1 - r)) above"""
    _radii(r, 1)
    if r <= 1.0 / 3.0:
        return 1.0
    return (4 * r * r + (1 - r) ** 2) / (4 * r * (1 - r))


def bound_Omega(r: float, k: int = 1) -> float:
    """Omega(r) = min{M(r), (1 - r^2)^(-k/2)}"""
    return min(bound_M(r), (1.0 - r * r) ** (-k / 2.0))


def bound_d_upper(r: float, k: int) -> float:
    """Upper bound min{C(r,...,r), (1 - r^2)^(-k/2)} of the multi-homogeneous majorant function"""
    return bound_K([r] * k)


def binomial_sqrt_series(r: float, k: int, tail_tol: Optional[float] = None) -> Tuple[float, float, int]:
    """
    Partial sum of sum_{m >= 1} binom(m + k - 1, k - 1)^(1/2) r^m

    Consecutive term ratios r sqrt((m + k) / (m + 1)) decrease in m, so once
    they drop below 1 the tail is dominated by a geometric series.

    Returns:
        tuple: (partial sum, bound on the discarded tail, terms used)
    """
    tail_tol = settings.SERIES_TAIL_TOL if tail_tol is None else tail_tol
    if r == 0.0:
        return 0.0, 0.0, 0
    if not 0.0 < r < 1.0:
        raise ArgumentError(f"series radius {r} outside [0, 1)")
    term = math.sqrt(k) * r
    total = 0.0
    m = 1
    while m < _MAX_SERIES_TERMS:
        total += term
        next_term = term * r * math.sqrt((m + k) / (m + 1))
        ratio = r * math.sqrt((m + 1 + k) / (m + 2))
        if ratio < 1.0:
            tail = next_term / (1.0 - ratio)
            if tail <= tail_tol:
                return total, tail, m
        term = next_term
        m += 1
    raise ConvergenceError(f"series at r={r}, k={k} did not reach tail {tail_tol} in {_MAX_SERIES_TERMS} terms")


def _solve_series(k: int, target: float, tol: Optional[float]) -> RadiusResult:
    if k < 1:
        raise ArgumentError("k must be >= 1")
    tol = settings.BISECTION_TOL if tol is None else tol

    def phi(r: float) -> float:
        return binomial_sqrt_series(r, k)[0]

    hi = 0.5
    while phi(hi) <= target:
        hi = 0.5 * (1.0 + hi)
    check_increasing(phi, 0.0, hi)
    value, residual, bracket, iterations = bisect_increasing(
        phi, target, 0.0, hi, tol, tol, settings.BISECTION_MAX_ITER)
    _, tail, terms = binomial_sqrt_series(value, k)
    return RadiusResult(value=value, residual=residual, bracket=bracket, tail_bound=tail,
                        series_terms_used=terms, iterations=iterations)


def solve_gamma_k(k: int, tol: Optional[float] = None) -> RadiusResult:
    """Root gamma_k of sum_{m >= 1} binom(m + k - 1, k - 1)^(1/2) r^m = 1/2"""
    result = _solve_series(k, 0.5, tol)
    logger.debug(f"gamma_{k} = {result.value:.15g}")
    return result


def solve_t_k0(k: int, tol: Optional[float] = None) -> RadiusResult:
    """Root t_k of the same series set equal to 1 (functions with F(0) = 0)"""
    result = _solve_series(k, 1.0, tol)
    logger.debug(f"t_{k} (F(0)=0) = {result.value:.15g}")
    return result


def cosine_weight(m: int, q: int) -> float:
    """cos(pi / (floor(m / q) + 2))"""
    return math.cos(math.pi / (m // q + 2))


def solve_t_m(m: int, tol: Optional[float] = None) -> RadiusResult:
    """
    Root t_m in [1/3, 1] of sum_{q=1}^m t^q cos(pi / (floor(m/q) + 2)) = 1/2

    For m = 1 the equation reads t/2 = 1/2, so 1.0 is returned with a warning.
    """
    if m < 1:
        raise ArgumentError("m must be >= 1")
    tol = settings.BISECTION_TOL if tol is None else tol
    if m == 1:
        warning = "m=1 forces t=1 (t cos(pi/3) = 1/2); the radius is only meaningful for m >= 2"
        logger.warning(warning)
        return RadiusResult(value=1.0, residual=0.0, bracket=(1.0, 1.0), warning=warning)

    weights = [cosine_weight(m, q) for q in range(1, m + 1)]

    def phi(t: float) -> float:
        return sum(w * t ** q for q, w in enumerate(weights, start=1))

    check_increasing(phi, T_INFINITY, 1.0)
    value, residual, bracket, iterations = bisect_increasing(
        phi, 0.5, T_INFINITY, 1.0, tol, tol, settings.BISECTION_MAX_ITER)
    return RadiusResult(value=value, residual=residual, bracket=bracket, tail_bound=0.0,
                        series_terms_used=m, iterations=iterations)


def closed_bounds(k: int) -> ClosedBounds:
    """Closed-form and solved bounds on the Bohr radii for k factors"""
    if k < 1:
        raise ArgumentError("k must be >= 1")
    gamma = solve_gamma_k(k).value
    t0 = solve_t_k0(k).value
    log_bound = 2.0 * math.sqrt(math.log(k)) / math.sqrt(k) if k > 1 else math.inf
    mh_lower_simple = 1.0 - (2.0 / 3.0) ** (1.0 / k)
    mh0_lower_simple = math.sqrt(1.0 - 0.5 ** (1.0 / k))
    mh0_lower_sqrt = 1.0 / (2.0 * math.sqrt(k))
    return ClosedBounds(
        k=k,
        mh_lower_simple=mh_lower_simple,
        mh_lower_gamma=gamma,
        mh_lower=max(mh_lower_simple, gamma),
        mh_lower_sqrt=1.0 / (3.0 * math.sqrt(k)),
        mh_upper=min(1.0 / 3.0, log_bound),
        mh0_lower_simple=mh0_lower_simple,
        mh0_lower_sqrt=mh0_lower_sqrt,
        mh0_lower_tk=t0,
        mh0_lower=max(mh0_lower_simple, mh0_lower_sqrt, t0),
        mh0_upper=min(2 ** -0.5, log_bound),
        h0_lower=max(0.5, mh0_lower_simple),
    )
