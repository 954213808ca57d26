"""
Verification service - Seeded randomized suites checking the Bohr, Wiener,
Landau, Fejér and Harnack type inequalities on generated instances
"""

import functools
import logging
import math
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np
import scipy.linalg as la

from polybohr.core.config import settings
from polybohr.core.exceptions import ArgumentError
from polybohr.models.polynomial import FreePolynomial, Truncation
from polybohr.models.suite import ProbeResult, SuiteReport, Violation
from polybohr.models.words import MultiWord
from polybohr.services.fock_service import (
    assemble,
    assemble_pluriharmonic,
    extract_pluriharmonic,
    gram_pluriharmonic,
)
from polybohr.services.radius_service import (
    bound_K,
    bound_K0,
    bound_Omega,
    cosine_weight,
    majorant_h,
    majorant_mh,
    solve_gamma_k,
    solve_t_k0,
    solve_t_m,
)
from polybohr.services.sampling_service import (
    fejer_extremal_factor,
    gen_polydisc,
    gen_positive_trig,
    gen_re_bounded,
    gen_schur,
    mobius_coefficients,
    mobius_polynomial,
    one_variable_polynomial,
    polydisc_gradient,
    polydisc_polynomial,
    polydisc_value,
    positive_trig_coefficients,
    product_polynomial,
    torus_sup_bound,
    trial_entropy,
)
from polybohr.services.spectral_service import min_eig_hermitian, numerical_radius, operator_norm
from polybohr.utils.work_pool import map_ordered

logger = logging.getLogger(__name__)

# (name, lhs, rhs, parameters); rhs already carries the suite's rhs_scale
Check = Tuple[str, float, float, Dict[str, Any]]
TrialFn = Callable[[np.random.Generator, float], List[Check]]
ProbeFn = Callable[[float], Tuple[List[Check], List[ProbeResult]]]

# Alphabet sizes and max total degree of the noncommutative samples
SHAPES: List[Tuple[Tuple[int, ...], int]] = [
    ((1,), 4),
    ((2,), 2),
    ((1, 1), 3),
    ((1, 2), 1),
    ((1, 1, 1), 1),
]


@functools.lru_cache(maxsize=None)
def _gamma(k: int) -> float:
    return solve_gamma_k(k).value


@functools.lru_cache(maxsize=None)
def _t_zero(k: int) -> float:
    return solve_t_k0(k).value


@functools.lru_cache(maxsize=None)
def _t_m(m: int) -> float:
    return solve_t_m(m).value


def _draw_shape(rng: np.random.Generator) -> Tuple[Tuple[int, ...], int]:
    n, top = SHAPES[int(rng.integers(len(SHAPES)))]
    return n, int(rng.integers(1, top + 1))


def _gram(block: Dict[MultiWord, np.ndarray]) -> np.ndarray:
    return sum(c.conj().T @ c for c in block.values())


def _top_eig(H: np.ndarray) -> float:
    return float(la.eigvalsh(H, check_finite=False)[-1])


def _relative_top_eig(S: np.ndarray, D: np.ndarray) -> Optional[float]:
    """lambda_max(D^(-1/2) S D^(-1/2)), None when D is not positive definite"""
    try:
        return float(la.eigh(S, D, eigvals_only=True, check_finite=False)[-1])
    except la.LinAlgError:
        return None


def _block_polynomial(F: FreePolynomial, block: Dict[MultiWord, np.ndarray]) -> FreePolynomial:
    return FreePolynomial(alphabet_sizes=F.alphabet_sizes, coefficient_dim=F.coefficient_dim, terms=block)


def _block_numrad(F: FreePolynomial, block: Dict[MultiWord, np.ndarray], trunc: Truncation) -> float:
    T = assemble(_block_polynomial(F, block), 1.0, trunc)
    return numerical_radius(T, rotation_invariant=True).value


def _normalized_mobius(a: float, degree: int) -> FreePolynomial:
    F = mobius_polynomial(a, degree)
    trunc = Truncation(degrees=(degree + settings.SUITE_HEADROOM,), alphabet_sizes=(1,))
    return F.scaled(1.0 / operator_norm(assemble(F, 1.0, trunc)).value)


def _shape_params(n: Sequence[int], degree: int, m: int = 1) -> Dict[str, Any]:
    return {"n": list(n), "degree": degree, "m": m}


def _run_suite(
    name: str,
    trial_fn: TrialFn,
    probe_fn: Optional[ProbeFn],
    seed: Optional[int],
    trials: Optional[int],
    tol: Optional[float],
    rhs_scale: float,
    workers: Optional[int],
) -> SuiteReport:
    """
    Run trial_fn once per trial on its own generator and collect the checks

    A check (name, lhs, rhs) is violated when lhs - rhs > tol.
    """
    seed = settings.SEED if seed is None else seed
    trials = settings.TRIALS if trials is None else trials
    tol = settings.TOLERANCE if tol is None else tol
    if trials < 1:
        raise ArgumentError("trials must be >= 1")
    if tol <= 0:
        raise ArgumentError("tolerance must be > 0")
    if rhs_scale <= 0:
        raise ArgumentError("rhs_scale must be > 0")

    def run(trial: int) -> List[Check]:
        rng = np.random.default_rng(trial_entropy(seed, name, trial))
        return trial_fn(rng, rhs_scale)

    logger.info(f"suite {name}: {trials} trials, seed {seed}, rhs_scale {rhs_scale}")
    results = map_ordered(run, range(trials), workers)
    indexed = [(trial, check) for trial, checks in enumerate(results) for check in checks]
    probes: List[ProbeResult] = []
    if probe_fn is not None:
        probe_checks, probes = probe_fn(rhs_scale)
        indexed.extend((-1, check) for check in probe_checks)

    violations = []
    max_slack = None
    for trial, (check, lhs, rhs, params) in indexed:
        slack = float(lhs - rhs)
        max_slack = slack if max_slack is None else max(max_slack, slack)
        if slack > tol or not np.isfinite(slack):
            violations.append(Violation(seed=seed, trial=trial, check=check, parameters=params,
                                        lhs=float(lhs), rhs=float(rhs), slack=slack))
    if violations:
        logger.warning(f"suite {name}: {len(violations)} violations, max slack {max_slack:.3e}")
    else:
        logger.info(f"suite {name}: {len(indexed)} checks passed")
    return SuiteReport(suite=name, seed=seed, trials=trials, cases_run=len(indexed), tolerance=tol,
                       rhs_scale=rhs_scale, violations=violations, max_slack_used=max_slack,
                       probes=probes, passed=not violations)


# Wiener

def _wiener_trial(rng: np.random.Generator, scale: float) -> List[Check]:
    n, degree = _draw_shape(rng)
    k = len(n)
    m = int(rng.integers(1, 3))
    F = gen_schur(rng, k, n, degree, m_coeff=m, scalar_a0=True, real_a0=False).F
    params = _shape_params(n, degree, m)
    a0 = abs(F.constant[0, 0])
    checks: List[Check] = []
    for label, blocks in (("Lambda", F.blocks_by_multidegree()), ("Gamma", F.blocks_by_total_degree())):
        for key, block in blocks.items():
            if key == 0 or key == (0,) * k:
                continue
            lhs = math.sqrt(max(_top_eig(_gram(block)), 0.0))
            checks.append((f"wiener_{label}", lhs, scale * (1.0 - a0 ** 2), {**params, "block": key}))

    # operator form, general A_0
    F = gen_schur(rng, k, n, degree, m_coeff=2, real_a0=False).F
    A0 = F.constant
    D = np.eye(2) - A0.conj().T @ A0
    for label, blocks in (("Lambda", F.blocks_by_multidegree()), ("Gamma", F.blocks_by_total_degree())):
        for key, block in blocks.items():
            if key == 0 or key == (0,) * k:
                continue
            value = _relative_top_eig(_gram(block), D)
            if value is None:
                value = _top_eig(_gram(block) - D) + 1.0
            checks.append((f"wiener_operator_{label}", value, scale * 1.0, {**params, "m": 2, "block": key}))
    return checks


def _wiener_probes(scale: float) -> Tuple[List[Check], List[ProbeResult]]:
    checks, probes = [], []
    for a in (0.5, 0.9):
        F = _normalized_mobius(a, 60)
        a0 = abs(F.constant[0, 0])
        a1 = abs(F.terms[next(w for w in F.terms if w.degree == 1)][0, 0])
        checks.append(("wiener_mobius", a1, scale * (1.0 - a0 ** 2), {"a": a}))
        probes.append(ProbeResult(name=f"wiener_mobius_a{a}", value=a1 / (1.0 - a0 ** 2),
                                  expected="ratio above 0.9", ok=0.9 < a1 / (1.0 - a0 ** 2) <= 1.0 + 1e-9))
    return checks, probes


def wiener_suite(seed: Optional[int] = None, trials: Optional[int] = None, tol: Optional[float] = None,
                 rhs_scale: float = 1.0, workers: Optional[int] = None) -> SuiteReport:
    """Wiener inequality ||sum_Lambda A^*A||^(1/2) <= 1 - |a_0|^2 on right minimal sets"""
    return _run_suite("wiener", _wiener_trial, _wiener_probes, seed, trials, tol, rhs_scale, workers)


# Multi-homogeneous Bohr

def _bohr_mh_trial(rng: np.random.Generator, scale: float) -> List[Check]:
    n, degree = _draw_shape(rng)
    k = len(n)
    m = int(rng.integers(1, 3))
    F = gen_schur(rng, k, n, degree, m_coeff=m, scalar_a0=True, real_a0=False).F
    params = _shape_params(n, degree, m)
    a0 = abs(F.constant[0, 0])
    checks: List[Check] = []

    r = rng.uniform(0.0, 0.6, size=k)
    rhs = a0 + (1.0 - a0 ** 2) * (1.0 / np.prod(1.0 - r) - 1.0)
    checks.append(("bohr_mh", majorant_mh(F, r), scale * rhs, {**params, "r": r.tolist()}))

    r_eq = np.full(k, 1.0 - (2.0 / 3.0) ** (1.0 / k))
    checks.append(("bohr_mh_two_thirds", majorant_mh(F, r_eq), scale * 1.0, {**params, "r": r_eq.tolist()}))

    if m == 1:
        r_k = float(rng.uniform(0.0, 0.9))
        checks.append(("bohr_mh_bound_K", majorant_mh(F, r_k), scale * bound_K(r_k, k), {**params, "r": r_k}))
        G = gen_re_bounded(rng, k, n, degree, scalar_a0=True)
        checks.append(("bohr_mh_gamma", majorant_mh(G, _gamma(k)), scale * 1.0, {**params, "r": _gamma(k)}))
    return checks


def _bohr_mh_probes(scale: float) -> Tuple[List[Check], List[ProbeResult]]:
    checks, probes = [], []
    for a in (0.5, 0.9):
        F = _normalized_mobius(a, 60)
        value = majorant_mh(F, 1.0 / 3.0)
        checks.append(("bohr_mh_mobius", value, scale * 1.0, {"a": a, "r": 1.0 / 3.0}))
        closed = (1 + 3 * a - 2 * a * a) / (3 - a)
        probes.append(ProbeResult(name=f"bohr_mobius_a{a}", value=value, expected=f"about {closed:.6f}, at most 1",
                                  ok=abs(value - closed) < 1e-2 and value <= 1.0 + 1e-9))
    return checks, probes


def bohr_mh_suite(seed: Optional[int] = None, trials: Optional[int] = None, tol: Optional[float] = None,
                  rhs_scale: float = 1.0, workers: Optional[int] = None) -> SuiteReport:
    """Multi-homogeneous Bohr inequality and its radius gamma_k"""
    return _run_suite("bohr_mh", _bohr_mh_trial, _bohr_mh_probes, seed, trials, tol, rhs_scale, workers)


# Homogeneous Bohr

def _bohr_h_trial(rng: np.random.Generator, scale: float) -> List[Check]:
    n, degree = _draw_shape(rng)
    k = len(n)
    m = int(rng.integers(1, 3))
    sample = gen_schur(rng, k, n, degree, m_coeff=m, scalar_a0=True, real_a0=False)
    F, trunc = sample.F, sample.truncation
    params = _shape_params(n, degree, m)
    checks: List[Check] = []

    r1 = float(rng.uniform(0.0, 1.0 / 3.0))
    checks.append(("bohr_h", majorant_h(F, r1, trunc), scale * 1.0, {**params, "r": r1}))
    checks.append(("bohr_h_third", majorant_h(F, 1.0 / 3.0, trunc), scale * 1.0, {**params, "r": 1.0 / 3.0}))

    if m == 1:
        r2 = float(rng.uniform(0.0, 0.95))
        value = majorant_h(F, r2, trunc)
        checks.append(("bohr_h_omega", value, scale * bound_Omega(r2, k), {**params, "r": r2}))
        checks.append(("bohr_h_below_mh", value, scale * majorant_mh(F, r2), {**params, "r": r2}))
    return checks


def _bohr_h_probes(scale: float) -> Tuple[List[Check], List[ProbeResult]]:
    F = _normalized_mobius(0.9, 60)
    value = majorant_h(F, 1.0 / 3.0)
    checks = [("bohr_h_mobius", value, scale * 1.0, {"a": 0.9, "r": 1.0 / 3.0})]
    above = 0.9 + 0.19 * 0.4 / (1 - 0.9 * 0.4)
    probes = [
        ProbeResult(name="bohr_h_mobius_third", value=value, expected="<= 1", ok=value <= 1.0 + 1e-9),
        ProbeResult(name="bohr_h_mobius_0.4", value=above, expected="> 1", ok=above > 1.0),
    ]
    return checks, probes


def bohr_h_suite(seed: Optional[int] = None, trials: Optional[int] = None, tol: Optional[float] = None,
                 rhs_scale: float = 1.0, workers: Optional[int] = None) -> SuiteReport:
    """Homogeneous Bohr inequality with radius 1/3 and the Omega bound"""
    return _run_suite("bohr_h", _bohr_h_trial, _bohr_h_probes, seed, trials, tol, rhs_scale, workers)


# Bohr with F(0) = 0

def _bohr_zero_trial(rng: np.random.Generator, scale: float) -> List[Check]:
    n, degree = _draw_shape(rng)
    k = len(n)
    params = _shape_params(n, degree)
    sample = gen_schur(rng, k, n, degree, m_coeff=1, zero_a0=True)
    F, trunc = sample.F, sample.truncation
    r_half = np.full(k, 1.0 - 0.5 ** (1.0 / k))
    r_sqrt = math.sqrt(1.0 - 0.5 ** (1.0 / k))
    r = rng.uniform(0.0, 0.9, size=k)
    checks: List[Check] = [
        ("bohr_zero_h_half", majorant_h(F, 0.5, trunc), scale * 1.0, {**params, "r": 0.5}),
        ("bohr_zero_mh_half", majorant_mh(F, r_half), scale * 1.0, {**params, "r": r_half.tolist()}),
        ("bohr_zero_mh_sqrt", majorant_mh(F, r_sqrt), scale * 1.0, {**params, "r": r_sqrt}),
        ("bohr_zero_mh_tk", majorant_mh(F, _t_zero(k)), scale * 1.0, {**params, "r": _t_zero(k)}),
        ("bohr_zero_bound_K0", majorant_mh(F, r), scale * bound_K0(r), {**params, "r": r.tolist()}),
    ]

    sample = gen_schur(rng, k, n, degree, m_coeff=2, zero_a0=True)
    F, trunc = sample.F, sample.truncation
    params = _shape_params(n, degree, 2)
    checks.append(("bohr_zero_operator_h_half", majorant_h(F, 0.5, trunc), scale * 1.0, {**params, "r": 0.5}))
    checks.append(("bohr_zero_operator_mh_half", majorant_mh(F, r_half), scale * 1.0,
                   {**params, "r": r_half.tolist()}))
    return checks


def _bohr_zero_probes(scale: float) -> Tuple[List[Check], List[ProbeResult]]:
    # z f_a(z): a unit-norm function vanishing at 0
    coeffs = np.concatenate([[0.0], mobius_coefficients(0.9, 40)])
    F = one_variable_polynomial(coeffs)
    trunc = Truncation(degrees=(41 + settings.SUITE_HEADROOM,), alphabet_sizes=(1,))
    F = F.scaled(1.0 / operator_norm(assemble(F, 1.0, trunc)).value)
    value = majorant_h(F, 0.5, trunc)
    checks = [("bohr_zero_mobius", value, scale * 1.0, {"a": 0.9, "r": 0.5})]
    probes = [ProbeResult(name="t_1_zero", value=_t_zero(1), expected="1/2", ok=abs(_t_zero(1) - 0.5) < 1e-10)]
    return checks, probes


def bohr_zero_suite(seed: Optional[int] = None, trials: Optional[int] = None, tol: Optional[float] = None,
                    rhs_scale: float = 1.0, workers: Optional[int] = None) -> SuiteReport:
    """Bohr inequalities for functions vanishing at the origin"""
    return _run_suite("bohr_zero", _bohr_zero_trial, _bohr_zero_probes, seed, trials, tol, rhs_scale, workers)


# Landau, operator coefficients

def _positivity_matrix(A0: np.ndarray, coeffs: List[np.ndarray], scale: float) -> np.ndarray:
    """[[2s(I - A_0), A^* row], [A column, 2s(I - A_0) diagonal]]"""
    m = A0.shape[0]
    diag = 2.0 * scale * (np.eye(m) - A0)
    size = len(coeffs) + 1
    P = np.zeros((size * m, size * m), dtype=np.complex128)
    for j in range(size):
        P[j * m:(j + 1) * m, j * m:(j + 1) * m] = diag
    for j, A in enumerate(coeffs, start=1):
        P[j * m:(j + 1) * m, :m] = A
        P[:m, j * m:(j + 1) * m] = A.conj().T
    return P


def _landau_op_trial(rng: np.random.Generator, scale: float) -> List[Check]:
    n, degree = _draw_shape(rng)
    k = len(n)
    m = int(rng.integers(1, 3))
    F = gen_re_bounded(rng, k, n, degree, m_coeff=m)
    params = _shape_params(n, degree, m)
    A0 = F.constant
    A0 = (A0 + A0.conj().T) / 2.0
    gap = np.eye(m) - A0
    gap_norm = operator_norm(gap).value
    checks: List[Check] = []
    for label, blocks in (("Lambda", F.blocks_by_multidegree()), ("Gamma", F.blocks_by_total_degree())):
        for key, block in blocks.items():
            if key == 0 or key == (0,) * k:
                continue
            bound = scale * 4.0 * gap_norm
            value = _relative_top_eig(_gram(block), gap)
            if value is None:
                # I - A_0 singular: gram <= bound (I - A_0) read off directly
                value = _top_eig(_gram(block) - bound * gap) + bound
            checks.append((f"landau_gram_{label}", value, bound, {**params, "block": key}))

    for p, block in F.blocks_by_multidegree().items():
        if p == (0,) * k:
            continue
        block_trunc = Truncation(degrees=p, alphabet_sizes=n)
        norm = operator_norm(assemble(_block_polynomial(F, block), 1.0, block_trunc)).value
        checks.append(("landau_orthogonal", norm, scale * 2.0 * gap_norm, {**params, "block": p}))
        if len(block) <= 6:
            P = _positivity_matrix(A0, list(block.values()), scale)
            lowest = min_eig_hermitian((P + P.conj().T) / 2.0).value
            checks.append(("landau_positivity", -lowest, 0.0, {**params, "block": p}))

    r = np.full(k, 1.0 - (2.0 / 3.0) ** (1.0 / k))
    rhs = operator_norm(A0).value + gap_norm
    checks.append(("landau_bohr", majorant_mh(F, r), scale * rhs, {**params, "r": r.tolist()}))
    return checks


def _landau_op_probes(scale: float) -> Tuple[List[Check], List[ProbeResult]]:
    checks, probes = [], []
    for a in (0.5, 0.9):
        F = _normalized_mobius(a, 60)
        a0 = F.constant[0, 0].real
        a1 = abs(F.terms[next(w for w in F.terms if w.degree == 1)][0, 0])
        checks.append(("landau_mobius", a1, scale * 2.0 * (1.0 - a0), {"a": a}))
        ratio = a1 / (2.0 * (1.0 - a0))
        probes.append(ProbeResult(name=f"landau_mobius_a{a}", value=ratio, expected=f"about {(1 + a) / 2:.4f}, at most 1",
                                  ok=0.8 * (1 + a) / 2 < ratio <= 1.0 + 1e-9))
    return checks, probes


def landau_op_suite(seed: Optional[int] = None, trials: Optional[int] = None, tol: Optional[float] = None,
                    rhs_scale: float = 1.0, workers: Optional[int] = None) -> SuiteReport:
    """Landau inequalities for F(0) >= 0 and Re F <= I"""
    return _run_suite("landau_op", _landau_op_trial, _landau_op_probes, seed, trials, tol, rhs_scale, workers)


# Fejér

def _fejer_trial(m_max: int) -> TrialFn:
    def trial(rng: np.random.Generator, scale: float) -> List[Check]:
        checks: List[Check] = []
        for m in range(1, m_max + 1):
            c = gen_positive_trig(rng, m)
            a0 = c[0].real
            for p in range(1, m + 1):
                ap = 2.0 * abs(c[p])
                checks.append(("fejer_scalar", ap, scale * 2.0 * a0 * cosine_weight(m, p), {"m": m, "p": p}))
                checks.append(("fejer_caratheodory", ap, scale * 2.0 * a0, {"m": m, "p": p}))

        # operator form on one factor: F = G^* G compressed to degree 2D + 1
        size = int(rng.integers(1, 3))
        D = int(rng.integers(1, 3))
        m_coeff = int(rng.integers(1, 3))
        G = gen_schur(rng, 1, (size,), D, m_coeff=m_coeff, real_a0=False).F
        trunc = Truncation(degrees=(2 * D + 1,), alphabet_sizes=(size,))
        Gm = assemble(G, 1.0, trunc).toarray()
        K = extract_pluriharmonic(Gm.conj().T @ Gm, trunc, max_degrees=[D], tol=1e-9)
        A0_norm = operator_norm(K.constant).value
        holo = K.holomorphic_part()
        params = {"n": [size], "degree": D, "m": m_coeff}
        for q, block in holo.blocks_by_total_degree().items():
            if q == 0:
                continue
            value = _block_numrad(holo, block, trunc)
            checks.append(("fejer_operator", value, scale * A0_norm * cosine_weight(D, q), {**params, "q": q}))
        if m_coeff == 1:
            first = holo.blocks_by_total_degree().get(1, {})
            grad = math.sqrt(sum(abs(c[0, 0]) ** 2 for c in first.values()))
            checks.append(("fejer_gradient", grad, scale * A0_norm * cosine_weight(D, 1), params))
        return checks
    return trial


def _fejer_probes(m_max: int) -> ProbeFn:
    def probes_fn(scale: float) -> Tuple[List[Check], List[ProbeResult]]:
        checks, probes = [], []
        for m in range(1, m_max + 1):
            c = positive_trig_coefficients(fejer_extremal_factor(m))
            a0, a1 = c[0].real, 2.0 * abs(c[1])
            bound = 2.0 * a0 * cosine_weight(m, 1)
            checks.append(("fejer_extremal", a1, scale * bound, {"m": m, "p": 1}))
            probes.append(ProbeResult(name=f"fejer_extremal_m{m}", value=a1 / bound, expected="within 1e-3 of 1",
                                      ok=abs(a1 / bound - 1.0) < 1e-3))
        return checks, probes
    return probes_fn


def fejer_suite(seed: Optional[int] = None, trials: Optional[int] = None, tol: Optional[float] = None,
                rhs_scale: float = 1.0, workers: Optional[int] = None, m_max: int = 8) -> SuiteReport:
    """
    Fejér type coefficient bounds for positive polynomials

    Every trial draws one nonnegative trigonometric polynomial of each degree
    1..m_max and one positive pluriharmonic operator G^*G on a single factor.
    """
    if m_max < 1:
        raise ArgumentError("m_max must be >= 1")
    return _run_suite("fejer", _fejer_trial(m_max), _fejer_probes(m_max), seed, trials, tol, rhs_scale,
                      workers)


# Bohr inequality for numerical radii

def _bohr_numrad_trial(rng: np.random.Generator, scale: float) -> List[Check]:
    n, degree = _draw_shape(rng)
    k = len(n)
    sample = gen_schur(rng, k, n, degree, m_coeff=1, scalar_a0=True, real_a0=True)
    F, trunc = sample.F, sample.truncation
    a0 = F.constant[0, 0].real
    D = F.degree
    params = _shape_params(n, D)
    radii = {q: (a0 if q == 0 else _block_numrad(F, block, trunc))
             for q, block in F.blocks_by_total_degree().items()}
    checks: List[Check] = []
    for q, value in radii.items():
        if q > 0:
            checks.append(("numrad_block", value, scale * 2.0 * (1.0 - a0) * cosine_weight(D, q),
                           {**params, "q": q}))
    if D >= 1:
        t = _t_m(D)
        checks.append(("numrad_bohr", sum(v * t ** q for q, v in radii.items()), scale * 1.0, {**params, "t": t}))
    third = sum(v * (1.0 / 3.0) ** q for q, v in radii.items())
    checks.append(("numrad_bohr_third", third, scale * 1.0, {**params, "t": 1.0 / 3.0}))
    return checks


def _bohr_numrad_probes(scale: float) -> Tuple[List[Check], List[ProbeResult]]:
    # a_0 + (1 - a_0) z on a long truncation
    F = one_variable_polynomial([0.5, 0.5])
    trunc = Truncation(degrees=(20,), alphabet_sizes=(1,))
    F = F.scaled(1.0 / operator_norm(assemble(F, 1.0, trunc)).value)
    a0 = F.constant[0, 0].real
    block = F.blocks_by_total_degree()[1]
    value = _block_numrad(F, block, trunc)
    bound = 2.0 * (1.0 - a0) * cosine_weight(1, 1)
    checks = [
        ("numrad_block_linear", value, scale * bound, {"q": 1}),
        ("numrad_bohr_linear", a0 + value * _t_m(1), scale * 1.0, {"t": _t_m(1)}),
    ]
    probes = [
        ProbeResult(name="numrad_linear_ratio", value=value / bound, expected="close to 1", ok=value / bound > 0.98),
        ProbeResult(name="t_2", value=_t_m(2), expected="about 0.5176", ok=abs(_t_m(2) - 0.5176) < 1e-4),
    ]
    return checks, probes


def bohr_numrad_suite(seed: Optional[int] = None, trials: Optional[int] = None, tol: Optional[float] = None,
                      rhs_scale: float = 1.0, workers: Optional[int] = None) -> SuiteReport:
    """Bohr inequality for the numerical radii of homogeneous blocks with radius t_m"""
    return _run_suite("bohr_numrad", _bohr_numrad_trial, _bohr_numrad_probes, seed, trials, tol, rhs_scale,
                      workers)


# Landau on the polydisc

def _random_point(rng: np.random.Generator, k: int, radius: float) -> np.ndarray:
    moduli = radius * rng.uniform(0.0, 1.0, size=k)
    return moduli * np.exp(2j * np.pi * rng.uniform(0.0, 1.0, size=k))


def _landau_polydisc_trial(rng: np.random.Generator, scale: float) -> List[Check]:
    k = int(rng.integers(1, 4))
    degree = int(rng.integers(1, 4 if k < 3 else 3))
    arr = gen_polydisc(rng, k, degree, grid=64 if k < 3 else 32)
    params = {"k": k, "degree": degree}
    checks: List[Check] = []

    f0 = arr[(0,) * k]
    g = arr * (np.conj(f0) / abs(f0) if abs(f0) > 0 else 1.0)
    a0 = g[(0,) * k].real
    grad = polydisc_gradient(g, np.zeros(k))
    checks.append(("landau_origin", float(np.sum(np.abs(grad))),
                   scale * 2.0 * (1.0 - a0) * cosine_weight(degree, 1), params))

    a = _random_point(rng, k, 0.8)
    fa = polydisc_value(arr, a)
    g = arr * (np.conj(fa) / abs(fa) if abs(fa) > 0 else 1.0)
    grad = polydisc_gradient(g, a)
    lhs = float(np.sum((1.0 - np.abs(a) ** 2) * np.abs(grad)))
    checks.append(("landau_point", lhs, scale * 2.0 * (1.0 - abs(fa)), {**params, "a": [str(x) for x in a]}))
    return checks


def _landau_polydisc_probes(scale: float) -> Tuple[List[Check], List[ProbeResult]]:
    arr = mobius_coefficients(0.5, 30).astype(np.complex128)
    arr = arr / torus_sup_bound(arr, grid=4096)
    grad = abs(arr[1])
    bound = 2.0 * (1.0 - arr[0].real) * cosine_weight(30, 1)
    checks = [("landau_polydisc_mobius", grad, scale * bound, {"a": 0.5})]
    probes = [ProbeResult(name="landau_polydisc_mobius", value=grad / bound, expected="about 0.75",
                          ok=abs(grad / bound - 0.75) < 1e-2)]
    return checks, probes


def landau_polydisc_suite(seed: Optional[int] = None, trials: Optional[int] = None, tol: Optional[float] = None,
                          rhs_scale: float = 1.0, workers: Optional[int] = None) -> SuiteReport:
    """Landau gradient bounds for scalar polydisc functions with Re f <= 1"""
    return _run_suite("landau_polydisc", _landau_polydisc_trial, _landau_polydisc_probes, seed, trials, tol,
                      rhs_scale, workers)


# Harnack

def _poisson(w: complex) -> float:
    return (1.0 - abs(w) ** 2) / abs(1.0 - w) ** 2


def _cosine_harnack(rho: float, m: int) -> float:
    return 1.0 + 2.0 * sum(rho ** p * cosine_weight(m, p) for p in range(1, m + 1))


def _harnack_trial(rng: np.random.Generator, scale: float) -> List[Check]:
    checks: List[Check] = []
    k = int(rng.integers(1, 4))
    rho = rng.uniform(0.05, 0.95, size=k)
    z = _random_point(rng, k, 1.0) * rho
    outer = float(np.prod((1.0 + rho) / (1.0 - rho)))

    poles = rng.uniform(0.0, 0.999, size=k) * np.exp(2j * np.pi * rng.uniform(0.0, 1.0, size=k))
    value = float(np.prod([_poisson(c * zi) for c, zi in zip(poles, z)]))
    checks.append(("harnack_poisson", value, scale * outer, {"k": k, "rho": rho.tolist()}))

    degrees = rng.integers(1, 7, size=k)
    value, middle = 1.0, 1.0
    for m_i, zi, r_i in zip(degrees, z, rho):
        c = gen_positive_trig(rng, int(m_i))
        value *= (c[0] + 2.0 * np.sum(c[1:] * zi ** np.arange(1, m_i + 1))).real
        middle *= _cosine_harnack(r_i, int(m_i))
    params = {"k": k, "rho": rho.tolist(), "degrees": degrees.tolist()}
    checks.append(("harnack_trig", value, scale * middle, params))
    checks.append(("harnack_middle", middle, scale * outer, params))

    # operator form: F = G^* G, positive pluriharmonic
    n, degree = _draw_shape(rng)
    degree = min(degree, 2)
    m = int(rng.integers(1, 3))
    G = gen_schur(rng, len(n), n, degree, m_coeff=m, real_a0=False).F
    K = gram_pluriharmonic(G)
    rho = rng.uniform(0.1, 0.9, size=len(n))
    trunc = Truncation(degrees=tuple(d + settings.SUITE_HEADROOM for d in G.factor_degrees), alphabet_sizes=n)
    T = assemble_pluriharmonic(K, rho, trunc).toarray()
    dim = trunc.dimension
    A0 = T.reshape(m, dim, m, dim)[:, 0, :, 0]
    a0_norm = operator_norm(A0).value
    middle = a0_norm * float(np.prod([_cosine_harnack(r, d) for r, d in zip(rho, G.factor_degrees)]))
    outer = a0_norm * float(np.prod((1.0 + rho) / (1.0 - rho)))
    params = {**_shape_params(n, degree, m), "rho": rho.tolist()}
    checks.append(("harnack_operator", numerical_radius(T).value, scale * middle, params))
    checks.append(("harnack_operator_middle", middle, scale * outer, params))
    return checks


def _harnack_probes(scale: float) -> Tuple[List[Check], List[ProbeResult]]:
    value = _poisson(0.999 * 0.9)
    bound = 1.9 / 0.1
    checks = [("harnack_poisson_probe", value, scale * bound, {"c": 0.999, "rho": 0.9})]
    probes = [ProbeResult(name="harnack_poisson_c0.999", value=value / bound, expected=">= 0.95",
                          ok=value / bound >= 0.95)]
    return checks, probes


def harnack_suite(seed: Optional[int] = None, trials: Optional[int] = None, tol: Optional[float] = None,
                  rhs_scale: float = 1.0, workers: Optional[int] = None) -> SuiteReport:
    """Harnack type bounds for positive harmonic and pluriharmonic functions"""
    return _run_suite("harnack", _harnack_trial, _harnack_probes, seed, trials, tol, rhs_scale, workers)


# Re F <= I on the truncated model

def _re_gap(F: FreePolynomial, r: float, trunc: Truncation, scale: float = 1.0) -> float:
    T = assemble(F, r, trunc).toarray()
    M = 2.0 * scale * np.eye(T.shape[0]) - T - T.conj().T
    return min_eig_hermitian(M).value


def _re_bridge_trial(rng: np.random.Generator, scale: float) -> List[Check]:
    k = int(rng.integers(1, 3))
    degree = int(rng.integers(1, 4))
    arr = gen_polydisc(rng, k, degree)
    F = polydisc_polynomial(arr)
    trunc = Truncation(degrees=(degree + settings.SUITE_HEADROOM,) * k, alphabet_sizes=(1,) * k)
    params = {"k": k, "degree": degree}
    checks: List[Check] = []
    for r in (0.5, 0.9, float(rng.uniform(0.0, 1.0))):
        checks.append(("re_bridge", -_re_gap(F, r, trunc, scale), 0.0, {**params, "r": r}))

    # scaled up so that Re f = 1.25 at an interior point, the gap must go negative
    for _ in range(8):
        z0 = 0.6 * np.exp(2j * np.pi * rng.uniform(0.0, 1.0, size=k))
        fz = polydisc_value(arr, z0)
        if abs(fz) >= 0.2:
            bad = polydisc_polynomial(arr * (1.25 / fz))
            wide = Truncation(degrees=(12,) * k, alphabet_sizes=(1,) * k)
            checks.append(("re_bridge_converse", _re_gap(bad, 0.95, wide), -0.25,
                           {**params, "z": [str(x) for x in z0]}))
            break

    # noncommutative side: a Re-bounded draw keeps 2I - F - F^* >= 0 on its truncation
    n, degree = _draw_shape(rng)
    degree = min(degree, 2)
    m = int(rng.integers(1, 3))
    G = gen_re_bounded(rng, len(n), n, degree, m_coeff=m)
    trunc = Truncation(degrees=(degree + settings.SUITE_HEADROOM,) * len(n), alphabet_sizes=n)
    checks.append(("re_bridge_operator", -_re_gap(G, 1.0, trunc, scale), 0.0, _shape_params(n, degree, m)))
    return checks


def _re_bridge_probes(scale: float) -> Tuple[List[Check], List[ProbeResult]]:
    F = one_variable_polynomial([0.0, 1.0])
    trunc = Truncation(degrees=(20,), alphabet_sizes=(1,))
    gap = _re_gap(F, 0.99, trunc, scale)
    checks = [("re_bridge_shift", -gap, 0.0, {"r": 0.99})]
    probes = [ProbeResult(name="re_bridge_shift", value=gap, expected=">= 0", ok=gap >= -1e-12)]
    return checks, probes


def re_bridge_suite(seed: Optional[int] = None, trials: Optional[int] = None, tol: Optional[float] = None,
                    rhs_scale: float = 1.0, workers: Optional[int] = None) -> SuiteReport:
    """Re f <= 1 on the polydisc against 2I - F(rS) - F(rS)^* >= 0, both directions"""
    return _run_suite("re_bridge", _re_bridge_trial, _re_bridge_probes, seed, trials, tol, rhs_scale, workers)


# Bombieri type upper bound

def _bombieri_trial(rng: np.random.Generator, scale: float) -> List[Check]:
    n, degree = _draw_shape(rng)
    k = len(n)
    F = gen_schur(rng, k, n, degree, m_coeff=1, real_a0=False).F
    r = float(rng.uniform(0.0, 0.95))
    checks: List[Check] = [
        ("bombieri_upper", majorant_mh(F, r), scale * (1.0 - r * r) ** (-k / 2.0), {**_shape_params(n, degree), "r": r}),
    ]

    k = int(rng.integers(2, 4))
    factors, degrees = [], []
    for _ in range(k):
        d = int(rng.integers(1, 4 if k == 2 else 3))
        coeffs = rng.standard_normal(d + 1) + 1j * rng.standard_normal(d + 1)
        f = one_variable_polynomial(coeffs)
        trunc = Truncation(degrees=(d + settings.SUITE_HEADROOM,), alphabet_sizes=(1,))
        factors.append(f.scaled(1.0 / operator_norm(assemble(f, 1.0, trunc)).value))
        degrees.append(d + settings.SUITE_HEADROOM)
    G = product_polynomial(factors)
    trunc = Truncation(degrees=tuple(degrees), alphabet_sizes=(1,) * k)
    params = {"k": k, "degrees": degrees}
    norm = operator_norm(assemble(G, 1.0, trunc)).value
    checks.append(("bombieri_product_norm", abs(norm - 1.0), 0.0, params))
    r = float(rng.uniform(0.0, 0.9))
    product = float(np.prod([majorant_mh(f, r) for f in factors]))
    checks.append(("bombieri_product_majorant", abs(majorant_mh(G, r) - product), 0.0, {**params, "r": r}))
    return checks


def _bombieri_probes(scale: float) -> Tuple[List[Check], List[ProbeResult]]:
    r = 1.0 / 3.0
    factors = [mobius_polynomial(a, 8) for a in (0.3, 0.5)]
    value = majorant_mh(product_polynomial(factors), r)
    closed = float(np.prod([a + (1 - a * a) * r / (1 - a * r) for a in (0.3, 0.5)]))
    probes = [ProbeResult(name="bombieri_mobius_product", value=value, expected=f"about {closed:.10f}",
                          ok=abs(value - closed) < 1e-6)]
    return [], probes


def bombieri_upper_suite(seed: Optional[int] = None, trials: Optional[int] = None, tol: Optional[float] = None,
                         rhs_scale: float = 1.0, workers: Optional[int] = None) -> SuiteReport:
    """Upper bound D(F, r) <= prod (1 - r^2)^(-1/2) ||F|| and multiplicativity over product functions"""
    return _run_suite("bombieri_upper", _bombieri_trial, _bombieri_probes, seed, trials, tol, rhs_scale, workers)


SUITES: Dict[str, Callable[..., SuiteReport]] = {
    "wiener": wiener_suite,
    "bohr_mh": bohr_mh_suite,
    "bohr_h": bohr_h_suite,
    "bohr_zero": bohr_zero_suite,
    "landau_op": landau_op_suite,
    "fejer": fejer_suite,
    "bohr_numrad": bohr_numrad_suite,
    "landau_polydisc": landau_polydisc_suite,
    "harnack": harnack_suite,
    "re_bridge": re_bridge_suite,
    "bombieri_upper": bombieri_upper_suite,
}


def run_suites(
    names: Optional[Sequence[str]] = None,
    seed: Optional[int] = None,
    trials: Optional[int] = None,
    tol: Optional[float] = None,
    perturb: Optional[Dict[str, float]] = None,
    workers: Optional[int] = None,
) -> List[SuiteReport]:
    """
    Run the named suites in registry order of the request

    Args:
        names: Suite names, every registered suite when None
        seed: Suite seed
        trials: Trials per suite
        tol: Violation tolerance
        perturb: rhs_scale per suite name, for negative controls
        workers: Thread count for the trials

    Returns:
        list: one SuiteReport per suite
    """
    names = list(SUITES) if not names else list(names)
    perturb = perturb or {}
    unknown = [name for name in list(names) + list(perturb) if name not in SUITES]
    if unknown:
        raise ArgumentError(f"unknown suites {unknown}, expected names from {list(SUITES)}")
    reports = []
    for name in names:
        reports.append(SUITES[name](seed=seed, trials=trials, tol=tol, rhs_scale=perturb.get(name, 1.0),
                                    workers=workers))
    return reports
