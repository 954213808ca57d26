"""
Spectral service - Operator norm, Hermitian extremal eigenvalues, positivity,
numerical radius and joint numerical radius
"""

import logging
from typing import List, Optional, Sequence, Tuple

import numpy as np
import scipy.linalg as la
import scipy.sparse as sp
import scipy.sparse.linalg as spla

from polybohr.core.config import settings
from polybohr.core.exceptions import ArgumentError, ConvergenceError, NotHermitianError
from polybohr.models.polynomial import FreePolynomial, Truncation
from polybohr.models.results import SpectralResult
from polybohr.services.fock_service import Matrix, Scaling, assemble, left_creation, truncation_for

logger = logging.getLogger(__name__)

_GOLDEN = (np.sqrt(5.0) - 1.0) / 2.0
# Roots of the level-set pencil closer than this to the unit circle count as crossings
_UNIT_TOL = 1e-6


def _check_finite(A: Matrix) -> None:
    data = A.data if sp.issparse(A) else np.asarray(A)
    if not np.all(np.isfinite(data)):
        raise ArgumentError("matrix has non-finite entries")


def _dense(A: Matrix) -> np.ndarray:
    return A.toarray() if sp.issparse(A) else np.asarray(A, dtype=np.complex128)


def _frobenius(A: Matrix) -> float:
    return float(spla.norm(A)) if sp.issparse(A) else float(np.linalg.norm(A))


def _check_hermitian(A: Matrix) -> None:
    if A.shape[0] != A.shape[1]:
        raise ArgumentError(f"square matrix required, got shape {A.shape}")
    skew = _frobenius(A - A.conj().T)
    if skew > settings.HERMITIAN_RTOL * max(_frobenius(A), 1.0):
        raise NotHermitianError(f"matrix is not Hermitian, ||A - A*||_F = {skew:.3e}")


def _lanczos(op: spla.LinearOperator, which: str, tol: float, seed: Optional[int]) -> Tuple[float, float, int]:
    """Extremal eigenvalue of a Hermitian operator with restarts; returns (value, residual, attempts)"""
    rng = np.random.default_rng(settings.SEED if seed is None else seed)
    n = op.shape[0]
    last_residual = np.inf
    for attempt in range(1, settings.EIG_RESTARTS + 1):
        v0 = rng.standard_normal(n) + 1j * rng.standard_normal(n)
        try:
            vals, vecs = spla.eigsh(op, k=1, which=which, v0=v0, tol=tol * 1e-2, maxiter=20 * n)
        except spla.ArpackNoConvergence:
            logger.debug(f"Lanczos attempt {attempt} did not converge, restarting")
            continue
        vec = vecs[:, 0] / np.linalg.norm(vecs[:, 0])
        last_residual = float(np.linalg.norm(op.matvec(vec) - vals[0] * vec))
        if last_residual <= tol:
            return float(vals[0]), last_residual, attempt
    raise ConvergenceError(f"Lanczos failed after {settings.EIG_RESTARTS} restarts, residual {last_residual:.3e}")


def operator_norm(A: Matrix, tol: float = 1e-10, seed: Optional[int] = None) -> SpectralResult:
    """
    Largest singular value of A

    Dense matrices up to settings.DENSE_CUTOFF use a full SVD; larger ones use
    Lanczos on A*A with the eigen-residual as certificate.

    Args:
        A: Dense or sparse complex matrix
        tol: Requested accuracy
        seed: Seed for the Lanczos start vectors

    Returns:
        SpectralResult: norm value, residual and method
    """
    _check_finite(A)
    if min(A.shape) == 0:
        return SpectralResult(value=0.0)
    if max(A.shape) <= settings.DENSE_CUTOFF:
        value = float(la.svdvals(_dense(A), check_finite=False)[0])
        return SpectralResult(value=value, residual=0.0, method="dense")

    gram = spla.LinearOperator((A.shape[1], A.shape[1]), matvec=lambda x: A.conj().T @ (A @ x),
                               dtype=np.complex128)
    lam, residual, attempts = _lanczos(gram, "LA", tol, seed)
    value = float(np.sqrt(max(lam, 0.0)))
    # |sigma^2 - lam| <= residual translates to |sigma - value| <= residual / value
    sigma_residual = residual / value if value > 0 else float(np.sqrt(residual))
    return SpectralResult(value=value, residual=sigma_residual, iterations=attempts,
                          converged=sigma_residual <= tol, method="lanczos")


def _hermitian_extreme(A: Matrix, which: str, tol: float) -> SpectralResult:
    _check_finite(A)
    _check_hermitian(A)
    if A.shape[0] <= settings.DENSE_CUTOFF:
        eigs = la.eigvalsh(_dense(A), check_finite=False)
        value = float(eigs[0] if which == "SA" else eigs[-1])
        return SpectralResult(value=value, method="dense")
    value, residual, attempts = _lanczos(spla.aslinearoperator(A), which, tol, None)
    return SpectralResult(value=value, residual=residual, iterations=attempts, method="lanczos")


def min_eig_hermitian(A: Matrix, tol: float = 1e-10) -> SpectralResult:
    """Smallest eigenvalue of a Hermitian matrix"""
    return _hermitian_extreme(A, "SA", tol)


def max_eig_hermitian(A: Matrix, tol: float = 1e-10) -> SpectralResult:
    """Largest eigenvalue of a Hermitian matrix"""
    return _hermitian_extreme(A, "LA", tol)


def is_positive(A: Matrix, tol: Optional[float] = None) -> bool:
    """
    Positivity test min_eig(A) >= -tol

    Args:
        A: Hermitian matrix
        tol: Absolute tolerance, settings.POSITIVITY_RTOL * ||A|| when None
    """
    if tol is None:
        tol = settings.POSITIVITY_RTOL * operator_norm(A).value
    return min_eig_hermitian(A).value >= -tol


def _split(T: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """Hermitian A, B with Re(e^{i theta} T) = cos(theta) A + sin(theta) B"""
    return (T + T.conj().T) / 2.0, 1j * (T - T.conj().T) / 2.0


def _top_eigs(A: np.ndarray, B: np.ndarray, thetas: np.ndarray) -> np.ndarray:
    n = A.shape[0]
    chunk = max(1, 4_000_000 // max(n * n, 1))
    out = np.empty(len(thetas))
    for start in range(0, len(thetas), chunk):
        th = thetas[start:start + chunk]
        stack = np.cos(th)[:, None, None] * A + np.sin(th)[:, None, None] * B
        out[start:start + chunk] = np.linalg.eigvalsh(stack)[:, -1]
    return out


def _golden_max(A: np.ndarray, B: np.ndarray, lo: float, hi: float, xtol: float = 1e-10) -> Tuple[float, float, int]:
    def h(t: float) -> float:
        return float(_top_eigs(A, B, np.array([t]))[0])

    c, d = hi - _GOLDEN * (hi - lo), lo + _GOLDEN * (hi - lo)
    hc, hd = h(c), h(d)
    steps = 0
    while hi - lo > xtol and steps < 200:
        steps += 1
        if hc >= hd:
            hi, d, hd = d, c, hc
            c = hi - _GOLDEN * (hi - lo)
            hc = h(c)
        else:
            lo, c, hc = c, d, hd
            d = lo + _GOLDEN * (hi - lo)
            hd = h(d)
    return (c, hc, steps) if hc >= hd else (d, hd, steps)


def _level_set_angles(T: np.ndarray, gamma: float) -> np.ndarray:
    """Angles theta where gamma is an eigenvalue of Re(e^{i theta} T)"""
    n = T.shape[0]
    eye = np.eye(n, dtype=np.complex128)
    zero = np.zeros((n, n), dtype=np.complex128)
    lhs = np.block([[zero, eye], [-T.conj().T, 2.0 * gamma * eye]])
    rhs = np.block([[eye, zero], [zero, T]])
    roots = la.eigvals(lhs, rhs, check_finite=False)
    roots = roots[np.isfinite(roots)]
    unimodular = roots[np.abs(np.abs(roots) - 1.0) < _UNIT_TOL]
    return np.sort(np.mod(np.angle(unimodular), 2 * np.pi))


def _polygon_bound(thetas: np.ndarray, values: np.ndarray) -> float:
    """Max modulus of the outer polygon cut out by the support lines Re(e^{i theta} w) <= h(theta)"""
    order = np.argsort(thetas)
    kept_t: List[float] = []
    kept_v: List[float] = []
    for t, v in zip(thetas[order], values[order]):
        if kept_t and t - kept_t[-1] < _UNIT_TOL:
            # repeated angle, the tighter support line wins
            kept_v[-1] = min(kept_v[-1], float(v))
            continue
        kept_t.append(float(t))
        kept_v.append(float(v))
    th, hv = np.array(kept_t), np.array(kept_v)
    nxt = np.roll(np.arange(len(th)), -1)
    gaps = np.mod(th[nxt] - th, 2 * np.pi)
    if len(th) < 3 or np.any(gaps >= np.pi):
        return np.inf
    best = 0.0
    for a, b in zip(range(len(th)), nxt):
        # x cos(t) - y sin(t) = h for t = th[a], th[b]
        mat = np.array([[np.cos(th[a]), -np.sin(th[a])], [np.cos(th[b]), -np.sin(th[b])]])
        point = np.linalg.solve(mat, np.array([hv[a], hv[b]]))
        best = max(best, float(np.hypot(*point)))
    return best


def numerical_radius(T: Matrix, tol: float = 1e-8, rotation_invariant: bool = False,
                     strict: bool = True) -> SpectralResult:
    """
    Numerical radius w(T) = sup_theta lambda_max(Re(e^{i theta} T))

    Hermitian T is answered by max |lambda|. With rotation_invariant=True the
    numerical range is known to be a disc about 0 (T homogeneous under the
    degree gauge) and w(T) = lambda_max(Re T). Otherwise an angle grid of
    settings.THETA_GRID points is refined by golden-section search around the
    three best local maxima, and the value is certified by a level-set test:
    gamma bounds w(T) from above iff det(z^2 T - 2 gamma z I + T^*) has no
    root on the unit circle. When the level-set sweeps do not settle, the grid
    is doubled up to settings.THETA_GRID_MAX and the residual is read off the
    polygon of support lines.

    Args:
        T: Square matrix
        tol: Requested accuracy
        rotation_invariant: Caller guarantees a circular numerical range
        strict: Raise ConvergenceError when the certificate stays above tol

    Returns:
        SpectralResult: value, certified residual and method
    """
    _check_finite(T)
    if T.shape[0] != T.shape[1]:
        raise ArgumentError(f"square matrix required, got shape {T.shape}")
    dense = _dense(T)
    if dense.shape[0] == 0:
        return SpectralResult(value=0.0, method="hermitian")
    A, B = _split(dense)
    if np.linalg.norm(B) <= settings.HERMITIAN_RTOL * max(np.linalg.norm(dense), 1.0):
        eigs = la.eigvalsh(A, check_finite=False)
        return SpectralResult(value=float(max(abs(eigs[0]), abs(eigs[-1]))), method="hermitian")
    if rotation_invariant:
        return SpectralResult(value=float(la.eigvalsh(A, check_finite=False)[-1]), method="circular")

    grid = settings.THETA_GRID
    thetas = 2 * np.pi * np.arange(grid) / grid
    values = _top_eigs(A, B, thetas)
    step = 2 * np.pi / grid
    local = [i for i in range(grid) if values[i] >= values[i - 1] and values[i] >= values[(i + 1) % grid]]
    starts = sorted(local, key=lambda i: -values[i])[:3]
    evaluations = grid
    extra_t, extra_v = [], []
    for i in starts:
        t, v, steps = _golden_max(A, B, thetas[i] - step, thetas[i] + step)
        extra_t.append(t % (2 * np.pi))
        extra_v.append(v)
        evaluations += steps
    value = float(max(values.max(), max(extra_v)))

    residual = np.inf
    for sweep in range(10):
        gamma = value + tol / 2.0
        crossings = _level_set_angles(dense, gamma)
        if crossings.size == 0:
            residual = gamma - value
            break
        mids = (crossings + np.roll(crossings, -1)) / 2.0
        mids[-1] += np.pi
        candidates = np.concatenate([crossings, np.mod(mids, 2 * np.pi)])
        cand_values = _top_eigs(A, B, candidates)
        best = int(np.argmax(cand_values))
        t, v, steps = _golden_max(A, B, candidates[best] - step, candidates[best] + step)
        evaluations += len(candidates) + steps
        extra_t.extend(list(candidates) + [t % (2 * np.pi)])
        extra_v.extend(list(cand_values) + [v])
        new_value = float(max(value, cand_values.max(), v))
        logger.debug(f"level-set sweep {sweep}: {crossings.size} crossings, value {new_value:.15g}")
        if new_value <= value:
            break
        value = new_value

    if not np.isfinite(residual):
        all_t = np.concatenate([thetas, np.array(extra_t)])
        all_v = np.concatenate([values, np.array(extra_v)])
        residual = _polygon_bound(all_t, all_v) - value
        while residual > tol and 2 * grid <= settings.THETA_GRID_MAX:
            # midpoints of the current grid, so the doubled grid repeats no angle
            fine = (2 * np.arange(grid) + 1) * np.pi / grid
            fine_v = _top_eigs(A, B, fine)
            grid *= 2
            evaluations += len(fine)
            all_t = np.concatenate([all_t, fine])
            all_v = np.concatenate([all_v, fine_v])
            value = max(value, float(fine_v.max()))
            residual = _polygon_bound(all_t, all_v) - value
            logger.debug(f"angle grid {grid}: polygon certificate {residual:.3e}")
    converged = bool(residual <= tol)
    if not converged:
        message = f"numerical radius certificate {residual:.3e} above tolerance {tol:.1e}"
        if strict:
            raise ConvergenceError(message)
        logger.warning(message)
    return SpectralResult(value=value, residual=float(max(residual, 0.0)), iterations=evaluations,
                          converged=converged, method="theta-sweep")


def joint_numerical_radius(Ts: Sequence[Matrix], aux_degree: int, tol: float = 1e-8) -> SpectralResult:
    """
    Joint numerical radius w(T_1..T_n) = w(sum_i T_i^* (x) S_i)

    S_i are the creation operators of an auxiliary Fock space with n letters
    truncated at aux_degree. The truncated value is a lower bound,
    nondecreasing in aux_degree.
    """
    if not Ts:
        raise ArgumentError("at least one operator is required")
    shape = Ts[0].shape
    if any(T.shape != shape or shape[0] != shape[1] for T in Ts):
        raise ArgumentError("operators must be square and of the same dimension")
    aux = Truncation(degrees=(aux_degree,), alphabet_sizes=(len(Ts),))
    total = None
    for j, T in enumerate(Ts, start=1):
        term = sp.kron(sp.csr_matrix(_dense(T).conj().T), left_creation(aux, 1, j), format="csr")
        total = term if total is None else total + term
    result = numerical_radius(total, tol=tol, rotation_invariant=True)
    return result.model_copy(update={
        "truncation": [aux_degree],
        "note": f"lower bound at auxiliary truncation {aux_degree}, nondecreasing in the degree",
    })


def norm_profile(F: FreePolynomial, rho: Scaling, headrooms: Sequence[int]) -> List[Tuple[List[int], float]]:
    """Truncated norms ||F(rho S)|| for increasing headroom, each a lower bound of the full norm"""
    profile = []
    for h in sorted(headrooms):
        trunc = truncation_for(F, h)
        value = operator_norm(assemble(F, rho, trunc)).value
        profile.append((list(trunc.degrees), value))
        logger.debug(f"norm at truncation {trunc.degrees}: {value:.12g}")
    return profile
