"""
Fock service - Truncated Fock-space model: basis, creation operators,
assembly of polynomial operators, multi-Toeplitz coefficient recovery and
the Berezin kernel at scalar points
"""

import itertools
import logging
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple, Union

import numpy as np
import scipy.sparse as sp

from polybohr.core.config import settings
from polybohr.core.exceptions import (
    AlphabetMismatchError,
    ArgumentError,
    DimensionCapError,
    DomainPointError,
    NonToeplitzError,
)
from polybohr.models.polynomial import BerezinKernel, FreePolynomial, KPluriharmonic, Truncation
from polybohr.models.words import MultiWord, Word

logger = logging.getLogger(__name__)

Letters = Tuple[int, ...]
Matrix = Union[np.ndarray, sp.spmatrix]
# A single radius, one radius per factor, or one radius per letter of each factor
Scaling = Union[float, Sequence[float], Sequence[Sequence[float]]]


@lru_cache(maxsize=128)
def _factor_words(n: int, d: int) -> Tuple[Letters, ...]:
    return tuple(w for length in range(d + 1) for w in itertools.product(range(1, n + 1), repeat=length))


@lru_cache(maxsize=128)
def _factor_index(n: int, d: int) -> Dict[Letters, int]:
    return {w: i for i, w in enumerate(_factor_words(n, d))}


@lru_cache(maxsize=128)
def _factor_lengths(n: int, d: int) -> np.ndarray:
    return np.array([len(w) for w in _factor_words(n, d)], dtype=np.int64)


@lru_cache(maxsize=4096)
def _factor_word_matrix(n: int, d: int, letters: Letters, side: str) -> sp.csr_matrix:
    """Compression of the left (prefix) or right (suffix) creation operator of a word"""
    words = _factor_words(n, d)
    index = _factor_index(n, d)
    dim = len(words)
    room = d - len(letters)
    rows, cols = [], []
    for col, w in enumerate(words):
        if len(w) > room:
            break
        target = letters + w if side == "left" else w + letters
        rows.append(index[target])
        cols.append(col)
    data = np.ones(len(rows), dtype=np.complex128)
    return sp.csr_matrix((data, (rows, cols)), shape=(dim, dim))


def check_dimension(trunc: Truncation, m: int = 1) -> int:
    dim = trunc.dimension * m
    if dim > settings.DIMENSION_CAP:
        raise DimensionCapError(f"truncated space of dimension {dim} exceeds cap {settings.DIMENSION_CAP}")
    if m > settings.COEFF_DIM_CAP:
        raise DimensionCapError(f"coefficient dimension {m} exceeds cap {settings.COEFF_DIM_CAP}")
    return dim


def _check_alphabets(sizes: Sequence[int], trunc: Truncation) -> None:
    if tuple(sizes) != trunc.alphabet_sizes:
        raise AlphabetMismatchError(f"alphabets {tuple(sizes)} do not match truncation {trunc.alphabet_sizes}")


def truncation_for(F: Union[FreePolynomial, KPluriharmonic], headroom: Optional[int] = None) -> Truncation:
    """Default truncation d_i = deg_i(F) + headroom"""
    headroom = settings.HEADROOM if headroom is None else headroom
    return Truncation(degrees=tuple(d + headroom for d in F.factor_degrees), alphabet_sizes=F.alphabet_sizes)


def basis(trunc: Truncation) -> List[MultiWord]:
    """
    Ordered basis of the truncated space

    Graded-lexicographic within each factor, first factor varying slowest
    (the order of the Kronecker product).
    """
    check_dimension(trunc)
    factors = [_factor_words(n, d) for n, d in zip(trunc.alphabet_sizes, trunc.degrees)]
    return [
        MultiWord.model_construct(parts=tuple(Word.model_construct(letters=w, n=n)
                                              for w, n in zip(combo, trunc.alphabet_sizes)))
        for combo in itertools.product(*factors)
    ]


def basis_index(trunc: Truncation, word: MultiWord) -> int:
    """Position of e_word in basis(trunc)"""
    _check_alphabets(word.alphabet_sizes, trunc)
    idx = 0
    for part, n, d in zip(word.parts, trunc.alphabet_sizes, trunc.degrees):
        if len(part) > d:
            raise ArgumentError(f"word {word} does not fit truncation {trunc.degrees}")
        idx = idx * len(_factor_words(n, d)) + _factor_index(n, d)[part.letters]
    return idx


def _embed(trunc: Truncation, factor_mats: Dict[int, sp.spmatrix]) -> sp.csr_matrix:
    result = None
    for i, (n, d) in enumerate(zip(trunc.alphabet_sizes, trunc.degrees)):
        mat = factor_mats.get(i)
        if mat is None:
            mat = sp.identity(len(_factor_words(n, d)), dtype=np.complex128, format="csr")
        result = mat if result is None else sp.kron(result, mat, format="csr")
    return result


@lru_cache(maxsize=4096)
def _word_matrix(sizes: Tuple[int, ...], degrees: Tuple[int, ...], parts: Tuple[Letters, ...],
                 side: str) -> sp.csr_matrix:
    result = None
    for n, d, letters in zip(sizes, degrees, parts):
        if letters:
            mat = _factor_word_matrix(n, d, letters, side)
        else:
            mat = sp.identity(len(_factor_words(n, d)), dtype=np.complex128, format="csr")
        result = mat if result is None else sp.kron(result, mat, format="csr")
    return result


def _cached_word_matrix(trunc: Truncation, word: MultiWord, side: str = "left") -> sp.csr_matrix:
    # shared cache entry, callers must not modify it
    return _word_matrix(trunc.alphabet_sizes, trunc.degrees, tuple(p.letters for p in word.parts), side)


def word_operator(trunc: Truncation, word: MultiWord, side: str = "left") -> sp.csr_matrix:
    """Compression of S_word (side='left') or R_word (side='right')"""
    if side not in ("left", "right"):
        raise ArgumentError(f"side must be 'left' or 'right', got {side}")
    _check_alphabets(word.alphabet_sizes, trunc)
    check_dimension(trunc)
    return _cached_word_matrix(trunc, word, side).copy()


def _letter_operator(trunc: Truncation, i: int, j: int, side: str) -> sp.csr_matrix:
    if not 1 <= i <= trunc.k:
        raise ArgumentError(f"factor {i} outside 1..{trunc.k}")
    n = trunc.alphabet_sizes[i - 1]
    if not 1 <= j <= n:
        raise ArgumentError(f"letter {j} outside 1..{n}")
    check_dimension(trunc)
    return _embed(trunc, {i - 1: _factor_word_matrix(n, trunc.degrees[i - 1], (j,), side)})


def left_creation(trunc: Truncation, i: int, j: int) -> sp.csr_matrix:
    """S_{i,j}: prepend g_j in factor i (1-based); top-degree words map to 0"""
    return _letter_operator(trunc, i, j, "left")


def right_creation(trunc: Truncation, i: int, j: int) -> sp.csr_matrix:
    """R_{i,j}: append g_j in factor i (1-based); top-degree words map to 0"""
    return _letter_operator(trunc, i, j, "right")


def interior_indices(trunc: Truncation, margin: Union[int, Sequence[int]] = 1) -> np.ndarray:
    """Basis indices with |alpha_i| <= d_i - margin_i in every factor"""
    margins = [margin] * trunc.k if isinstance(margin, int) else list(margin)
    mask = np.ones(1, dtype=bool)
    for n, d, mg in zip(trunc.alphabet_sizes, trunc.degrees, margins):
        mask = np.kron(mask, _factor_lengths(n, d) <= d - mg)
    return np.flatnonzero(mask)


def letter_scalings(rho: Scaling, n: Sequence[int]) -> List[np.ndarray]:
    """Normalize a scaling argument to one array of per-letter radii per factor"""
    if np.isscalar(rho):
        out = [np.full(size, float(rho)) for size in n]
    else:
        items = list(rho)
        if len(items) != len(n):
            raise ArgumentError(f"{len(items)} scalings given for {len(n)} factors")
        out = []
        for item, size in zip(items, n):
            arr = np.full(size, float(item)) if np.isscalar(item) else np.asarray(item, dtype=float)
            if arr.shape != (size,):
                raise ArgumentError(f"factor scaling of shape {arr.shape}, expected ({size},)")
            out.append(arr)
    for arr in out:
        if np.any(arr < 0) or np.any(arr > 1):
            raise ArgumentError("scalings must lie in [0, 1]")
    return out


def word_weight(scalings: List[np.ndarray], word: MultiWord) -> float:
    """rho_alpha, the product of the letter radii along the word"""
    weight = 1.0
    for arr, part in zip(scalings, word.parts):
        for letter in part.letters:
            weight *= arr[letter - 1]
    return float(weight)


def _warn_degree(degrees: Sequence[int], trunc: Truncation, what: str) -> None:
    if any(deg > d for deg, d in zip(degrees, trunc.degrees)):
        logger.warning(f"{what} of degree {tuple(degrees)} exceeds truncation {trunc.degrees}; "
                       f"top terms are compressed away")


def _sum_pieces(pieces: List[sp.coo_matrix], dim: int) -> sp.csr_matrix:
    """Sum of COO matrices in one pass; duplicate entries add up"""
    if not pieces:
        return sp.csr_matrix((dim, dim), dtype=np.complex128)
    rows = np.concatenate([p.row for p in pieces])
    cols = np.concatenate([p.col for p in pieces])
    data = np.concatenate([p.data for p in pieces]).astype(np.complex128)
    return sp.csr_matrix((data, (rows, cols)), shape=(dim, dim))


def assemble(F: FreePolynomial, rho: Scaling, trunc: Truncation) -> sp.csr_matrix:
    """
    Assemble F(rho S) = sum A_alpha (x) rho_alpha S_alpha on the truncated space

    Args:
        F: Free polynomial with m x m coefficients
        rho: Single radius, per-factor radii or per-letter radii
        trunc: Truncation of the Fock space

    Returns:
        csr_matrix: (m * dim) x (m * dim), coefficient index varying slowest
    """
    _check_alphabets(F.alphabet_sizes, trunc)
    dim = check_dimension(trunc, F.coefficient_dim)
    _warn_degree(F.factor_degrees, trunc, "polynomial")
    scalings = letter_scalings(rho, F.alphabet_sizes)
    pieces = []
    for word, coeff in F.terms.items():
        weight = word_weight(scalings, word)
        if weight == 0.0 or not np.any(coeff):
            continue
        pieces.append(sp.kron(sp.csr_matrix(weight * coeff), _cached_word_matrix(trunc, word), format="coo"))
    return _sum_pieces(pieces, dim)


def assemble_pluriharmonic(F: KPluriharmonic, rho: Scaling, trunc: Truncation) -> sp.csr_matrix:
    """Assemble sum A_(alpha;beta) (x) rho_alpha rho_beta S_alpha S_beta^* on the truncated space"""
    _check_alphabets(F.alphabet_sizes, trunc)
    dim = check_dimension(trunc, F.coefficient_dim)
    _warn_degree(F.factor_degrees, trunc, "pluriharmonic polynomial")
    scalings = letter_scalings(rho, F.alphabet_sizes)
    pieces = []
    for (alpha, beta), coeff in F.terms.items():
        weight = word_weight(scalings, alpha) * word_weight(scalings, beta)
        if weight == 0.0 or not np.any(coeff):
            continue
        op = _cached_word_matrix(trunc, alpha) @ _cached_word_matrix(trunc, beta).conj().T
        pieces.append(sp.kron(sp.csr_matrix(weight * coeff), op, format="coo"))
    return _sum_pieces(pieces, dim)


def _dense(T: Matrix) -> np.ndarray:
    return T.toarray() if sp.issparse(T) else np.asarray(T, dtype=np.complex128)


def _word_pairs(trunc: Truncation, max_degrees: Sequence[int]) -> List[Tuple[MultiWord, MultiWord]]:
    """All (alpha; beta) with one of alpha_i, beta_i empty and lengths <= max_degrees_i"""
    per_factor = []
    for n, mx in zip(trunc.alphabet_sizes, max_degrees):
        empty = Word.model_construct(letters=(), n=n)
        options = []
        for w in _factor_words(n, mx):
            word = Word.model_construct(letters=w, n=n)
            options.append((word, empty))
            if w:
                options.append((empty, word))
        per_factor.append(options)
    pairs = []
    for combo in itertools.product(*per_factor):
        alpha = MultiWord.model_construct(parts=tuple(a for a, _ in combo))
        beta = MultiWord.model_construct(parts=tuple(b for _, b in combo))
        pairs.append((alpha, beta))
    return pairs


def extract_pluriharmonic(
    T: Matrix,
    trunc: Truncation,
    max_degrees: Optional[Sequence[int]] = None,
    tol: float = 1e-10,
) -> KPluriharmonic:
    """
    Recover k-pluriharmonic coefficients from a multi-Toeplitz matrix

    The coefficient of S_alpha S_beta^* is the block <T (x (x) e_beta), y (x) e_alpha>.
    The reconstruction is compared with T on the interior block of margin max_degrees.

    Args:
        T: (m * dim) square matrix on the truncated space
        trunc: Truncation the matrix lives on
        max_degrees: Longest alpha_i / beta_i to read, d_i // 2 by default
        tol: Max entrywise reconstruction error relative to max(1, max|T|)

    Returns:
        KPluriharmonic: the recovered coefficients

    Raises:
        NonToeplitzError: when the reconstruction misses T on the interior block
    """
    dim = trunc.dimension
    dense = _dense(T)
    if dense.shape[0] != dense.shape[1] or dense.shape[0] % dim:
        raise ArgumentError(f"matrix of shape {dense.shape} does not live on a space of dimension {dim}")
    m = dense.shape[0] // dim
    if max_degrees is None:
        max_degrees = [d // 2 for d in trunc.degrees]
    blocks = dense.reshape(m, dim, m, dim)
    scale = max(1.0, float(np.max(np.abs(dense))) if dense.size else 1.0)

    terms = {}
    for alpha, beta in _word_pairs(trunc, max_degrees):
        coeff = blocks[:, basis_index(trunc, alpha), :, basis_index(trunc, beta)]
        if np.max(np.abs(coeff)) > 1e-14 * scale:
            terms[(alpha, beta)] = coeff
    K = KPluriharmonic(alphabet_sizes=trunc.alphabet_sizes, coefficient_dim=m, terms=terms)

    idx = interior_indices(trunc, list(max_degrees))
    full_idx = (np.arange(m)[:, None] * dim + idx[None, :]).ravel()
    rebuilt = assemble_pluriharmonic(K, 1.0, trunc).toarray() if terms else np.zeros_like(dense)
    residual = float(np.max(np.abs(rebuilt[np.ix_(full_idx, full_idx)] - dense[np.ix_(full_idx, full_idx)]),
                            initial=0.0))
    logger.debug(f"extracted {len(terms)} pluriharmonic terms, interior residual {residual:.3e}")
    if residual > tol * scale:
        raise NonToeplitzError(f"interior reconstruction residual {residual:.3e} exceeds {tol * scale:.3e}")
    return K


def is_multi_toeplitz(T: Matrix, trunc: Truncation, tol: float = 1e-10,
                      margin: Union[int, Sequence[int]] = 1) -> bool:
    """
    Check (I (x) R_{i,s})^* T (I (x) R_{i,t}) = delta_st T on the interior block

    Args:
        T: (m * dim) square matrix
        trunc: Truncation
        tol: Entrywise tolerance relative to max(1, max|T|)
        margin: Interior margin per factor, at least 1
    """
    dim = trunc.dimension
    dense = _dense(T)
    m = dense.shape[0] // dim
    scale = max(1.0, float(np.max(np.abs(dense))) if dense.size else 1.0)
    idx = interior_indices(trunc, margin)
    full_idx = (np.arange(m)[:, None] * dim + idx[None, :]).ravel()
    eye_m = sp.identity(m, dtype=np.complex128, format="csr")
    target = dense[np.ix_(full_idx, full_idx)]
    for i, n in enumerate(trunc.alphabet_sizes, start=1):
        rights = [sp.kron(eye_m, right_creation(trunc, i, j), format="csr") for j in range(1, n + 1)]
        for s, Rs in enumerate(rights):
            left = (Rs.conj().T @ dense)
            for t, Rt in enumerate(rights):
                block = np.asarray((Rt.T @ left.T).T)[np.ix_(full_idx, full_idx)]
                expected = target if s == t else 0.0
                if np.max(np.abs(block - expected), initial=0.0) > tol * scale:
                    return False
    return True


def gram_pluriharmonic(G: FreePolynomial) -> KPluriharmonic:
    """
    Pluriharmonic coefficients of G(S)^* G(S)

    In each factor S_gamma^* S_delta is S_sigma when delta = gamma sigma,
    S_sigma^* when gamma = delta sigma, and 0 otherwise.
    """
    terms: Dict[Tuple[MultiWord, MultiWord], np.ndarray] = {}
    for gamma, a_gamma in G.terms.items():
        for delta, a_delta in G.terms.items():
            alpha_parts, beta_parts = [], []
            for g, dl, n in zip(gamma.parts, delta.parts, G.alphabet_sizes):
                gl, dlet = g.letters, dl.letters
                if dlet[:len(gl)] == gl and len(gl) <= len(dlet):
                    alpha_parts.append(Word.model_construct(letters=dlet[len(gl):], n=n))
                    beta_parts.append(Word.model_construct(letters=(), n=n))
                elif gl[:len(dlet)] == dlet and len(dlet) <= len(gl):
                    alpha_parts.append(Word.model_construct(letters=(), n=n))
                    beta_parts.append(Word.model_construct(letters=gl[len(dlet):], n=n))
                else:
                    break
            else:
                key = (MultiWord.model_construct(parts=tuple(alpha_parts)),
                       MultiWord.model_construct(parts=tuple(beta_parts)))
                term = a_gamma.conj().T @ a_delta
                terms[key] = terms[key] + term if key in terms else term
    return KPluriharmonic(alphabet_sizes=G.alphabet_sizes, coefficient_dim=G.coefficient_dim, terms=terms)


def _check_point(z: Sequence[Sequence[complex]], n: Sequence[int]) -> List[np.ndarray]:
    if len(z) != len(n):
        raise ArgumentError(f"point has {len(z)} rows for {len(n)} factors")
    rows = []
    for row, size in zip(z, n):
        arr = np.atleast_1d(np.asarray(row, dtype=np.complex128))
        if arr.shape != (size,):
            raise ArgumentError(f"point row of shape {arr.shape}, expected ({size},)")
        rows.append(arr)
    return rows


def berezin_kernel(z: Sequence[Sequence[complex]], trunc: Truncation) -> BerezinKernel:
    """
    Truncated Berezin kernel K_z = Delta_z^(1/2) sum_beta conj(z)_beta e_beta

    Args:
        z: One row z_i in C^{n_i} per factor, with ||z_i|| < 1
        trunc: Truncation

    Returns:
        BerezinKernel: factor vectors, Delta_z and the bound on |K^*K - 1|
    """
    rows = _check_point(z, trunc.alphabet_sizes)
    factors = []
    tail = 1.0
    delta = 1.0
    for row, d in zip(rows, trunc.degrees):
        s = float(np.vdot(row, row).real)
        if s >= 1.0:
            raise DomainPointError(f"point row {row} has norm {s ** 0.5:.6g} >= 1")
        delta *= 1.0 - s
        tail *= 1.0 - s ** (d + 1)
        pieces = [np.ones(1, dtype=np.complex128)]
        for _ in range(d):
            pieces.append(np.kron(pieces[-1], row.conj()))
        factors.append(np.concatenate(pieces))
    eps = np.finfo(float).eps
    tail_bound = (1.0 - tail) + 64 * eps * sum(trunc.degrees) + 64 * eps
    return BerezinKernel(truncation=trunc, factors=factors, delta=delta, tail_bound=tail_bound)


def kernel_vector(kernel: BerezinKernel) -> np.ndarray:
    """The kernel as one vector of the truncated space"""
    check_dimension(kernel.truncation)
    vec = np.ones(1, dtype=np.complex128)
    for v in kernel.factors:
        vec = np.kron(vec, v)
    return np.sqrt(kernel.delta) * vec


def berezin_transform(T: Matrix, kernel: BerezinKernel) -> np.ndarray:
    """(I_m (x) K_z)^* T (I_m (x) K_z), an m x m matrix"""
    vec = kernel_vector(kernel)
    dim = vec.shape[0]
    if T.shape[0] % dim:
        raise ArgumentError(f"operator of shape {T.shape} does not live on dimension {dim}")
    m = T.shape[0] // dim
    V = np.kron(np.eye(m, dtype=np.complex128), vec[:, None])
    return V.conj().T @ np.asarray(T @ V)


def evaluate_scalar(F: FreePolynomial, z: Sequence[Sequence[complex]]) -> np.ndarray:
    """F(z) = sum A_alpha z_alpha at a point of commuting scalars"""
    rows = _check_point(z, F.alphabet_sizes)
    value = np.zeros((F.coefficient_dim, F.coefficient_dim), dtype=np.complex128)
    for word, coeff in F.terms.items():
        monomial = 1.0 + 0.0j
        for row, part in zip(rows, word.parts):
            for letter in part.letters:
                monomial *= row[letter - 1]
        value += monomial * coeff
    return value
