"""
Word service - Free semigroup arithmetic, minimal/orthogonal set predicates
and the exhaustions Lambda_p and Gamma_q
"""

import itertools
import logging
from functools import lru_cache
from math import prod
from typing import Iterator, List, Optional, Sequence, Tuple

from polybohr.core.config import settings
from polybohr.core.exceptions import AlphabetMismatchError, ArgumentError, EnumerationCapError
from polybohr.models.words import MultiWord, Word, WordSet

logger = logging.getLogger(__name__)

Letters = Tuple[int, ...]


def _check_alphabet(a: Word, b: Word) -> None:
    if a.n != b.n:
        raise AlphabetMismatchError(f"words over alphabets of size {a.n} and {b.n}")


def _check_multi_alphabet(a: MultiWord, b: MultiWord) -> None:
    if a.alphabet_sizes != b.alphabet_sizes:
        raise AlphabetMismatchError(f"multiwords over alphabets {a.alphabet_sizes} and {b.alphabet_sizes}")


def _is_prefix(gamma: Letters, omega: Letters) -> bool:
    return len(gamma) <= len(omega) and omega[:len(gamma)] == gamma


def _is_suffix(gamma: Letters, omega: Letters) -> bool:
    return len(gamma) <= len(omega) and omega[len(omega) - len(gamma):] == gamma


def reverse(w: Word) -> Word:
    """Reverse of a word, g_{j1}...g_{jp} -> g_{jp}...g_{j1}"""
    return Word.model_construct(letters=w.letters[::-1], n=w.n)


def right_divides(gamma: Word, omega: Word) -> Tuple[bool, Optional[Word]]:
    """
    Right division: gamma right-divides omega when omega = sigma gamma

    Args:
        gamma: Candidate right divisor
        omega: Word to divide

    Returns:
        tuple: (divides, sigma) with sigma None when gamma does not divide omega
    """
    _check_alphabet(gamma, omega)
    if not _is_suffix(gamma.letters, omega.letters):
        return False, None
    sigma = omega.letters[:len(omega.letters) - len(gamma.letters)]
    return True, Word.model_construct(letters=sigma, n=omega.n)


def left_divides(gamma: Word, omega: Word) -> Tuple[bool, Optional[Word]]:
    """
    Left division: gamma left-divides omega when omega = gamma sigma

    Args:
        gamma: Candidate left divisor (prefix)
        omega: Word to divide

    Returns:
        tuple: (divides, sigma) with sigma None when gamma does not divide omega
    """
    _check_alphabet(gamma, omega)
    if not _is_prefix(gamma.letters, omega.letters):
        return False, None
    return True, Word.model_construct(letters=omega.letters[len(gamma.letters):], n=omega.n)


def multiword_right_leq(beta: MultiWord, gamma: MultiWord) -> bool:
    """True iff beta_i right-divides gamma_i in every factor"""
    _check_multi_alphabet(beta, gamma)
    return all(_is_suffix(b.letters, g.letters) for b, g in zip(beta.parts, gamma.parts))


def multiword_left_leq(beta: MultiWord, gamma: MultiWord) -> bool:
    """True iff beta_i left-divides gamma_i in every factor"""
    _check_multi_alphabet(beta, gamma)
    return all(_is_prefix(b.letters, g.letters) for b, g in zip(beta.parts, gamma.parts))


def reverse_multiword(w: MultiWord) -> MultiWord:
    return MultiWord.model_construct(parts=tuple(reverse(part) for part in w.parts))


def reverse_set(ws: WordSet) -> WordSet:
    return WordSet.model_construct(alphabet_sizes=ws.alphabet_sizes,
                                   elements=tuple(reverse_multiword(w) for w in ws.elements))


def is_right_minimal(ws: WordSet) -> bool:
    """True iff no two distinct elements are comparable in the right order"""
    elements = ws.elements
    for a, b in itertools.combinations(elements, 2):
        if multiword_right_leq(a, b) or multiword_right_leq(b, a):
            return False
    return True


def is_left_minimal(ws: WordSet) -> bool:
    """True iff no two distinct elements are comparable in the left order"""
    return is_right_minimal(reverse_set(ws))


def _incomparable(a: Letters, b: Letters) -> bool:
    return not (_is_prefix(a, b) or _is_prefix(b, a))


def is_orthogonal(ws: WordSet) -> bool:
    """
    True iff the isometries S_alpha, alpha in the set, have pairwise orthogonal ranges

    S_beta^* S_alpha vanishes exactly when some factor i has alpha_i and beta_i
    incomparable in the prefix order. Such a factor has alpha_i != g0 and beta_i
    not a left divisor of alpha_i, for both orders of the pair.
    """
    for a, b in itertools.combinations(ws.elements, 2):
        if not any(_incomparable(x.letters, y.letters) for x, y in zip(a.parts, b.parts)):
            return False
    return True


@lru_cache(maxsize=256)
def _letters_of_length(n: int, length: int) -> Tuple[Letters, ...]:
    return tuple(itertools.product(range(1, n + 1), repeat=length))


def words_of_length(n: int, length: int) -> List[Word]:
    """All words of the given length, lexicographic"""
    if length < 0:
        raise ArgumentError("word length must be >= 0")
    return [Word.model_construct(letters=letters, n=n) for letters in _letters_of_length(n, length)]


def words_up_to(n: int, d: int) -> List[Word]:
    """All words of length <= d in graded-lexicographic order"""
    return [w for length in range(d + 1) for w in words_of_length(n, length)]


def multiword_identity(n: Sequence[int]) -> MultiWord:
    return MultiWord.identity(tuple(n))


def _check_cap(count: int, cap: Optional[int], what: str) -> None:
    cap = settings.ENUMERATION_CAP if cap is None else cap
    if count > cap:
        raise EnumerationCapError(f"{what} has {count} elements, cap is {cap}")


def _lambda_elements(p: Sequence[int], n: Sequence[int]) -> Iterator[MultiWord]:
    factors = [_letters_of_length(size, pi) for size, pi in zip(n, p)]
    for combo in itertools.product(*factors):
        yield MultiWord.model_construct(
            parts=tuple(Word.model_construct(letters=letters, n=size) for letters, size in zip(combo, n)))


def enumerate_lambda(p: Sequence[int], n: Sequence[int], cap: Optional[int] = None) -> WordSet:
    """
    All multiwords of multidegree p

    Args:
        p: Degree vector (p_1..p_k)
        n: Alphabet sizes (n_1..n_k)
        cap: Max cardinality, settings.ENUMERATION_CAP when None

    Returns:
        WordSet: Lambda_p with prod n_i^p_i elements
    """
    if len(p) != len(n):
        raise AlphabetMismatchError(f"degree vector of length {len(p)} for {len(n)} factors")
    if any(pi < 0 for pi in p):
        raise ArgumentError("degrees must be >= 0")
    _check_cap(prod(size ** pi for size, pi in zip(n, p)), cap, f"Lambda_{tuple(p)}")
    return WordSet.model_construct(alphabet_sizes=tuple(n), elements=tuple(_lambda_elements(p, n)))


def compositions(q: int, k: int) -> List[Tuple[int, ...]]:
    """Degree vectors p with |p| = q, lexicographically decreasing"""
    if k == 1:
        return [(q,)]
    return [(first,) + rest for first in range(q, -1, -1) for rest in compositions(q - first, k - 1)]


def enumerate_gamma(q: int, n: Sequence[int], cap: Optional[int] = None) -> WordSet:
    """
    All multiwords of total degree q

    Args:
        q: Total degree
        n: Alphabet sizes (n_1..n_k)
        cap: Max cardinality, settings.ENUMERATION_CAP when None

    Returns:
        WordSet: Gamma_q, the union of Lambda_p over |p| = q
    """
    if q < 0:
        raise ArgumentError("total degree must be >= 0")
    parts = compositions(q, len(n))
    _check_cap(sum(prod(size ** pi for size, pi in zip(n, p)) for p in parts), cap, f"Gamma_{q}")
    elements = tuple(w for p in parts for w in _lambda_elements(p, n))
    return WordSet.model_construct(alphabet_sizes=tuple(n), elements=elements)
