"""
Truncations, free polynomials and k-pluriharmonic polynomials
"""

from collections import defaultdict
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from polybohr.models.words import MultiWord

# Pair (alpha; beta) indexing a k-pluriharmonic term S_alpha S_beta^*
WordPair = Tuple[MultiWord, MultiWord]


def _as_coefficient(value, m: int) -> np.ndarray:
    arr = np.asarray(value, dtype=np.complex128)
    if arr.ndim == 0:
        arr = arr * np.eye(m, dtype=np.complex128)
    if arr.shape != (m, m):
        raise ValueError(f"coefficient of shape {arr.shape}, expected ({m}, {m})")
    if not np.all(np.isfinite(arr)):
        raise ValueError("coefficient has non-finite entries")
    return arr


class Truncation(BaseModel):
    """Compression of the tensor product of Fock spaces to degrees <= d_i in factor i"""
    model_config = {"frozen": True}

    degrees: Tuple[int, ...] = Field(..., min_length=1, description="Max word length d_i per factor")
    alphabet_sizes: Tuple[int, ...] = Field(..., min_length=1, description="Alphabet sizes n_i")

    @model_validator(mode="after")
    def check_shape(self) -> "Truncation":
        if len(self.degrees) != len(self.alphabet_sizes):
            raise ValueError("degrees and alphabet_sizes must have the same length")
        if any(d < 0 for d in self.degrees):
            raise ValueError("truncation degrees must be >= 0")
        if any(n < 1 for n in self.alphabet_sizes):
            raise ValueError("alphabet sizes must be >= 1")
        return self

    @property
    def k(self) -> int:
        return len(self.degrees)

    @property
    def factor_dims(self) -> Tuple[int, ...]:
        return tuple(sum(n ** j for j in range(d + 1)) for n, d in zip(self.alphabet_sizes, self.degrees))

    @property
    def dimension(self) -> int:
        return int(np.prod(self.factor_dims))


class FreePolynomial(BaseModel):
    """F(X) = sum_alpha A_alpha (x) X_alpha with m x m complex coefficients"""
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    alphabet_sizes: Tuple[int, ...] = Field(..., min_length=1)
    coefficient_dim: int = Field(1, ge=1, description="m, coefficients are m x m")
    terms: Dict[MultiWord, Any] = Field(default_factory=dict, description="Coefficient per multiword")

    @model_validator(mode="after")
    def check_terms(self) -> "FreePolynomial":
        m = self.coefficient_dim
        for word, coeff in list(self.terms.items()):
            if word.alphabet_sizes != self.alphabet_sizes:
                raise ValueError(f"term {word} is not over alphabets {self.alphabet_sizes}")
            self.terms[word] = _as_coefficient(coeff, m)
        return self

    @classmethod
    def from_scalars(cls, n: Sequence[int], coefficients: Dict[MultiWord, complex]) -> "FreePolynomial":
        return cls(alphabet_sizes=tuple(n), coefficient_dim=1,
                   terms={w: np.array([[c]], dtype=np.complex128) for w, c in coefficients.items()})

    @property
    def k(self) -> int:
        return len(self.alphabet_sizes)

    @property
    def degree(self) -> int:
        return max((w.degree for w in self.terms), default=0)

    @property
    def factor_degrees(self) -> Tuple[int, ...]:
        """Max |alpha_i| over the terms, per factor"""
        degs = [0] * self.k
        for word in self.terms:
            degs = [max(a, b) for a, b in zip(degs, word.degrees)]
        return tuple(degs)

    @property
    def constant(self) -> np.ndarray:
        """A_0, the coefficient of the identity multiword"""
        zero = MultiWord.identity(self.alphabet_sizes)
        if zero in self.terms:
            return self.terms[zero]
        return np.zeros((self.coefficient_dim, self.coefficient_dim), dtype=np.complex128)

    def has_scalar_constant(self, atol: float = 1e-12) -> bool:
        a0 = self.constant
        return bool(np.allclose(a0, a0[0, 0] * np.eye(self.coefficient_dim), atol=atol))

    def scaled(self, factor: complex) -> "FreePolynomial":
        return FreePolynomial(alphabet_sizes=self.alphabet_sizes, coefficient_dim=self.coefficient_dim,
                              terms={w: factor * c for w, c in self.terms.items()})

    def left_multiplied(self, matrix: np.ndarray) -> "FreePolynomial":
        """(U (x) I) F, i.e. every coefficient replaced by U A_alpha"""
        return FreePolynomial(alphabet_sizes=self.alphabet_sizes, coefficient_dim=self.coefficient_dim,
                              terms={w: matrix @ c for w, c in self.terms.items()})

    def with_constant(self, a0: np.ndarray) -> "FreePolynomial":
        terms = dict(self.terms)
        terms[MultiWord.identity(self.alphabet_sizes)] = a0
        return FreePolynomial(alphabet_sizes=self.alphabet_sizes, coefficient_dim=self.coefficient_dim,
                              terms=terms)

    def blocks_by_multidegree(self) -> Dict[Tuple[int, ...], Dict[MultiWord, np.ndarray]]:
        """Terms grouped by the sets Lambda_p, keyed by p, in sorted order"""
        blocks: Dict[Tuple[int, ...], Dict[MultiWord, np.ndarray]] = defaultdict(dict)
        for word, coeff in self.terms.items():
            blocks[word.degrees][word] = coeff
        return dict(sorted(blocks.items()))

    def blocks_by_total_degree(self) -> Dict[int, Dict[MultiWord, np.ndarray]]:
        """Terms grouped by the sets Gamma_q, keyed by q, in sorted order"""
        blocks: Dict[int, Dict[MultiWord, np.ndarray]] = defaultdict(dict)
        for word, coeff in self.terms.items():
            blocks[word.degree][word] = coeff
        return dict(sorted(blocks.items()))


class KPluriharmonic(BaseModel):
    """F(X) = sum A_(alpha;beta) (x) X_alpha X_beta^* with alpha_i or beta_i empty in every factor"""
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    alphabet_sizes: Tuple[int, ...] = Field(..., min_length=1)
    coefficient_dim: int = Field(1, ge=1)
    terms: Dict[WordPair, Any] = Field(default_factory=dict, description="Coefficient per (alpha; beta)")

    @field_validator("terms")
    @classmethod
    def check_structure(cls, v: Dict[WordPair, Any]) -> Dict[WordPair, Any]:
        for alpha, beta in v:
            for a, b in zip(alpha.parts, beta.parts):
                if not (a.is_identity() or b.is_identity()):
                    raise ValueError(f"term ({alpha};{beta}) mixes S and S* inside one factor")
        return v

    @model_validator(mode="after")
    def check_terms(self) -> "KPluriharmonic":
        m = self.coefficient_dim
        for (alpha, beta), coeff in list(self.terms.items()):
            if alpha.alphabet_sizes != self.alphabet_sizes or beta.alphabet_sizes != self.alphabet_sizes:
                raise ValueError(f"term ({alpha};{beta}) is not over alphabets {self.alphabet_sizes}")
            self.terms[(alpha, beta)] = _as_coefficient(coeff, m)
        return self

    @property
    def constant(self) -> np.ndarray:
        zero = MultiWord.identity(self.alphabet_sizes)
        if (zero, zero) in self.terms:
            return self.terms[(zero, zero)]
        return np.zeros((self.coefficient_dim, self.coefficient_dim), dtype=np.complex128)

    @property
    def factor_degrees(self) -> Tuple[int, ...]:
        """Max of |alpha_i| + |beta_i| over the terms, per factor"""
        degs = [0] * len(self.alphabet_sizes)
        for alpha, beta in self.terms:
            degs = [max(d, a + b) for d, a, b in zip(degs, alpha.degrees, beta.degrees)]
        return tuple(degs)

    def holomorphic_part(self) -> FreePolynomial:
        """The terms with beta = g0, as a free polynomial"""
        zero = MultiWord.identity(self.alphabet_sizes)
        return FreePolynomial(alphabet_sizes=self.alphabet_sizes, coefficient_dim=self.coefficient_dim,
                              terms={alpha: c for (alpha, beta), c in self.terms.items() if beta == zero})


class SchurSample(BaseModel):
    """Random polynomial rescaled to unit norm at its truncation"""
    model_config = ConfigDict(arbitrary_types_allowed=True)

    F: FreePolynomial
    certified_norm_lower: float = Field(..., description="Truncated norm of F minus the solver residual")
    scaling: float = Field(..., description="Factor applied to the raw draw")
    headroom: int
    truncation: Truncation
    seed_entropy: List[int] = Field(default_factory=list, description="Entropy used to draw the sample")
    note: Optional[str] = None


class BerezinKernel(BaseModel):
    """Truncated Berezin kernel at a scalar point, stored as one vector per factor"""
    model_config = ConfigDict(arbitrary_types_allowed=True)

    truncation: Truncation
    factors: List[Any] = Field(..., description="Per-factor vectors (conj z_i)_w over the factor basis")
    delta: float = Field(..., gt=0.0, le=1.0, description="prod_i (1 - ||z_i||^2)")
    tail_bound: float = Field(..., ge=0.0, description="Bound on |K^* K - 1|")

    @property
    def norm_squared(self) -> float:
        return float(self.delta * np.prod([np.vdot(v, v).real for v in self.factors]))
