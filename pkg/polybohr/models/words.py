"""
Free semigroup words, multiwords and word sets
"""

from typing import Iterable, Sequence, Tuple

from pydantic import BaseModel, Field, field_validator, model_validator


class Word(BaseModel):
    """Word g_{j1}...g_{jp} over the alphabet {1..n}; the identity g0 has no letters"""
    model_config = {"frozen": True}

    letters: Tuple[int, ...] = Field(default=(), description="1-based letter indices")
    n: int = Field(..., ge=1, description="Alphabet size")

    @model_validator(mode="after")
    def check_letters(self) -> "Word":
        for letter in self.letters:
            if letter < 1 or letter > self.n:
                raise ValueError(f"letter {letter} outside alphabet 1..{self.n}")
        return self

    @classmethod
    def of(cls, n: int, *letters: int) -> "Word":
        return cls(letters=tuple(letters), n=n)

    @classmethod
    def identity(cls, n: int) -> "Word":
        return cls.model_construct(letters=(), n=n)

    def __len__(self) -> int:
        return len(self.letters)

    def is_identity(self) -> bool:
        return not self.letters

    def __str__(self) -> str:
        if not self.letters:
            return "g0"
        return "".join(f"g{letter}" for letter in self.letters)


class MultiWord(BaseModel):
    """k-tuple of words, one per factor of the polyball"""
    model_config = {"frozen": True}

    parts: Tuple[Word, ...] = Field(..., min_length=1)

    @property
    def alphabet_sizes(self) -> Tuple[int, ...]:
        return tuple(part.n for part in self.parts)

    @property
    def degrees(self) -> Tuple[int, ...]:
        """Multidegree (|alpha_1|, ..., |alpha_k|)"""
        return tuple(len(part) for part in self.parts)

    @property
    def degree(self) -> int:
        """Total degree |alpha_1| + ... + |alpha_k|"""
        return sum(len(part) for part in self.parts)

    @property
    def k(self) -> int:
        return len(self.parts)

    def is_identity(self) -> bool:
        return all(part.is_identity() for part in self.parts)

    @classmethod
    def of(cls, n: Sequence[int], parts: Sequence[Sequence[int]]) -> "MultiWord":
        """Build from alphabet sizes and letter lists, e.g. MultiWord.of((2, 1), [[1, 2], []])"""
        if len(n) != len(parts):
            raise ValueError(f"{len(parts)} parts given for {len(n)} factors")
        return cls(parts=tuple(Word(letters=tuple(p), n=size) for size, p in zip(n, parts)))

    @classmethod
    def identity(cls, n: Sequence[int]) -> "MultiWord":
        return cls.model_construct(parts=tuple(Word.identity(size) for size in n))

    def to_lists(self) -> list:
        return [list(part.letters) for part in self.parts]

    def __str__(self) -> str:
        return "(" + ",".join(str(part) for part in self.parts) + ")"


class WordSet(BaseModel):
    """Finite set of multiwords over common alphabet sizes, kept in insertion order"""
    model_config = {"frozen": True}

    alphabet_sizes: Tuple[int, ...] = Field(..., min_length=1)
    elements: Tuple[MultiWord, ...] = ()

    @field_validator("alphabet_sizes")
    @classmethod
    def check_sizes(cls, v: Tuple[int, ...]) -> Tuple[int, ...]:
        if any(size < 1 for size in v):
            raise ValueError("alphabet sizes must be >= 1")
        return v

    @model_validator(mode="after")
    def check_elements(self) -> "WordSet":
        for element in self.elements:
            if element.alphabet_sizes != self.alphabet_sizes:
                raise ValueError(f"element {element} is not over alphabets {self.alphabet_sizes}")
        if len(set(self.elements)) != len(self.elements):
            raise ValueError("duplicate elements in word set")
        return self

    @classmethod
    def of(cls, n: Sequence[int], elements: Iterable[MultiWord]) -> "WordSet":
        return cls(alphabet_sizes=tuple(n), elements=tuple(elements))

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, item: MultiWord) -> bool:
        return item in self.elements
