"""Reduced words in free groups, and their evaluation in arbitrary carriers.

Words are stored as syllable lists (generator, nonzero exponent) with
adjacent generators distinct, so the commutator words used by the
contraction dynamics stay linear-sized in the nesting depth even though
their letter length grows geometrically.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Protocol, TypeVar

import numpy as np

from .groups import FiniteGroup

T = TypeVar("T")


@dataclass(frozen=True)
class FreeWord:
    """A reduced word; ``syllables`` is a tuple of (generator, exponent)."""

    syllables: tuple[tuple[str, int], ...] = ()

    def __post_init__(self):
        prev = None
        for g, e in self.syllables:
            if e == 0:
                raise ValueError(f"zero exponent on generator {g!r}")
            if g == prev:
                raise ValueError(f"unreduced word: repeated generator {g!r}")
            prev = g

    @classmethod
    def gen(cls, name: str, exponent: int = 1) -> "FreeWord":
        return reduce_free_word([(name, exponent)])

    @classmethod
    def identity(cls) -> "FreeWord":
        return cls(())

    def is_identity(self) -> bool:
        return not self.syllables

    def generators(self) -> set[str]:
        return {g for g, _ in self.syllables}

    def letter_length(self) -> int:
        return sum(abs(e) for _, e in self.syllables)

    def inverse(self) -> "FreeWord":
        return FreeWord(tuple((g, -e) for g, e in reversed(self.syllables)))

    def __mul__(self, other: "FreeWord") -> "FreeWord":
        return reduce_free_word(self.syllables + other.syllables)

    def __pow__(self, n: int) -> "FreeWord":
        if n == 0:
            return FreeWord.identity()
        base = self if n > 0 else self.inverse()
        out = base
        for _ in range(abs(n) - 1):
            out = out * base
        return out

    def __str__(self) -> str:
        if not self.syllables:
            return "1"
        return " ".join(g if e == 1 else f"{g}^{e}" for g, e in self.syllables)


def reduce_free_word(raw: Iterable[tuple[str, int]]) -> FreeWord:
    """Reduce an arbitrary syllable list to its unique normal form.

    Single-pass stack reduction: merging a syllable into the top of the
    stack may annihilate it, which re-exposes the previous syllable to
    further cancellation.
    """
    stack: list[tuple[str, int]] = []
    for g, e in raw:
        e = int(e)
        if e == 0:
            continue
        if stack and stack[-1][0] == g:
            merged = stack[-1][1] + e
            stack.pop()
            if merged != 0:
                stack.append((g, merged))
        else:
            stack.append((g, e))
    return FreeWord(tuple(stack))


def commutator(a: FreeWord, b: FreeWord) -> FreeWord:
    return a * b * a.inverse() * b.inverse()


def w_sequence(n: int) -> FreeWord:
    """The n-th word of the nested-commutator family in <x, y>.

    The first word is x and each successor is the commutator of the
    previous word with the conjugate y^k x y^-k (k = index of the previous
    word), so evaluating at a unitary and a Haar unitary produces the
    contracting sequence studied by the dynamics module.
    """
    if n < 1:
        raise ValueError("word index must be >= 1")
    x = FreeWord.gen("x")
    y = FreeWord.gen("y")
    w = x
    for k in range(1, n):
        w = commutator(w, (y**k) * x * (y**-k))
    return w


# -- evaluation ----------------------------------------------------------------


class Carrier(Protocol[T]):
    """Minimal multiplicative structure needed to evaluate words."""

    def one(self) -> T: ...

    def mul(self, a: T, b: T) -> T: ...

    def inv(self, a: T) -> T: ...

    def is_one(self, a: T) -> bool: ...


def carrier_power(carrier: Carrier[T], a: T, e: int) -> T:
    if e < 0:
        a, e = carrier.inv(a), -e
    out = carrier.one()
    for _ in range(e):
        out = carrier.mul(out, a)
    return out


def substitute(word: FreeWord, assignment: Mapping[str, T], carrier: Carrier[T]) -> T:
    """Homomorphic evaluation of a word under generator -> element."""
    missing = word.generators() - set(assignment)
    if missing:
        raise KeyError(f"assignment missing generators: {sorted(missing)}")
    out = carrier.one()
    for g, e in word.syllables:
        out = carrier.mul(out, carrier_power(carrier, assignment[g], e))
    return out


@dataclass(frozen=True)
class WordCarrier:
    """Free-group elements themselves."""

    def one(self) -> FreeWord:
        return FreeWord.identity()

    def mul(self, a: FreeWord, b: FreeWord) -> FreeWord:
        return a * b

    def inv(self, a: FreeWord) -> FreeWord:
        return a.inverse()

    def is_one(self, a: FreeWord) -> bool:
        return a.is_identity()


@dataclass(frozen=True)
class GroupCarrier:
    """Elements of a FiniteGroup, referenced by index."""

    group: FiniteGroup

    def one(self) -> int:
        return self.group.identity

    def mul(self, a: int, b: int) -> int:
        return self.group.mul(a, b)

    def inv(self, a: int) -> int:
        return self.group.inv(a)

    def is_one(self, a: int) -> bool:
        return a == self.group.identity


@dataclass(frozen=True)
class UnitaryCarrier:
    """Unitary matrices; inverses are taken as adjoints."""

    dim: int
    tol: float = 1e-9

    def one(self) -> np.ndarray:
        return np.eye(self.dim, dtype=complex)

    def mul(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        return a @ b

    def inv(self, a: np.ndarray) -> np.ndarray:
        return a.conj().T

    def is_one(self, a: np.ndarray) -> bool:
        return bool(np.linalg.norm(a - np.eye(self.dim)) <= self.tol)
