"""One-variable words with constants in a finite group (elements of Z * G).

A word alternates group constants and powers of the variable t,

    g0 t^e1 g1 t^e2 ... t^ek gk,

and is kept in free-product normal form: every exponent is nonzero and
every interior constant differs from the identity (leading and trailing
constants may be trivial).  Substituting a group element for t turns the
word into an element of G; a word whose every substitution is trivial is a
mixed identity for G.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .groups import FiniteGroup

# token kinds used during normalization
_G = "g"
_T = "t"


def _normalize(group: FiniteGroup, tokens: Iterable[tuple[str, int]]):
    """Stack reduction of an alternating token stream into normal form."""
    out: list[tuple[str, int]] = []
    for kind, val in tokens:
        if kind == _G and val == group.identity:
            continue
        if kind == _T and val == 0:
            continue
        if out and out[-1][0] == kind:
            prev = out.pop()[1]
            merged = group.mul(prev, val) if kind == _G else prev + val
            if kind == _G and merged == group.identity:
                continue
            if kind == _T and merged == 0:
                continue
            out.append((kind, merged))
        else:
            out.append((kind, val))
        # a merge may have re-exposed equal kinds deeper in the stack
        while len(out) >= 2 and out[-1][0] == out[-2][0]:
            kind2, val2 = out.pop()
            prev = out.pop()[1]
            merged = group.mul(prev, val2) if kind2 == _G else prev + val2
            if not (
                (kind2 == _G and merged == group.identity)
                or (kind2 == _T and merged == 0)
            ):
                out.append((kind2, merged))

    coeffs = [group.identity]
    exps: list[int] = []
    for kind, val in out:
        if kind == _G:
            coeffs[-1] = group.mul(coeffs[-1], val)
        else:
            exps.append(val)
            coeffs.append(group.identity)
    return tuple(coeffs), tuple(exps)


@dataclass(frozen=True)
class MixedWord:
    group: FiniteGroup
    coeffs: tuple[int, ...]
    exps: tuple[int, ...]

    def __post_init__(self):
        if len(self.coeffs) != len(self.exps) + 1:
            raise ValueError("coefficient/exponent lengths are inconsistent")
        if any(e == 0 for e in self.exps):
            raise ValueError("exponents must be nonzero")
        for g in self.coeffs[1:-1]:
            if g == self.group.identity:
                raise ValueError("interior coefficients must be nontrivial")

    @classmethod
    def from_tokens(cls, group: FiniteGroup, tokens: Iterable[tuple[str, int]]) -> "MixedWord":
        coeffs, exps = _normalize(group, tokens)
        return cls(group, coeffs, exps)

    @classmethod
    def identity(cls, group: FiniteGroup) -> "MixedWord":
        return cls(group, (group.identity,), ())

    @classmethod
    def t_power(cls, group: FiniteGroup, e: int) -> "MixedWord":
        return cls.from_tokens(group, [(_T, e)])

    @classmethod
    def constant(cls, group: FiniteGroup, g: int) -> "MixedWord":
        return cls.from_tokens(group, [(_G, g)])

    def tokens(self) -> list[tuple[str, int]]:
        toks: list[tuple[str, int]] = [(_G, self.coeffs[0])]
        for e, g in zip(self.exps, self.coeffs[1:]):
            toks.append((_T, e))
            toks.append((_G, g))
        return toks

    def is_trivial(self) -> bool:
        return not self.exps and self.coeffs[0] == self.group.identity

    def __mul__(self, other: "MixedWord") -> "MixedWord":
        if self.group is not other.group:
            raise ValueError("words over different coefficient groups")
        return MixedWord.from_tokens(self.group, self.tokens() + other.tokens())

    def inverse(self) -> "MixedWord":
        inv_tokens = []
        for kind, val in reversed(self.tokens()):
            inv_tokens.append((kind, self.group.inv(val) if kind == _G else -val))
        return MixedWord.from_tokens(self.group, inv_tokens)

    def conjugate_variable(self, by: int) -> "MixedWord":
        """The word with t replaced by (by) t (by)^-1."""
        toks: list[tuple[str, int]] = [(_G, self.coeffs[0])]
        inv = self.group.inv(by)
        for e, g in zip(self.exps, self.coeffs[1:]):
            toks.extend([(_G, by), (_T, e), (_G, inv), (_G, g)])
        return MixedWord.from_tokens(self.group, toks)

    def evaluate(self, g: int) -> int:
        """Substitute the group element g for the variable t."""
        out = self.coeffs[0]
        grp = self.group
        for e, c in zip(self.exps, self.coeffs[1:]):
            out = grp.mul(grp.mul(out, grp.power(g, e)), c)
        return out

    def __str__(self) -> str:
        parts = [self.group.label(self.coeffs[0])]
        for e, g in zip(self.exps, self.coeffs[1:]):
            parts.append(f"t^{e}")
            parts.append(self.group.label(g))
        return " . ".join(parts)


def parse_mixed_word(group: FiniteGroup, literal: str) -> MixedWord:
    """Parse the ``g0 . t^e1 . g1 . ...`` literal syntax using group labels."""
    segments = [s.strip() for s in literal.split(".")]
    if not segments or any(not s for s in segments):
        raise ValueError(f"malformed mixed-word literal: {literal!r}")
    tokens: list[tuple[str, int]] = []
    for pos, seg in enumerate(segments):
        if pos % 2 == 1:
            if not seg.startswith("t^"):
                raise ValueError(f"expected t^e at segment {pos}: {seg!r}")
            tokens.append((_T, int(seg[2:])))
        else:
            tokens.append((_G, group.index_of(seg)))
    if len(segments) % 2 == 0:
        raise ValueError("literal must start and end with a coefficient label")
    return MixedWord.from_tokens(group, tokens)


def mixed_commutator(a: MixedWord, b: MixedWord) -> MixedWord:
    return a * b * a.inverse() * b.inverse()


def iterated_commutator(ws: Sequence[MixedWord]) -> MixedWord:
    """Right-nested commutator [w1, [w2, ... [w_{l-1}, w_l]]]."""
    if not ws:
        raise ValueError("need at least one word")
    group = ws[0].group
    for w in ws:
        if w.group is not group:
            raise ValueError("all words must share a coefficient group")
    out = ws[-1]
    for w in reversed(ws[:-1]):
        out = mixed_commutator(w, out)
    return out


@dataclass(frozen=True)
class MixedIdentityVerdict:
    is_identity: bool
    witness: int | None = None
    value: int | None = None

    def __bool__(self) -> bool:
        return self.is_identity


def is_mixed_identity(word: MixedWord, group: FiniteGroup | None = None) -> MixedIdentityVerdict:
    """Check whether every substitution for t gives the identity.

    Witness search is an ascending scan over element indices, so reports
    are reproducible.
    """
    grp = word.group if group is None else group
    if group is not None and group is not word.group:
        raise ValueError("word coefficients do not live in the given group")
    for g in grp.elements():
        val = word.evaluate(g)
        if val != grp.identity:
            return MixedIdentityVerdict(False, witness=g, value=val)
    return MixedIdentityVerdict(True)


@dataclass(frozen=True)
class FreenessWitness:
    index: int
    candidate: object
    product: object


def asymptotic_freeness_witness(constraints, candidates, carrier) -> FreenessWitness | None:
    """First candidate g making s_1 g^e1 s_2 g^e2 ... g^ek nontrivial.

    ``constraints`` is a list of (s_i, e_i) with e_i nonzero; the carrier
    must support exact identity testing (finite groups, free words).
    Returns None when every candidate satisfies the relation.
    """
    constraints = list(constraints)
    if not constraints:
        raise ValueError("constraint list must be nonempty")
    for _, e in constraints:
        if int(e) == 0:
            raise ValueError("exponents must be nonzero")
    from .words import carrier_power  # local import to avoid cycle at module load

    for idx, g in enumerate(candidates):
        prod = carrier.one()
        for s, e in constraints:
            prod = carrier.mul(prod, carrier.mul(s, carrier_power(carrier, g, e)))
        if not carrier.is_one(prod):
            return FreenessWitness(index=idx, candidate=g, product=prod)
    return None


def enumerate_mixed_words(
    group: FiniteGroup, max_syllables: int, exp_bound: int
) -> Iterator[MixedWord]:
    """All normal-form words with at most ``max_syllables`` t-powers and
    exponents bounded by ``exp_bound``, in a fixed deterministic order."""
    if max_syllables < 1:
        raise ValueError("depth must be >= 1")
    if exp_bound < 1:
        raise ValueError("exponent bound must be >= 1")
    exp_values: list[int] = []
    for m in range(1, exp_bound + 1):
        exp_values.extend([m, -m])
    nontrivial = [g for g in group.elements() if g != group.identity]
    for k in range(1, max_syllables + 1):
        for exps in itertools.product(exp_values, repeat=k):
            interior_choices = [nontrivial] * (k - 1)
            outer = list(group.elements())
            for g0 in outer:
                for interior in itertools.product(*interior_choices):
                    for gk in outer:
                        coeffs = (g0, *interior, gk)
                        yield MixedWord(group, coeffs, exps)


def mixed_identity_scan(
    group: FiniteGroup, max_syllables: int, exp_bound: int
) -> dict:
    """Enumerate candidate words and report every identity found.

    Never concludes that a group has no mixed identities; the result only
    says none was found within the enumerated window.
    """
    identities: list[str] = []
    checked = 0
    for word in enumerate_mixed_words(group, max_syllables, exp_bound):
        checked += 1
        if is_mixed_identity(word):
            identities.append(str(word))
    return {
        "group": group.name,
        "order": group.order,
        "max_syllables": max_syllables,
        "exp_bound": exp_bound,
        "checked": checked,
        "identities": identities,
        "identity_found": bool(identities),
    }
