"""Finite groups presented by multiplication tables over indices 0..n-1.

The table presentation is deliberately dumb: everything downstream (mixed
words, free products, representation checks) only needs ``mul``, ``inv``,
an identity index and printable labels, and a table makes all of those
exact and serializable.
"""

from __future__ import annotations

import itertools
import json
import math
import random
from pathlib import Path
from typing import Iterable, Sequence

# Associativity is verified exhaustively up to this order and by seeded
# sampling (10 * n**2 triples) above it.
EXHAUSTIVE_ASSOC_ORDER = 64
_ASSOC_SAMPLE_FACTOR = 10


class FiniteGroup:
    """A finite group given by an ``n x n`` multiplication table of indices."""

    def __init__(
        self,
        table: Sequence[Sequence[int]],
        labels: Sequence[str] | None = None,
        name: str = "group",
    ):
        rows = tuple(tuple(int(x) for x in row) for row in table)
        n = len(rows)
        if n == 0:
            raise ValueError("group must have at least one element")
        for i, row in enumerate(rows):
            if len(row) != n:
                raise ValueError(f"table row {i} has length {len(row)}, expected {n}")
            if sorted(row) != list(range(n)):
                raise ValueError(f"table row {i} is not a permutation of 0..{n - 1}")
        for j in range(n):
            col = sorted(rows[i][j] for i in range(n))
            if col != list(range(n)):
                raise ValueError(f"table column {j} is not a permutation of 0..{n - 1}")

        self.order = n
        self.table = rows
        self.name = str(name)
        if labels is None:
            labels = tuple(f"g{i}" for i in range(n))
        labels = tuple(str(x) for x in labels)
        if len(labels) != n:
            raise ValueError("labels length does not match group order")
        if len(set(labels)) != n:
            raise ValueError("labels must be distinct")
        self.labels = labels

        self.identity = self._find_identity()
        self.inverse = self._build_inverses()
        self._check_associativity()

    # -- construction checks -------------------------------------------------

    def _find_identity(self) -> int:
        for e in range(self.order):
            if all(self.table[e][j] == j and self.table[j][e] == j for j in range(self.order)):
                return e
        raise ValueError("table has no two-sided identity")

    def _build_inverses(self) -> tuple[int, ...]:
        inv = [-1] * self.order
        e = self.identity
        for a in range(self.order):
            for b in range(self.order):
                if self.table[a][b] == e and self.table[b][a] == e:
                    inv[a] = b
                    break
            if inv[a] < 0:
                raise ValueError(f"element {a} has no two-sided inverse")
        return tuple(inv)

    def _check_associativity(self) -> None:
        n = self.order
        if n <= EXHAUSTIVE_ASSOC_ORDER:
            triples: Iterable[tuple[int, int, int]] = itertools.product(range(n), repeat=3)
        else:
            rng = random.Random(10_000_019 + n)
            triples = (
                (rng.randrange(n), rng.randrange(n), rng.randrange(n))
                for _ in range(_ASSOC_SAMPLE_FACTOR * n * n)
            )
        t = self.table
        for a, b, c in triples:
            if t[t[a][b]][c] != t[a][t[b][c]]:
                raise ValueError(f"table is not associative at ({a}, {b}, {c})")

    # -- group arithmetic -----------------------------------------------------

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        return self.inverse[a]

    def power(self, a: int, e: int) -> int:
        if e < 0:
            a, e = self.inverse[a], -e
        out = self.identity
        for _ in range(e):
            out = self.table[out][a]
        return out

    def conjugate(self, a: int, by: int) -> int:
        return self.table[self.table[by][a]][self.inverse[by]]

    def elements(self) -> range:
        return range(self.order)

    def element_order(self, a: int) -> int:
        k, x = 1, a
        while x != self.identity:
            x = self.table[x][a]
            k += 1
        return k

    def exponent(self) -> int:
        out = 1
        for a in range(self.order):
            out = math.lcm(out, self.element_order(a))
        return out

    def is_abelian(self) -> bool:
        t = self.table
        return all(t[a][b] == t[b][a] for a in range(self.order) for b in range(a))

    def label(self, a: int) -> str:
        return self.labels[a]

    def index_of(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise KeyError(f"no element labelled {label!r} in {self.name}") from None

    def __repr__(self) -> str:
        return f"FiniteGroup({self.name}, order={self.order})"

    # -- serialization --------------------------------------------------------

    def to_json_dict(self) -> dict:
        """Text format: order, labels, flattened row-major multiplication table."""
        return {
            "name": self.name,
            "order": self.order,
            "labels": list(self.labels),
            "table": [x for row in self.table for x in row],
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "FiniteGroup":
        n = int(data["order"])
        flat = [int(x) for x in data["table"]]
        if len(flat) != n * n:
            raise ValueError(f"flattened table has {len(flat)} entries, expected {n * n}")
        table = [flat[i * n : (i + 1) * n] for i in range(n)]
        return cls(table, labels=data.get("labels"), name=data.get("name", "group"))

    def save(self, path: str | Path) -> None:
        Path(path).write_text(json.dumps(self.to_json_dict(), indent=2, sort_keys=True))


def load_finite_group(path: str | Path) -> FiniteGroup:
    return FiniteGroup.from_json_dict(json.loads(Path(path).read_text()))


# -- stock constructions ------------------------------------------------------


def cyclic_group(n: int) -> FiniteGroup:
    if n < 1:
        raise ValueError("cyclic group order must be positive")
    table = [[(a + b) % n for b in range(n)] for a in range(n)]
    labels = ["e"] + [f"g{k}" if k > 1 else "g" for k in range(1, n)]
    return FiniteGroup(table, labels=labels, name=f"C{n}")


def direct_product(g: FiniteGroup, h: FiniteGroup, name: str | None = None) -> FiniteGroup:
    def enc(a: int, b: int) -> int:
        return a * h.order + b

    n = g.order * h.order
    table = [[0] * n for _ in range(n)]
    for a1 in range(g.order):
        for b1 in range(h.order):
            for a2 in range(g.order):
                for b2 in range(h.order):
                    table[enc(a1, b1)][enc(a2, b2)] = enc(g.mul(a1, a2), h.mul(b1, b2))
    labels = [f"{g.labels[a]}|{h.labels[b]}" for a in range(g.order) for b in range(h.order)]
    return FiniteGroup(table, labels=labels, name=name or f"{g.name}x{h.name}")


def _cycle_notation(perm: tuple[int, ...]) -> str:
    seen = [False] * len(perm)
    parts = []
    for start in range(len(perm)):
        if seen[start] or perm[start] == start:
            seen[start] = True
            continue
        cyc = [start]
        seen[start] = True
        nxt = perm[start]
        while nxt != start:
            cyc.append(nxt)
            seen[nxt] = True
            nxt = perm[nxt]
        parts.append("(" + "".join(str(i + 1) for i in cyc) + ")")
    return "".join(parts) if parts else "e"


def symmetric_group(n: int) -> FiniteGroup:
    """Sym(n) on 0..n-1; elements listed identity first, then by increasing
    support in cycle-notation order, so witness scans are reproducible."""
    if n < 1:
        raise ValueError("n must be positive")
    perms = list(itertools.permutations(range(n)))

    def sort_key(p: tuple[int, ...]):
        moved = sum(1 for i in range(n) if p[i] != i)
        return (moved, _cycle_notation(p))

    perms.sort(key=sort_key)
    index = {p: i for i, p in enumerate(perms)}
    # composition: (p * q)(x) = p(q(x))
    table = [
        [index[tuple(p[q[x]] for x in range(n))] for q in perms]
        for p in perms
    ]
    labels = [_cycle_notation(p) for p in perms]
    return FiniteGroup(table, labels=labels, name=f"Sym{n}")


def quaternion_group() -> FiniteGroup:
    """Q8 = {1, -1, i, -i, j, -j, k, -k}."""
    names = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]

    def unit_mul(a: str, b: str) -> str:
        sign = 1
        if a.startswith("-"):
            sign, a = -sign, a[1:]
        if b.startswith("-"):
            sign, b = -sign, b[1:]
        rules = {
            ("1", "1"): (1, "1"),
            ("1", "i"): (1, "i"), ("i", "1"): (1, "i"),
            ("1", "j"): (1, "j"), ("j", "1"): (1, "j"),
            ("1", "k"): (1, "k"), ("k", "1"): (1, "k"),
            ("i", "i"): (-1, "1"), ("j", "j"): (-1, "1"), ("k", "k"): (-1, "1"),
            ("i", "j"): (1, "k"), ("j", "i"): (-1, "k"),
            ("j", "k"): (1, "i"), ("k", "j"): (-1, "i"),
            ("k", "i"): (1, "j"), ("i", "k"): (-1, "j"),
        }
        s, unit = rules[(a, b)]
        sign *= s
        return unit if sign > 0 else "-" + unit

    table = [[names.index(unit_mul(a, b)) for b in names] for a in names]
    return FiniteGroup(table, labels=names, name="Q8")


def klein_group() -> FiniteGroup:
    return direct_product(cyclic_group(2), cyclic_group(2), name="Klein4")
