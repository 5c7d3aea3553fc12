"""Operator-norm contraction and discreteness filtrations for matrix groups.

The commutator of two unitaries contracts in operator norm,
ell([U, V]) <= 2 ell(U) ell(V) with ell(g) = ||1 - g||, and for a group
that closes up at desk scale the subgroup generated by elements with
ell < 1/2 can be checked to be abelian and normal directly on the Cayley
table.  Failure to close (an element creeping arbitrarily close to the
identity) is reported as an explicit non-discreteness witness.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .groups import FiniteGroup
from .matrices import as_array, op_norm, unitarity_defect, UNITARY_OP_TOL

#: two elements within this op-norm distance are identified
DEFAULT_MERGE_EPS = 1e-8

#: an element this close to the identity (but not merged with it) is a
#: discreteness obstruction
NEAR_IDENTITY_BAND = 0.01


def ell_op(u, check: bool = True) -> float:
    """Operator-norm length ||1 - U||; for unitary U this is
    max over eigenvalues of |1 - lambda|."""
    a = as_array(u)
    if check and unitarity_defect(a) > 1e-8:
        raise ValueError("ell_op expects a unitary matrix")
    return op_norm(np.eye(a.shape[0]) - a)


@dataclass(frozen=True)
class CommutatorBound:
    lhs: float
    rhs: float
    margin: float

    def to_json_dict(self) -> dict:
        return {"lhs": self.lhs, "rhs": self.rhs, "margin": self.margin}


def commutator_ineq_check(u, v) -> CommutatorBound:
    """ell([U,V]) against 2 ell(U) ell(V); the margin is rhs - lhs."""
    a, b = as_array(u), as_array(v)
    if a.shape != b.shape:
        raise ValueError("dimension mismatch")
    comm = a @ b @ a.conj().T @ b.conj().T
    lhs = ell_op(comm, check=False)
    rhs = 2.0 * ell_op(a, check=False) * ell_op(b, check=False)
    return CommutatorBound(lhs=lhs, rhs=rhs, margin=rhs - lhs)


@dataclass(frozen=True)
class NonClosure:
    """Witness that a generated set fails to close discretely."""

    reason: str  # "near_identity" or "cap_exceeded"
    element: np.ndarray
    ell: float
    elements_found: int


@dataclass
class MatrixGroup:
    """Finite unitary matrix group with a precomputed Cayley table.

    Subgroup generation and verdict checks run on the index table, so long
    products never accumulate floating-point drift.
    """

    elements: tuple[np.ndarray, ...]
    table: tuple[tuple[int, ...], ...]
    inverse: tuple[int, ...]
    generator_indices: tuple[int, ...]
    merge_eps: float
    identity_index: int = 0

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def dim(self) -> int:
        return self.elements[0].shape[0]

    def mul(self, i: int, j: int) -> int:
        return self.table[i][j]

    def inv(self, i: int) -> int:
        return self.inverse[i]

    def element_ells(self) -> list[float]:
        eye = np.eye(self.dim)
        return [op_norm(eye - g) for g in self.elements]

    def to_finite_group(self, name: str = "matrix-group") -> FiniteGroup:
        return FiniteGroup(self.table, name=name)


class _ElementIndex:
    """Nearest-element lookup with a cheap Frobenius sandwich before the
    exact op-norm comparison (op <= fro <= sqrt(N) * op)."""

    def __init__(self, dim: int, merge_eps: float):
        self.dim = dim
        self.merge_eps = merge_eps
        self._flat: list[np.ndarray] = []
        self._stack: np.ndarray | None = None
        self.matrices: list[np.ndarray] = []

    def __len__(self) -> int:
        return len(self.matrices)

    def find(self, m: np.ndarray) -> int | None:
        if not self.matrices:
            return None
        if self._stack is None:
            self._stack = np.stack(self._flat)
        fro = np.linalg.norm(self._stack - m.ravel(), axis=1)
        # fro <= eps  =>  op <= eps; fro > eps*sqrt(N)  =>  op > eps
        certain = np.nonzero(fro <= self.merge_eps)[0]
        if certain.size:
            return int(certain[0])
        maybe = np.nonzero(fro <= self.merge_eps * np.sqrt(self.dim))[0]
        for idx in maybe:
            if op_norm(self.matrices[idx] - m) <= self.merge_eps:
                return int(idx)
        return None

    def add(self, m: np.ndarray) -> int:
        self.matrices.append(m)
        self._flat.append(m.ravel())
        self._stack = None
        return len(self.matrices) - 1


def group_closure(
    generators: Sequence,
    cap: int = 10_000,
    merge_eps: float = DEFAULT_MERGE_EPS,
    near_identity_band: float = NEAR_IDENTITY_BAND,
) -> MatrixGroup | NonClosure:
    """Breadth-first closure of unitary generators under products.

    Deterministic: elements are indexed in discovery order (identity
    first), and rerunning with the same input yields the same indexing.
    Returns a NonClosure witness when the element count passes ``cap`` or
    a product lands in [merge_eps, near_identity_band] of the identity.
    """
    gens = [as_array(g) for g in generators]
    if not gens:
        raise ValueError("need at least one generator")
    dim = gens[0].shape[0]
    for g in gens:
        if g.shape != (dim, dim):
            raise ValueError("generators must share a dimension")
        if unitarity_defect(g) > UNITARY_OP_TOL:
            raise ValueError("generators must be unitary")
    if cap < len(gens):
        raise ValueError("cap smaller than the generating set")

    steps = gens + [g.conj().T for g in gens]
    index = _ElementIndex(dim, merge_eps)
    index.add(np.eye(dim, dtype=complex))
    gen_indices = []
    queue = deque([0])
    while queue:
        i = queue.popleft()
        for s in steps:
            p = index.matrices[i] @ s
            found = index.find(p)
            if found is not None:
                continue
            d_id = op_norm(p - np.eye(dim))
            if d_id <= near_identity_band:
                # not merged with the identity, yet inside the band
                return NonClosure("near_identity", p, d_id, len(index))
            if len(index) >= cap:
                return NonClosure("cap_exceeded", p, d_id, len(index))
            new_idx = index.add(p)
            queue.append(new_idx)
    # record where the generators landed
    for g in gens:
        gen_indices.append(index.find(g))

    elements = tuple(index.matrices)
    n = len(elements)
    table = []
    for i in range(n):
        row = []
        for j in range(n):
            k = index.find(elements[i] @ elements[j])
            if k is None:
                raise AssertionError("closure is not closed; merge tolerance too tight")
            row.append(k)
        table.append(tuple(row))
    inverse = [-1] * n
    for i in range(n):
        for j in range(n):
            if table[i][j] == 0 and table[j][i] == 0:
                inverse[i] = j
                break
    return MatrixGroup(
        elements=elements,
        table=tuple(table),
        inverse=tuple(inverse),
        generator_indices=tuple(gen_indices),
        merge_eps=merge_eps,
    )


@dataclass
class FilterReport:
    """Subgroup generated by short elements, with abelian/normal verdicts."""

    threshold: float
    group_order: int
    element_ells: tuple[float, ...]
    generator_indices: tuple[int, ...]
    subgroup_indices: tuple[int, ...]
    is_abelian: bool
    is_normal: bool
    extras: dict = field(default_factory=dict)

    def to_json_dict(self) -> dict:
        return {
            "threshold": self.threshold,
            "group_order": self.group_order,
            "element_ells": list(self.element_ells),
            "generator_indices": list(self.generator_indices),
            "subgroup_indices": list(self.subgroup_indices),
            "subgroup_order": len(self.subgroup_indices),
            "is_abelian": self.is_abelian,
            "is_normal": self.is_normal,
            **self.extras,
        }


def gamma_filter(group: MatrixGroup, threshold: float) -> FilterReport:
    """Subgroup generated by {g : ||1 - g|| < threshold}, generated and
    verified entirely inside the Cayley table."""
    if threshold < 0:
        raise ValueError("threshold must be nonnegative")
    ells = group.element_ells()
    gens = [i for i, l in enumerate(ells) if l < threshold]

    members = {group.identity_index}
    queue = deque([group.identity_index])
    gen_steps = sorted(set(gens) | {group.inv(i) for i in gens})
    while queue:
        i = queue.popleft()
        for j in gen_steps:
            k = group.mul(i, j)
            if k not in members:
                members.add(k)
                queue.append(k)
    sub = tuple(sorted(members))

    abelian = all(
        group.mul(i, j) == group.mul(j, i) for i in sub for j in sub if j < i
    )
    member_set = set(sub)
    normal = all(
        group.mul(group.mul(g, h), group.inv(g)) in member_set
        for g in range(group.order)
        for h in sub
    )
    return FilterReport(
        threshold=threshold,
        group_order=group.order,
        element_ells=tuple(ells),
        generator_indices=tuple(gens),
        subgroup_indices=sub,
        is_abelian=abelian,
        is_normal=normal,
    )


@dataclass(frozen=True)
class HeisenbergPair:
    clock: np.ndarray
    shift: np.ndarray
    commutator_scalar: complex
    min_ell: float


def heisenberg_irrep(n: int) -> HeisenbergPair:
    """Clock and shift matrices: the commutator is the scalar e^{2 pi i/n},
    and both generators sit at operator-norm distance >= sqrt(3) from 1."""
    if n < 2:
        raise ValueError("need n >= 2")
    omega = np.exp(2j * np.pi / n)
    clock = np.diag(omega ** np.arange(n))
    shift = np.zeros((n, n), dtype=complex)
    for j in range(n):
        shift[(j + 1) % n, j] = 1.0
    comm = clock @ shift @ clock.conj().T @ shift.conj().T
    scalar = complex(comm[0, 0])
    if np.linalg.norm(comm - scalar * np.eye(n)) > 1e-10:
        raise AssertionError("clock/shift commutator is not scalar")
    min_ell = min(ell_op(clock), ell_op(shift))
    return HeisenbergPair(clock=clock, shift=shift, commutator_scalar=scalar, min_ell=min_ell)
