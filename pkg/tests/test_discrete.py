import math

import numpy as np
import pytest

from freecomm.catalog import (
    binary_tetrahedral_generators,
    pauli_generators,
    quaternion_generators,
    unitary_group_catalog,
)
from freecomm.discrete import (
    MatrixGroup,
    NonClosure,
    commutator_ineq_check,
    ell_op,
    gamma_filter,
    group_closure,
    heisenberg_irrep,
)
from freecomm.matrices import sample_haar, subseed

from oracles import naive_closure


def test_ell_op_examples():
    assert ell_op(np.eye(3)) <= 1e-12
    assert abs(ell_op(-np.eye(3)) - 2.0) <= 1e-12
    u = np.diag([1.0, np.exp(2j * np.pi / 3)])
    assert abs(ell_op(u) - math.sqrt(3)) <= 1e-12


def test_ell_op_rejects_non_unitary():
    with pytest.raises(ValueError):
        ell_op(2 * np.eye(2))


def test_commutator_inequality_examples():
    u = np.diag([1.0, -1.0]).astype(complex)
    v = np.diag([np.exp(1j), np.exp(-1j)])
    chk = commutator_ineq_check(u, v)
    assert chk.lhs <= 1e-12  # commuting pair

    x, z = pauli_generators()
    chk = commutator_ineq_check(x, z)
    assert abs(chk.lhs - 2.0) <= 1e-12  # [X, Z] = -1
    assert abs(chk.rhs - 8.0) <= 1e-12


def test_commutator_inequality_seeded_haar():
    for k in range(100):
        u = sample_haar(4, subseed(31, k, 0)).array
        v = sample_haar(4, subseed(31, k, 1)).array
        assert commutator_ineq_check(u, v).margin >= -1e-9


def test_pauli_closure_matches_naive_oracle():
    x, z = pauli_generators()
    mg = group_closure([x, z])
    assert isinstance(mg, MatrixGroup)
    assert mg.order == 8
    oracle = naive_closure([x, z])
    assert len(oracle) == 8
    # same elements up to tolerance
    for e in oracle:
        assert any(np.linalg.norm(e - m) <= 1e-8 for m in mg.elements)


def test_trivial_closure():
    mg = group_closure([np.eye(2)])
    assert isinstance(mg, MatrixGroup)
    assert mg.order == 1


def test_closure_cayley_table_consistent():
    mg = group_closure(list(quaternion_generators()))
    assert mg.order == 8
    for i in range(mg.order):
        for j in range(mg.order):
            prod = mg.elements[i] @ mg.elements[j]
            assert np.linalg.norm(prod - mg.elements[mg.mul(i, j)]) <= 1e-8
    for i in range(mg.order):
        assert mg.mul(i, mg.inv(i)) == mg.identity_index


def test_irrational_rotation_is_non_discrete():
    rot = np.array([[np.exp(1j)]])
    out = group_closure([rot], cap=10_000)
    assert isinstance(out, NonClosure)
    assert out.reason == "near_identity"
    assert 1e-8 <= out.ell <= 0.01
    # the witness really is that close to the identity
    assert abs(abs(out.element[0, 0]) - 1.0) <= 1e-12
    assert abs(out.element[0, 0] - 1.0) == pytest.approx(out.ell, abs=1e-12)


def test_cap_exceeded_witness():
    rot = np.array([[np.exp(1j)]])
    out = group_closure([rot], cap=50)
    assert isinstance(out, NonClosure)
    assert out.reason == "cap_exceeded"
    assert out.elements_found == 50


def test_closure_validation():
    with pytest.raises(ValueError):
        group_closure([])
    with pytest.raises(ValueError):
        group_closure([np.eye(2), np.eye(3)])
    with pytest.raises(ValueError):
        group_closure([2 * np.eye(2)])
    with pytest.raises(ValueError):
        group_closure([np.eye(2)], cap=0)


def test_closure_determinism():
    gens = list(binary_tetrahedral_generators())
    a = group_closure(gens)
    b = group_closure(gens)
    assert a.order == b.order == 24
    assert a.table == b.table
    for x, y in zip(a.elements, b.elements):
        assert np.array_equal(x, y)


def test_quaternion_filter_is_trivial():
    mg = group_closure(list(quaternion_generators()))
    ells = mg.element_ells()
    assert min(l for l in ells if l > 1e-9) >= math.sqrt(2) - 1e-9
    rep = gamma_filter(mg, 0.5)
    assert rep.subgroup_indices == (mg.identity_index,)
    assert rep.is_abelian and rep.is_normal


def test_cyclic13_filter_is_whole_group():
    mg = group_closure([np.array([[np.exp(2j * np.pi / 13)]])])
    assert mg.order == 13
    rep = gamma_filter(mg, 0.5)
    short = [l for l in rep.element_ells if 1e-9 < l < 0.5]
    assert len(short) == 2  # the generator and its inverse
    assert abs(min(short) - 2 * math.sin(math.pi / 13)) <= 1e-9
    assert len(rep.subgroup_indices) == 13
    assert rep.is_abelian and rep.is_normal


def test_filter_threshold_zero():
    mg = group_closure(list(pauli_generators()))
    rep = gamma_filter(mg, 0.0)
    assert rep.subgroup_indices == (mg.identity_index,)


def test_filter_monotone_in_threshold():
    mg = group_closure(list(binary_tetrahedral_generators()))
    prev: set[int] = set()
    for t in (0.0, 0.3, 0.5, 1.01, 2.1):
        sub = set(gamma_filter(mg, t).subgroup_indices)
        assert prev <= sub
        prev = sub
    assert len(prev) == 24  # threshold beyond 2 captures everything


def test_heisenberg_examples():
    h3 = heisenberg_irrep(3)
    assert abs(ell_op(h3.clock) - math.sqrt(3)) <= 1e-12
    h2 = heisenberg_irrep(2)
    assert abs(ell_op(h2.shift) - 2.0) <= 1e-12
    h7 = heisenberg_irrep(7)
    assert h7.min_ell >= math.sqrt(3) - 1e-9
    assert abs(h7.commutator_scalar - np.exp(2j * np.pi / 7)) <= 1e-10


def test_heisenberg_range_and_validation():
    for n in range(2, 13):
        h = heisenberg_irrep(n)
        assert h.min_ell >= math.sqrt(3) - 1e-9
        assert abs(h.commutator_scalar - 1.0) > 0.1
    with pytest.raises(ValueError):
        heisenberg_irrep(1)


def test_catalog_filters_all_abelian_normal():
    for name, gens in unitary_group_catalog().items():
        mg = group_closure(list(gens))
        assert isinstance(mg, MatrixGroup), name
        rep = gamma_filter(mg, 0.5)
        assert rep.is_abelian and rep.is_normal, name
