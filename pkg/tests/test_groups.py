import json

import pytest

from freecomm.groups import (
    FiniteGroup,
    cyclic_group,
    direct_product,
    klein_group,
    load_finite_group,
    quaternion_group,
    symmetric_group,
)


def test_cyclic_basics():
    g = cyclic_group(6)
    assert g.order == 6
    assert g.identity == 0
    assert g.mul(2, 5) == 1
    assert g.inv(2) == 4
    assert g.power(1, -2) == 4
    assert g.exponent() == 6
    assert g.is_abelian()


def test_bad_row_rejected():
    with pytest.raises(ValueError):
        FiniteGroup([[0, 0], [1, 1]])


def test_no_identity_rejected():
    # a * b = b - a mod 3: a left identity but no two-sided one
    with pytest.raises(ValueError):
        FiniteGroup([[0, 1, 2], [2, 0, 1], [1, 2, 0]])


def test_nonassociative_loop_rejected():
    # order-5 loop: Latin square with identity and inverses, not a group
    table = [
        [0, 1, 2, 3, 4],
        [1, 0, 3, 4, 2],
        [2, 4, 0, 1, 3],
        [3, 2, 4, 0, 1],
        [4, 3, 1, 2, 0],
    ]
    with pytest.raises(ValueError, match="associative"):
        FiniteGroup(table)


def test_symmetric3_element_order_is_frozen():
    s3 = symmetric_group(3)
    assert s3.labels == ("e", "(12)", "(13)", "(23)", "(123)", "(132)")
    assert s3.identity == 0
    assert s3.exponent() == 6
    assert not s3.is_abelian()
    # (12)(13) applied right-to-left sends 1 -> 3 -> 3? no: check the table is a group
    assert s3.mul(s3.index_of("(12)"), s3.index_of("(12)")) == 0


def test_symmetric4():
    s4 = symmetric_group(4)
    assert s4.order == 24
    assert s4.exponent() == 12


def test_quaternion_structure():
    q = quaternion_group()
    i, j, k = q.index_of("i"), q.index_of("j"), q.index_of("k")
    minus_one = q.index_of("-1")
    assert q.mul(i, j) == k
    assert q.mul(j, i) == q.index_of("-k")
    assert q.mul(i, i) == minus_one
    assert q.element_order(i) == 4
    assert q.exponent() == 4


def test_klein_group():
    v = klein_group()
    assert v.order == 4
    assert v.exponent() == 2
    assert v.is_abelian()


def test_direct_product_orders():
    g = direct_product(cyclic_group(2), cyclic_group(3))
    assert g.order == 6
    assert g.exponent() == 6


def test_json_roundtrip(tmp_path):
    g = symmetric_group(3)
    path = tmp_path / "sym3.json"
    g.save(path)
    doc = json.loads(path.read_text())
    assert doc["order"] == 6
    assert len(doc["table"]) == 36
    g2 = load_finite_group(path)
    assert g2.table == g.table
    assert g2.labels == g.labels
    assert g2.identity == g.identity


def test_conjugate():
    s3 = symmetric_group(3)
    a = s3.index_of("(12)")
    g = s3.index_of("(13)")
    assert s3.label(s3.conjugate(g, a)) == "(23)"


def test_corrupted_table_fails_column_check():
    g = cyclic_group(100)
    assert g.order == 100  # valid large table passes the sampled check
    bad = [list(row) for row in g.table]
    bad[3][4], bad[3][5] = bad[3][5], bad[3][4]
    with pytest.raises(ValueError):
        FiniteGroup(bad)


def test_sampled_associativity_catches_large_loop():
    # order-5 loop (Latin, identity, inverses, non-associative) crossed
    # with C13 gives an order-65 table, above the exhaustive bound
    loop = [
        [0, 1, 2, 3, 4],
        [1, 0, 3, 4, 2],
        [2, 4, 0, 1, 3],
        [3, 2, 4, 0, 1],
        [4, 3, 1, 2, 0],
    ]
    n = 65
    table = [[0] * n for _ in range(n)]
    for a1 in range(5):
        for b1 in range(13):
            for a2 in range(5):
                for b2 in range(13):
                    table[a1 * 13 + b1][a2 * 13 + b2] = loop[a1][a2] * 13 + (b1 + b2) % 13
    with pytest.raises(ValueError, match="associative"):
        FiniteGroup(table)
