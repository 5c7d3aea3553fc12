import math
import random

import pytest

from freecomm.algebra import (
    AlgebraCarrier,
    AlgebraElement,
    FreeProductGroup,
    SupportCapExceeded,
    Z,
    approx_equal,
    element_from_records,
    element_to_records,
    ell,
    ell_bar,
    haar_generator,
    involution_haar_ambient,
    is_unitary,
    multiply,
    norm2,
    order_two_unitary,
    star,
    trace,
    two_involution_ambient,
    verify_free_commutator_identity,
)
from freecomm.groups import cyclic_group
from freecomm.words import substitute, w_sequence

GRID = (0.0, 0.25, -0.25, 0.5, -0.5, 0.75, -0.75, 0.9)


def _random_element(ambient, rng, n_words=5, max_syllables=4):
    coeffs = {}
    for _ in range(n_words):
        syllables = []
        prev = -1
        for _ in range(rng.randint(0, max_syllables)):
            f = rng.choice([i for i in range(len(ambient.factors)) if i != prev])
            fac = ambient.factors[f]
            if fac is Z:
                v = rng.choice([-2, -1, 1, 2])
            else:
                v = rng.randrange(1, fac.order)
            syllables.append((f, v))
            prev = f
        w = ambient.word(syllables)
        coeffs[w] = complex(rng.uniform(-1, 1), rng.uniform(-1, 1))
    return AlgebraElement(ambient, coeffs)


def test_multiply_identity_and_inverse_word():
    amb = two_involution_ambient()
    one = AlgebraElement.one(amb)
    b = order_two_unitary(amb, 0.3, 0)
    assert approx_equal(multiply(one, b), b)
    g = AlgebraElement.from_word(amb, amb.word([(0, 1)]))
    assert multiply(g, g).coefficient(()) == 1.0  # s^2 = 1
    assert multiply(g, g).support_size == 1


def test_two_term_expansion():
    # (a 1 + b s)(a 1 - b s) = (a^2 - b^2) 1 when s has order two
    amb = two_involution_ambient()
    s = amb.word([(0, 1)])
    a, b = 0.7, 0.3
    left = AlgebraElement(amb, {(): a, s: b})
    right = AlgebraElement(amb, {(): a, s: -b})
    prod = multiply(left, right)
    assert prod.support_size == 1
    assert abs(prod.coefficient(()) - (a * a - b * b)) < 1e-15


def test_star_examples():
    amb = involution_haar_ambient()
    lam = AlgebraElement.one(amb, 0.2 + 0.5j)
    assert star(lam).coefficient(()) == 0.2 - 0.5j
    v = haar_generator(amb, 1)
    vw = amb.word([(1, 1)])
    assert star(v).coefficient(amb.inverse_word(vw)) == 1.0
    u = order_two_unitary(amb, 0.5, 0)
    su = star(u)
    assert abs(su.coefficient(()) - 0.5) < 1e-15
    assert abs(su.coefficient(amb.word([(0, 1)])) + 1j * math.sqrt(0.75)) < 1e-15


def test_star_is_involutive_antihomomorphism():
    amb = two_involution_ambient()
    rng = random.Random(7)
    for _ in range(50):
        a = _random_element(amb, rng)
        b = _random_element(amb, rng)
        assert approx_equal(star(star(a)), a)
        assert approx_equal(star(multiply(a, b)), multiply(star(b), star(a)))


def test_trace_examples():
    amb = two_involution_ambient()
    assert trace(AlgebraElement.one(amb)) == 1.0
    g = AlgebraElement.from_word(amb, amb.word([(0, 1), (1, 1)]))
    assert trace(g) == 0j
    # freeness product rule for unitaries on distinct factors
    for a in GRID:
        for b in GRID:
            u = order_two_unitary(amb, a, 0)
            v = order_two_unitary(amb, b, 1)
            assert abs(trace(multiply(u, v)) - a * b) <= 1e-12


def test_trace_is_tracial_and_positive():
    amb = two_involution_ambient()
    rng = random.Random(11)
    for _ in range(200):
        a = _random_element(amb, rng)
        b = _random_element(amb, rng)
        assert abs(trace(multiply(a, b)) - trace(multiply(b, a))) <= 1e-12
        p = trace(multiply(star(a), a))
        assert p.real >= -1e-12 and abs(p.imag) <= 1e-12


def test_parseval():
    amb = involution_haar_ambient()
    rng = random.Random(13)
    for _ in range(50):
        a = _random_element(amb, rng)
        lhs = norm2(a) ** 2
        rhs = trace(multiply(star(a), a)).real
        assert abs(lhs - rhs) <= 1e-12


def test_is_unitary_examples():
    amb = two_involution_ambient()
    g = AlgebraElement.from_word(amb, amb.word([(0, 1)]))
    assert is_unitary(g, 0.0)
    assert not is_unitary(AlgebraElement.one(amb, 2.0))
    assert is_unitary(order_two_unitary(amb, 0.5, 0), 1e-12)


def test_ell_examples():
    amb = two_involution_ambient()
    one = AlgebraElement.one(amb)
    assert ell(one) == 0.0
    assert ell_bar(one) == 0.0
    u0 = order_two_unitary(amb, 0.0, 0)
    assert abs(ell(u0) - math.sqrt(2)) <= 1e-12
    assert abs(ell_bar(u0) - math.sqrt(2)) <= 1e-12
    u = order_two_unitary(amb, 0.75, 0)
    assert abs(ell(u) - 1 / math.sqrt(2)) <= 1e-12  # 0.70711
    u9 = order_two_unitary(amb, 0.9, 0)
    assert abs(ell(u9) - math.sqrt(0.2)) <= 1e-12  # 0.44721


def test_ell_rejects_non_unitary():
    amb = two_involution_ambient()
    with pytest.raises(ValueError):
        ell(AlgebraElement.one(amb, 2.0))


def test_ell_bar_never_exceeds_ell():
    amb = two_involution_ambient()
    for a in GRID:
        for phase in (1.0, 1j, -1.0, (1 + 1j) / math.sqrt(2)):
            u = phase * order_two_unitary(amb, a, 0)
            assert ell_bar(u) <= ell(u) + 1e-12


def test_order_two_unitary_validation():
    amb = two_involution_ambient()
    with pytest.raises(ValueError):
        order_two_unitary(amb, 1.0, 0)
    with pytest.raises(ValueError):
        order_two_unitary(involution_haar_ambient(), 0.5, 1)  # Z factor


def test_haar_generator_traces():
    amb = involution_haar_ambient()
    v = haar_generator(amb, 1)
    power = AlgebraElement.one(amb)
    for _ in range(20):
        power = multiply(power, v)
        assert trace(power) == 0j
    assert trace(AlgebraElement.one(amb)) == 1.0
    with pytest.raises(ValueError):
        haar_generator(amb, 0)


def test_free_commutator_identity_examples():
    chk = verify_free_commutator_identity(0.0, 0.0)
    assert abs(chk.lhs) <= 1e-12 and chk.rhs == 0.0
    chk = verify_free_commutator_identity(0.5, 0.5)
    assert abs(chk.rhs - 0.4375) < 1e-15
    assert chk.deviation <= 1e-12
    chk = verify_free_commutator_identity(0.9, 0.0)
    assert abs(chk.rhs - 0.81) < 1e-15
    assert chk.deviation <= 1e-12


def test_two_sided_bound_and_projective_equality():
    amb = two_involution_ambient()
    for a in GRID:
        for b in GRID:
            u = order_two_unitary(amb, a, 0)
            v = order_two_unitary(amb, b, 1)
            comm = multiply(multiply(multiply(u, v), star(u)), star(v))
            lu, lv = ell(u), ell(v)
            lbu, lbv = ell_bar(u), ell_bar(v)
            lc = ell(comm)
            assert lbu * lbv / math.sqrt(2) - 1e-10 <= lc <= math.sqrt(2) * lbu * lbv + 1e-10
            assert lc <= math.sqrt(2) * lu * lv + 1e-10
            assert abs(ell_bar(comm) - lc) <= 1e-10


def test_support_cap_raises():
    amb = two_involution_ambient()
    u = order_two_unitary(amb, 0.5, 0)
    v = order_two_unitary(amb, 0.5, 1)
    with pytest.raises(SupportCapExceeded):
        multiply(u, v, support_cap=3)


def test_word_normal_form_associativity():
    amb = FreeProductGroup((cyclic_group(3), Z, cyclic_group(2)))
    rng = random.Random(17)

    def rand_word():
        syll = []
        prev = -1
        for _ in range(rng.randint(0, 6)):
            f = rng.choice([i for i in range(3) if i != prev])
            fac = amb.factors[f]
            v = rng.choice([-2, -1, 1, 2]) if fac is Z else rng.randrange(1, fac.order)
            syll.append((f, v))
            prev = f
        return amb.word(syll)

    for _ in range(300):
        a, b, c = rand_word(), rand_word(), rand_word()
        assert amb.concat(amb.concat(a, b), c) == amb.concat(a, amb.concat(b, c))
        assert amb.concat(a, amb.inverse_word(a)) == ()


def test_serialization_roundtrip():
    amb = involution_haar_ambient()
    rng = random.Random(23)
    a = _random_element(amb, rng, n_words=8)
    records = element_to_records(a)
    b = element_from_records(amb, records)
    assert approx_equal(a, b, 1e-15)
    # records are sorted and json-friendly
    assert all(isinstance(lit, str) for lit, _, _ in records)


def test_substitute_into_algebra_matches_closed_form():
    # evaluating the second commutator word at (u, v) has the trace the
    # product formula predicts, with both routes exact
    amb = involution_haar_ambient()
    alpha = 0.6
    u = order_two_unitary(amb, alpha, 0)
    v = haar_generator(amb, 1)
    w2 = w_sequence(2)
    val = substitute(w2, {"x": u, "y": v}, AlgebraCarrier(amb))
    expected = 1.0 - (1.0 - alpha**2) ** 2
    assert abs(trace(val) - expected) <= 1e-12
