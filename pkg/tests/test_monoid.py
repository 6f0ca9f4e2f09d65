"""Monoid elements, generators, cells, and the monoid algebra."""

from fractions import Fraction

from rookrep.monoid import (AlgebraElem, RookElem, enumerate_elements,
                            generators, h_elem, in_lcell, lcell_basis,
                            transposition)


def test_element_counts():
    assert len(enumerate_elements(2, 1)) == 7
    assert len(enumerate_elements(3, 1)) == 34
    assert len(enumerate_elements(2, 2)) == 17
    assert len(enumerate_elements(2, 3)) == 31


def test_associativity_exhaustive_n2_r2():
    elems = enumerate_elements(2, 2)
    for a in elems:
        for b in elems:
            ab = a * b
            for c in elems:
                assert (ab) * c == a * (b * c)


def test_transpose_antiautomorphism():
    elems = enumerate_elements(2, 2)
    for a in elems:
        assert a.transpose().transpose() == a
        for b in elems:
            assert (a * b).transpose() == b.transpose() * a.transpose()


def test_identity_and_zero():
    one = RookElem.identity(3, 2)
    zero = RookElem.zero_elem(3, 2)
    for e in enumerate_elements(3, 2)[:20]:
        assert one * e == e and e * one == e
        assert zero * e == zero and e * zero == zero


def test_generator_relations():
    p, q, s_list = generators(3, 2)
    one = RookElem.identity(3, 2)
    s1, s2 = s_list
    assert p * p == p
    assert q * q == one
    assert p * q == p and q * p == p
    assert s1 * s1 == one and s2 * s2 == one
    assert s1 * s2 * s1 == s2 * s1 * s2


def test_transposition_via_conjugation():
    t13 = transposition(3, 1, 1, 3)
    _, _, (s1, s2) = generators(3, 1)
    assert t13 == s2 * s1 * s2 == s1 * s2 * s1


def test_lcell_membership():
    for i in range(3):
        for h in lcell_basis(i, 3, 2):
            assert in_lcell(h, i)
            assert h.rank() == i
    assert h_elem({1, 3}, 3, 1).image() == frozenset({1, 3})


def test_json_round_trip():
    for e in enumerate_elements(2, 3):
        assert RookElem.from_json(e.to_json()) == e


def test_algebra_commutator():
    p, q, _ = generators(2, 2)
    a = AlgebraElem.from_elem(p)
    b = AlgebraElem.from_elem(q)
    # PQ = QP = P, so the commutator vanishes
    assert not a.commutator(b)
    assert a.scale(Fraction(1, 2)) + a.scale(Fraction(1, 2)) == a
