"""Cyclotomic group-ring and field arithmetic."""

from fractions import Fraction

from rookrep.exactnum import CycElem, CycNumber, cyclotomic_poly


def test_cyclotomic_polys():
    assert cyclotomic_poly(1) == (Fraction(-1), Fraction(1))
    assert cyclotomic_poly(2) == (Fraction(1), Fraction(1))
    assert cyclotomic_poly(4) == (Fraction(1), Fraction(0), Fraction(1))
    assert cyclotomic_poly(6) == (Fraction(1), Fraction(-1), Fraction(1))
    assert cyclotomic_poly(8) == (Fraction(1), 0, 0, 0, Fraction(1))


def test_root_power_wraps():
    assert (CycElem.root_power(4, 3) * CycElem.root_power(4, 2)
            == CycElem.root_power(4, 1))
    assert CycElem.root_power(5, 7) == CycElem.root_power(5, 2)


def test_ring_axioms_sample():
    a = CycElem.root_power(3, 1) + CycElem.from_rational(3, Fraction(1, 2))
    b = CycElem.root_power(3, 2) - CycElem.one(3)
    c = CycElem.from_rational(3, 5)
    assert (a + b) * c == a * c + b * c
    assert a * b == b * a
    assert a - a == CycElem.zero(3)


def test_sum_root_powers():
    # sum of all r-th roots raised to a fixed power s: r when r | s, else 0
    assert CycElem.sum_root_powers(4, 0) == CycElem.from_rational(4, 4)
    total = CycElem.sum_root_powers(4, 1)
    # nonzero in the group ring, zero after evaluating at a primitive root
    assert total
    assert not CycNumber.from_cyc(total)


def test_json_round_trip():
    e = (CycElem.root_power(6, 5) * CycElem.from_rational(6, Fraction(3, 7))
         + CycElem.one(6))
    assert CycElem.from_json(e.to_json()) == e


def test_field_inverse():
    x = CycNumber.root_power(5, 2)
    assert x * x.inv() == CycNumber.one(5)
    y = CycNumber.one(7) + CycNumber.root_power(7, 3)
    assert y / y == CycNumber.one(7)


def test_field_reduces_modulo_cyclotomic():
    # 1 + x + x^2 vanishes for a primitive cube root of unity
    s = (CycNumber.one(3) + CycNumber.root_power(3, 1)
         + CycNumber.root_power(3, 2))
    assert not s
    assert CycNumber.root_power(2, 1) == CycNumber.from_rational(2, -1)


def test_is_rational():
    assert CycElem.from_rational(4, Fraction(2, 3)).is_rational() == Fraction(2, 3)
    assert CycElem.root_power(4, 1).is_rational() is None
