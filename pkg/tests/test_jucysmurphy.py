"""Commuting families, diagonal spectra, central elements."""

from rookrep.combinatorics import MultiTableau
from rookrep.monoid import AlgebraElem, generators
from rookrep.exactnum import CycElem
from rookrep.jucysmurphy import (centrality_report, elementary_symmetric,
                                 expected_spectrum, jm_elements, jm_spectrum)
from rookrep.seminormal import rook_irrep


def test_families_commute_pairwise():
    fam = jm_elements(3, 2)
    all_elems = list(fam.X) + list(fam.Y)
    for a in all_elems:
        for b in all_elems:
            assert not a.commutator(b)


def test_spectrum_diagonal():
    for shape, n in ((((2,),), 3), (((1,), (1,)), 2), (((1,), ()), 2)):
        table, violations = jm_spectrum(rook_irrep(shape, n))
        assert violations == []
        # distinct basis vectors carry distinct eigenvalue strings
        strings = [(xs, ys) for _, xs, ys in table]
        assert len(strings) == len(set(strings))


def test_expected_spectrum_values():
    # tableau of shape ((2,),) filled with 1, 2: contents 0 and 1
    L = MultiTableau(2, (((1, 2),),))
    xs, ys = expected_spectrum(L, 2, 1)
    assert xs == (CycElem.one(1), CycElem.one(1))
    assert ys == (CycElem.from_rational(1, 0), CycElem.from_rational(1, 1))


def test_x1_is_q_minus_p():
    fam = jm_elements(2, 3)
    p_gen, q_gen, _ = generators(2, 3)
    want = AlgebraElem.from_elem(q_gen) - AlgebraElem.from_elem(p_gen)
    assert fam.X[0] == want


def test_elementary_symmetric_degrees():
    fam = jm_elements(2, 2)
    e1 = elementary_symmetric(list(fam.Y), 1)
    e2 = elementary_symmetric(list(fam.Y), 2)
    assert e1 == fam.Y[0] + fam.Y[1]
    assert e2 == fam.Y[0] * fam.Y[1]


def test_centrality():
    assert centrality_report(2, 2) == []
    assert centrality_report(3, 1) == []
