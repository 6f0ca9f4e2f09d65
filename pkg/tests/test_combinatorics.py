"""Partitions, signatures, and multitableaux."""

from rookrep.combinatorics import (add_box, addable_boxes, enumerate_tableaux,
                                   is_p_regular, multipartitions,
                                   multipartitions_up_to, partitions,
                                   remove_box, removable_boxes, signature)


def test_partition_counts():
    assert partitions(0) == [()]
    assert len(partitions(4)) == 5
    assert len(partitions(6)) == 11


def test_multipartition_counts():
    assert len(multipartitions(2, 2)) == 5
    assert len(multipartitions_up_to(2, 2)) == 1 + 2 + 5


def test_box_moves_invert():
    for lam in partitions(5):
        for b in removable_boxes(lam):
            assert add_box(remove_box(lam, b), b) == lam
        for b in addable_boxes(lam):
            assert remove_box(add_box(lam, b), b) == lam


def test_p_regular():
    assert is_p_regular((2, 1), 2)
    assert not is_p_regular((1, 1), 2)
    assert is_p_regular((3, 3, 1), 3)
    assert not is_p_regular((2, 2, 2), 3)


def test_signature_row_two():
    sig = signature((2,), 1, 2)
    assert sig.raw == "+-"
    assert sig.reduced == "+-"
    assert sig.normal == ((1, 2),)
    assert sig.conormal == ((2, 1),)


def test_signature_cancellation():
    # residue-2 word of (2,1) at p=3 is "-+" and cancels completely
    sig = signature((2, 1), 2, 3)
    assert sig.raw == "-+"
    assert sig.reduced == ""
    assert sig.normal == () and sig.conormal == ()


def test_signature_counts_match_word():
    for lam in partitions(6):
        for p in (2, 3):
            for i in range(p):
                sig = signature(lam, i, p)
                assert "-+" not in sig.reduced
                assert (len(sig.conormal) - len(sig.normal)
                        == sig.raw.count("+") - sig.raw.count("-"))


def test_tableau_counts():
    # |Y(shape, n)|: injective placements of a subset of [n]
    assert len(enumerate_tableaux(((1,),), 2)) == 2
    assert len(enumerate_tableaux(((2, 1),), 3)) == 2
    assert len(enumerate_tableaux(((1,), (1,)), 2)) == 2
    assert len(enumerate_tableaux(((), ()), 3)) == 1


def test_dimension_identity_small():
    # sum over shapes of |Y|^2 equals the monoid order, n = r = 2
    shapes = [s for _, s in multipartitions_up_to(2, 2)]
    assert sum(len(enumerate_tableaux(s, 2)) ** 2 for s in shapes) == 17


def test_standard_tableaux_are_distinct():
    tabs = enumerate_tableaux(((2, 1), ()), 3)
    assert len(tabs) == len(set(tabs))
