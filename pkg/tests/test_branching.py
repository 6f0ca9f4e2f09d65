"""Restriction labels, the branching graph, and module-level branching."""

from rookrep.branching import (BratteliGraph, bratteli_graph, count_paths,
                               export_graph, restrict_label,
                               restricted_module)
from rookrep.combinatorics import enumerate_tableaux
from rookrep.seminormal import decompose_by_spectrum, rook_irrep


def test_restrict_label():
    # full shape: only box removals survive
    assert restrict_label(((1,),), 1) == [((),)]
    # slack present: the shape itself survives as well
    assert sorted(restrict_label(((1,),), 2)) == [((),), ((1,),)]
    assert sorted(restrict_label(((1,), (1,)), 2)) == [((), (1,)),
                                                       ((1,), ())]


def test_graph_shape_r2():
    g = bratteli_graph(2, 2)
    assert [len(level) for level in g.levels] == [1, 3, 8]
    assert len(g.edges) == 14


def test_path_counts_match_tableaux():
    g = bratteli_graph(2, 3)
    for n, level in enumerate(g.levels):
        for shape in level:
            assert count_paths(g, shape, n) == len(enumerate_tableaux(shape, n))


def test_json_round_trip():
    g = bratteli_graph(2, 2)
    assert BratteliGraph.from_json(g.to_json()) == g


def test_dot_output():
    text = export_graph(bratteli_graph(2, 2), "dot")
    assert text.startswith("graph bratteli {")
    assert text.count("--") == 14


def test_restricted_module_decomposes():
    for shape, n in ((((1,),), 2), (((1,), (1,)), 3), (((2,),), 3)):
        mod = restricted_module(rook_irrep(shape, n).module())
        want = {mu: 1 for mu in restrict_label(shape, n)}
        assert decompose_by_spectrum(mod) == want
