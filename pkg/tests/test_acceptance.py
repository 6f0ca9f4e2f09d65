"""Acceptance sweep: one test per criterion, all arithmetic exact.

Each test drives the matching verification suite and fails with the
suite's own diagnostics, so `pytest -v` prints one pass/fail line per
criterion.
"""

from rookrep.verify import run_suite


def _assert_suite(name, **kwargs):
    results = run_suite(name, **kwargs)
    assert results, f"suite {name} produced no checks"
    bad = [f"{check}: {detail}" for check, ok, detail in results if not ok]
    assert not bad, "; ".join(bad)


def test_criterion_01_monoid_counts():
    _assert_suite("counts")


def test_criterion_02_semisimple_dimension_identity():
    _assert_suite("dims")


def test_criterion_03_representation_correctness():
    _assert_suite("rep")


def test_criterion_04_jucys_murphy_suite():
    _assert_suite("jm")


def test_criterion_05_bratteli_golden():
    _assert_suite("bratteli")


def test_criterion_06_module_level_branching():
    _assert_suite("branching")


def test_criterion_07_gelfand_model():
    _assert_suite("gelfand")


def test_criterion_08_centrality():
    _assert_suite("center")


def test_criterion_09_chevalley_bicyclic():
    _assert_suite("chevalley", degree=6)


def test_criterion_10_bialgebra():
    _assert_suite("bialgebra", degree=5)


def test_criterion_11_prime_field_eigenvalues():
    _assert_suite("primefield")
