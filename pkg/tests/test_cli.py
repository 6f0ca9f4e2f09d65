"""Command-line interface: output shapes, exit codes, guards."""

import json

import pytest

from rookrep.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_enumerate(capsys):
    code, out = run(capsys, "enumerate", "--n", "2", "--r", "1")
    assert code == 0
    assert len(json.loads(out)) == 7


def test_irrep(capsys):
    code, out = run(capsys, "irrep", "--n", "2", "--r", "2",
                    "--lambda", "[[1],[]]")
    assert code == 0
    data = json.loads(out)
    assert len(data["basis"]) == 2
    assert data["n"] == 2 and data["r"] == 2


def test_bratteli_json_and_dot(capsys):
    code, out = run(capsys, "bratteli", "--r", "2", "--nmax", "2")
    assert code == 0
    data = json.loads(out)
    assert [len(level) for level in data["levels"]] == [1, 3, 8]
    code, out = run(capsys, "bratteli", "--r", "2", "--nmax", "2",
                    "--format", "dot")
    assert code == 0
    assert out.startswith("graph bratteli {")


def test_jm_spectrum(capsys):
    code, out = run(capsys, "jm-spectrum", "--n", "2", "--r", "1",
                    "--lambda", "[[1]]")
    assert code == 0
    data = json.loads(out)
    assert data["violations"] == []
    assert len(data["rows"]) == 2


def test_groth_word(capsys):
    code, out = run(capsys, "groth", "--p", "2",
                    "--apply", "f0 B A", "--start", "[]:0")
    assert code == 0
    data = json.loads(out)
    assert data["terms"] == [
        {"lambda": [1], "m": 0, "coeff": ["1", "1"]}]


def test_bialgebra_product(capsys):
    code, out = run(capsys, "bialgebra", "--op", "product",
                    "--x", "[1]:1", "--y", "[]:2")
    assert code == 0
    data = json.loads(out)
    assert data["terms"] == [
        {"lambda": [1], "m": 3, "coeff": ["1", "1"]}]


def test_bialgebra_coproduct(capsys):
    code, out = run(capsys, "bialgebra", "--op", "coproduct", "--x", "[]:1")
    assert code == 0
    data = json.loads(out)
    assert len(data["terms"]) == 2


def test_verify_ok(capsys):
    code, out = run(capsys, "verify", "--suite", "counts")
    assert code == 0
    assert "FAIL" not in out
    assert "PASS" in out


def test_verify_with_degree(capsys):
    code, out = run(capsys, "verify", "--suite", "chevalley",
                    "--degree", "3")
    assert code == 0


def test_guards_exit_2(capsys):
    for argv in (["enumerate", "--n", "9"],
                 ["enumerate", "--n", "2", "--r", "99"],
                 ["groth", "--p", "4", "--start", "[]:0"],
                 ["verify", "--suite", "nope"],
                 ["groth", "--p", "2", "--start", "oops"],
                 ["irrep", "--n", "2", "--r", "2", "--lambda", "[[1]]"]):
        with pytest.raises(SystemExit) as err:
            main(argv)
        assert err.value.code == 2
        capsys.readouterr()


def test_deterministic_output(capsys):
    _, first = run(capsys, "enumerate", "--n", "2", "--r", "2")
    _, second = run(capsys, "enumerate", "--n", "2", "--r", "2")
    assert first == second
