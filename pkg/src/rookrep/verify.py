"""Verification suites: each suite returns a list of (check name, ok,
detail) triples and is wired both into the CLI and the acceptance tests.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial

from . import matrices as mx
from .branching import bratteli_graph, count_paths, restrict_label, \
    restricted_module
from .combinatorics import enumerate_tableaux, multipartitions_up_to
from .grothendieck import (BicyclicModule, bialgebra_check,
                           lie_relation_check, phi_check)
from .jucysmurphy import (centrality_report, expected_spectrum, jm_elements,
                          jm_spectrum)
from .monoid import enumerate_elements, generators
from .seminormal import (decompose_by_spectrum, gelfand_model, oracle_matrix,
                         rook_irrep)


def _check(name, ok, detail=""):
    return (name, bool(ok), detail)


def predicted_count(n: int, r: int) -> int:
    return sum(comb(n, k) ** 2 * factorial(k) * r ** k for k in range(n + 1))


# ---------------------------------------------------------------------------
# suite 1: monoid counts

def suite_counts():
    out = []
    for n, r, want in ((2, 1, 7), (3, 1, 34), (2, 2, 17)):
        got = len(enumerate_elements(n, r))
        out.append(_check(f"count ({n},{r}) = {want}", got == want,
                          f"got {got}"))
    for n in range(4):
        for r in range(1, 4):
            got = len(enumerate_elements(n, r))
            want = predicted_count(n, r)
            out.append(_check(f"count formula ({n},{r})", got == want,
                              f"got {got}, want {want}"))
    return out


# ---------------------------------------------------------------------------
# suite 2: sum of squared dimensions

def suite_dims():
    out = []
    for n in range(4):
        for r in range(1, 4):
            total = sum(
                len(enumerate_tableaux(shape, n)) ** 2
                for _, shape in multipartitions_up_to(r, n))
            want = predicted_count(n, r)
            out.append(_check(f"dim identity ({n},{r})", total == want,
                              f"got {total}, want {want}"))
    return out


# ---------------------------------------------------------------------------
# suite 3: representation multiplicativity

def _closed_form_matches_oracle(shape, n, r):
    rep = rook_irrep(shape, n)
    p_gen, q_gen, s_gens = generators(n, r)
    pairs = [(rep.p_mat, p_gen), (rep.q_mat, q_gen)]
    pairs += list(zip(rep.s_mats, s_gens))
    return all(mx.mat_eq(mat, oracle_matrix(shape, n, g))
               for mat, g in pairs)


def suite_rep(pairs=((2, 1), (2, 2), (2, 3), (3, 1))):
    out = []
    for n, r in pairs:
        elements = enumerate_elements(n, r)
        ok = True
        detail = ""
        for _, shape in multipartitions_up_to(r, n):
            if not _closed_form_matches_oracle(shape, n, r):
                ok = False
                detail = f"generator matrices differ for {shape}"
                break
            mats = {s: oracle_matrix(shape, n, s) for s in elements}
            for s in elements:
                for t in elements:
                    if not mx.mat_eq(mx.mat_mul(mats[s], mats[t]),
                                     mats[s * t]):
                        ok = False
                        detail = f"{shape}: rho({s})rho({t}) != rho(st)"
                        break
                if not ok:
                    break
            if not ok:
                break
        out.append(_check(f"multiplicativity ({n},{r})", ok, detail))
    return out


# ---------------------------------------------------------------------------
# suite 4: Jucys-Murphy commutation, spectra, separation

def suite_jm(n_max=3, r_max=3):
    out = []
    for n in range(1, n_max + 1):
        for r in range(1, r_max + 1):
            fam = jm_elements(n, r)
            elems = list(fam.X) + list(fam.Y)
            commute = all(not (a * b - b * a)
                          for a in elems for b in elems)
            out.append(_check(f"JM commutation ({n},{r})", commute))

            bad = []
            profiles = {}
            clash = ""
            for _, shape in multipartitions_up_to(r, n):
                rep = rook_irrep(shape, n)
                _, violations = jm_spectrum(rep)
                bad.extend(violations)
                for L in rep.basis:
                    prof = expected_spectrum(L, n, r)
                    if prof in profiles and profiles[prof] != L:
                        clash = f"{L} vs {profiles[prof]}"
                    profiles[prof] = L
            out.append(_check(f"JM spectra diagonal ({n},{r})", not bad,
                              "; ".join(bad[:3])))
            out.append(_check(f"JM separation ({n},{r})", not clash, clash))
    return out


# ---------------------------------------------------------------------------
# suite 5: Bratteli golden data

_E = ()
_1 = (1,)
_2 = (2,)
_11 = (1, 1)

_GOLDEN_EDGES_R2 = {
    # level 1: from the empty bipartition
    (1, (_E, _E), (_E, _E)),
    (1, (_E, _E), (_1, _E)),
    (1, (_E, _E), (_E, _1)),
    # level 2: from the empty bipartition
    (2, (_E, _E), (_E, _E)),
    (2, (_E, _E), (_1, _E)),
    (2, (_E, _E), (_E, _1)),
    # level 2: from ((1), -)
    (2, (_1, _E), (_1, _E)),
    (2, (_1, _E), (_2, _E)),
    (2, (_1, _E), (_11, _E)),
    (2, (_1, _E), (_1, _1)),
    # level 2: from (-, (1))
    (2, (_E, _1), (_E, _1)),
    (2, (_E, _1), (_E, _2)),
    (2, (_E, _1), (_E, _11)),
    (2, (_E, _1), (_1, _1)),
}


def suite_bratteli():
    out = []
    g = bratteli_graph(2, 2)
    sizes = [len(lv) for lv in g.levels]
    out.append(_check("level sizes 1/3/8", sizes == [1, 3, 8],
                      f"got {sizes}"))
    got = {(m, g.levels[m - 1][a], g.levels[m][b]) for m, a, b in g.edges}
    want = _GOLDEN_EDGES_R2
    out.append(_check("14 golden edges", got == want,
                      f"missing {want - got}, extra {got - want}"))
    ok = True
    detail = ""
    for n, lv in enumerate(g.levels):
        for shape in lv:
            paths = count_paths(g, shape, n)
            dim = len(enumerate_tableaux(shape, n))
            if paths != dim:
                ok = False
                detail = f"{shape} at level {n}: {paths} vs {dim}"
    out.append(_check("path counts match dimensions", ok, detail))
    return out


# ---------------------------------------------------------------------------
# suite 6: module-level branching

def suite_branching(n_max=3, r_max=2):
    out = []
    for n in range(1, n_max + 1):
        for r in range(1, r_max + 1):
            ok = True
            detail = ""
            for _, shape in multipartitions_up_to(r, n):
                want = {mu: 1 for mu in restrict_label(shape, n)}
                mod = restricted_module(rook_irrep(shape, n).module())
                got = decompose_by_spectrum(mod)
                if got != want:
                    ok = False
                    detail = f"{shape}: got {got}, want {want}"
                    break
            out.append(_check(f"branching ({n},{r})", ok, detail))
    return out


# ---------------------------------------------------------------------------
# suite 7: Gelfand model

def suite_gelfand(n_max=3, r_max=2):
    out = []
    for n in range(1, n_max + 1):
        for r in range(1, r_max + 1):
            gm = gelfand_model(n, r)
            shapes = [shape for _, shape in multipartitions_up_to(r, n)]
            total = sum(len(enumerate_tableaux(shape, n))
                        for shape in shapes)
            out.append(_check(f"Gelfand dimension ({n},{r})",
                              gm.dim == total,
                              f"got {gm.dim}, want {total}"))
            got = decompose_by_spectrum(gm.mats)
            want = {shape: 1 for shape in shapes}
            out.append(_check(f"Gelfand multiplicity-free ({n},{r})",
                              got == want, f"got {got}"))
    return out


# ---------------------------------------------------------------------------
# suite 8: centrality

def suite_center(n_max=3, r_max=2):
    out = []
    for n in range(1, n_max + 1):
        for r in range(1, r_max + 1):
            failures = centrality_report(n, r)
            out.append(_check(f"centrality ({n},{r})", not failures,
                              "; ".join(failures[:3])))
    return out


# ---------------------------------------------------------------------------
# suite 9: Chevalley relations and the bicyclic monoid

def suite_chevalley(degree_bound=6):
    out = []
    for p in (2, 3):
        failures = lie_relation_check(p, degree_bound)
        out.append(_check(f"Chevalley relations p={p}", not failures,
                          "; ".join(failures[:3])))
    vn = BicyclicModule("V_N")
    ok = (vn.act_word("a", 0) == {}
          and all(vn.act_word("ab", i) == {i: 1} for i in range(11))
          and vn.act_word("ba", 0) == {}
          and vn.act_word("ba", 1) == {1: 1})
    out.append(_check("bicyclic V_N relations", ok))
    vl = BicyclicModule("V_lambda", 2)
    ok = (vl.act_word("b", 0) == {0: Fraction(2)}
          and vl.act_word("a", 0) == {0: Fraction(1, 2)}
          and vl.act_word("ab", 0) == {0: Fraction(1)})
    out.append(_check("bicyclic V_lambda relations", ok))
    return out


# ---------------------------------------------------------------------------
# suite 10: bialgebra and the intertwiner

def suite_bialgebra(degree_bound=5):
    out = []
    failures = bialgebra_check(degree_bound)
    out.append(_check("bialgebra axioms", not failures,
                      "; ".join(failures[:3])))
    for p in (None, 2):
        failures = phi_check(p, degree_bound)
        tag = "char 0" if p is None else f"p={p}"
        out.append(_check(f"intertwiner {tag}", not failures,
                          "; ".join(failures[:3])))
    return out


# ---------------------------------------------------------------------------
# suite 11: prime-field eigenvalues

def berkowitz_charpoly(a, p: int) -> list:
    """Characteristic polynomial of a matrix over F_p, division-free.

    Returns coefficients [1, c_1, ..., c_n] so the polynomial is
    x^n + c_1 x^(n-1) + ... + c_n.
    """
    n = len(a)
    poly = [1 % p]
    for k in range(1, n + 1):
        row = [a[k - 1][j] % p for j in range(k - 1)]
        col = [a[i][k - 1] % p for i in range(k - 1)]
        sub = [[a[i][j] % p for j in range(k - 1)] for i in range(k - 1)]
        v = [1 % p, (-a[k - 1][k - 1]) % p]
        cur = list(row)
        for _ in range(k - 1):
            v.append((-sum(x * y for x, y in zip(cur, col))) % p)
            cur = [sum(cur[l] * sub[l][j] for l in range(k - 1)) % p
                   for j in range(k - 1)]
        new = [0] * (k + 1)
        for j, pj in enumerate(poly):
            for i, vi in enumerate(v):
                if i + j <= k:
                    new[i + j] = (new[i + j] + vi * pj) % p
        poly = new
    return poly


def charpoly_splits(coeffs, p: int) -> bool:
    """True when the monic polynomial factors into linear terms over F_p."""
    f = [c % p for c in coeffs]
    for c in range(p):
        while len(f) > 1:
            # synthetic division by (x - c)
            q = [f[0]]
            for coef in f[1:]:
                q.append((coef + c * q[-1]) % p)
            if q[-1] % p:
                break
            f = q[:-1]
    return len(f) == 1


def _regular_matrices(n: int):
    """Left-multiplication matrices of X_i, Y_i on the span of R_n."""
    elements = enumerate_elements(n, 1)
    index = {e: i for i, e in enumerate(elements)}
    fam = jm_elements(n, 1)
    mats = []
    for alg in list(fam.X) + list(fam.Y):
        m = [[Fraction(0)] * len(elements) for _ in range(len(elements))]
        for j, e in enumerate(elements):
            for term, coeff in alg.terms:
                val = coeff.is_rational()
                m[index[term * e]][j] += val
        mats.append(m)
    return mats


def suite_primefield(n_max=3):
    out = []
    for n in range(1, n_max + 1):
        mats = _regular_matrices(n)
        for p in (2, 3):
            ok = True
            detail = ""
            for idx, m in enumerate(mats):
                entries = [[int(x) % p for x in row] for row in m]
                if any(x.denominator != 1 for row in m for x in row):
                    ok, detail = False, "non-integer entry"
                    break
                cp = berkowitz_charpoly(entries, p)
                if not charpoly_splits(cp, p):
                    ok = False
                    detail = f"matrix {idx} does not split mod {p}"
                    break
            out.append(_check(f"charpoly splits (n={n}, p={p})", ok, detail))
    return out


SUITES = {
    "counts": suite_counts,
    "dims": suite_dims,
    "rep": suite_rep,
    "jm": suite_jm,
    "bratteli": suite_bratteli,
    "branching": suite_branching,
    "gelfand": suite_gelfand,
    "center": suite_center,
    "chevalley": suite_chevalley,
    "bialgebra": suite_bialgebra,
    "primefield": suite_primefield,
}


# suites whose sweep size is controlled by a degree bound
_DEGREE_SUITES = {"chevalley", "bialgebra"}


def run_suite(name: str, degree=None):
    if name == "all":
        out = []
        for key in SUITES:
            out.extend(run_suite(key, degree))
        return out
    if name not in SUITES:
        raise KeyError(name)
    if degree is not None and name in _DEGREE_SUITES:
        return SUITES[name](degree)
    return SUITES[name]()
