"""Jucys-Murphy elements, their matrices, spectra, and centrality checks.

The X family is built by the conjugation recursion from Q - P; the Y
family is stored in the expanded transposition-sum form with the labeled
diagonal factors built directly as monoid elements.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from . import matrices as mx
from .combinatorics import tableau_stats
from .exactnum import CycElem, CycNumber
from .monoid import (AlgebraElem, RookElem, generators, idempotent_E,
                     transposition)


@dataclass(frozen=True)
class JmFamily:
    n: int
    r: int
    X: tuple
    Y: tuple


def _labeled_diag(n: int, r: int, m: int, j: int, l: int) -> RookElem:
    """Diagonal element with xi^l at position m and xi^(-l) at position j."""
    cols = list(RookElem.identity(n, r).cols)
    cols[m - 1] = (m, l % r)
    cols[j - 1] = (j, (-l) % r)
    return RookElem(n, r, tuple(cols))


def jm_elements(n: int, r: int) -> JmFamily:
    p_gen, q_gen, s_gens = generators(n, r)
    palg = AlgebraElem.from_elem(p_gen)
    qalg = AlgebraElem.from_elem(q_gen)
    salgs = [AlgebraElem.from_elem(s) for s in s_gens]

    xs = [qalg - palg]
    for j in range(2, n + 1):
        s = salgs[j - 2]
        xs.append(s * xs[-1] * s)

    ys = [AlgebraElem.zero(n, r)]
    for j in range(2, n + 1):
        acc = AlgebraElem.zero(n, r)
        for m in range(1, j):
            diag_sum = AlgebraElem.zero(n, r)
            for l in range(r):
                diag_sum = diag_sum + AlgebraElem.from_elem(
                    _labeled_diag(n, r, m, j, l))
            term = (idempotent_E({m, j}, n, r) * diag_sum
                    * AlgebraElem.from_elem(transposition(n, r, m, j)))
            acc = acc + term
        ys.append(acc.scale(Fraction(1, r)))
    return JmFamily(n, r, tuple(xs), tuple(ys))


# ---------------------------------------------------------------------------
# matrices on a module given by its generator matrices

def jm_matrices(mod):
    """(X matrices, Y matrices) on a module from its P, Q, s matrices."""
    n, r = mod.n, mod.r
    dim = mod.dim
    one = CycElem.one(r)
    zero = CycElem.zero(r)
    ident = mx.identity(dim, one, zero)

    p_list = [mod.p_mat]
    q_list = [mod.q_mat]
    for k in range(2, n + 1):
        s = mod.s_mats[k - 2]
        p_list.append(mx.mat_mul(mx.mat_mul(s, p_list[-1]), s))
        q_list.append(mx.mat_mul(mx.mat_mul(s, q_list[-1]), s))

    x_mats = [mx.mat_sub(q, p) for q, p in zip(q_list, p_list)][:n]

    def q_power(k, l):
        return mx.mat_pow(q_list[k - 1], l % r, one, zero)

    def trans_mat(m, j):
        out = mod.s_mats[m - 1]
        for t in range(m + 2, j + 1):
            s = mod.s_mats[t - 2]
            out = mx.mat_mul(mx.mat_mul(s, out), s)
        return out

    inv_r = Fraction(1, r)
    y_mats = [mx.constant(dim, dim, zero)]
    for j in range(2, n + 1):
        acc = mx.constant(dim, dim, zero)
        for m in range(1, j):
            e_mj = mx.mat_add(
                mx.mat_sub(mx.mat_sub(ident, p_list[m - 1]), p_list[j - 1]),
                mx.mat_mul(p_list[m - 1], p_list[j - 1]))
            diag_sum = mx.constant(dim, dim, zero)
            for l in range(r):
                diag_sum = mx.mat_add(
                    diag_sum, mx.mat_mul(q_power(m, l), q_power(j, r - l)))
            term = mx.mat_mul(mx.mat_mul(e_mj, diag_sum), trans_mat(m, j))
            acc = mx.mat_add(acc, term)
        y_mats.append(mx.mat_scale(inv_r, acc))
    return x_mats, y_mats[:n]


# ---------------------------------------------------------------------------
# spectra on seminormal representations

def expected_spectrum(L, n: int, r: int):
    """(X values, Y values) on v_L predicted from signs and contents."""
    xs, ys = [], []
    for b in range(1, n + 1):
        sgn_exp, ct, _ = tableau_stats(L, b)
        if sgn_exp is None:
            xs.append(CycElem.zero(r))
            ys.append(CycElem.zero(r))
        else:
            xs.append(CycElem.root_power(r, sgn_exp))
            ys.append(CycElem.from_rational(r, ct))
    return tuple(xs), tuple(ys)


def jm_spectrum(rep):
    """Table basis vector -> (X string, Y string), plus diagonality violations.

    Matrix entries are compared after evaluating x at a primitive root:
    sums such as (1/r) sum_l xi^(ls) only collapse in the cyclotomic field.
    """
    x_mats, y_mats = jm_matrices(rep.module())
    table = []
    violations = []
    for idx, L in enumerate(rep.basis):
        xs, ys = expected_spectrum(L, rep.n, rep.r)
        table.append((L, xs, ys))
        for name, mats, vals in (("X", x_mats, xs), ("Y", y_mats, ys)):
            for i, (m, val) in enumerate(zip(mats, vals), start=1):
                for row in range(rep.dim):
                    want = val if row == idx else CycElem.zero(rep.r)
                    diff = CycNumber.from_cyc(m[row][idx] - want)
                    if diff:
                        violations.append(
                            f"{name}_{i} entry ({row},{idx}) differs")
    return table, violations


# ---------------------------------------------------------------------------
# symmetric polynomials and centrality

def elementary_symmetric(elems, k: int):
    """e_k of a commuting family of algebra elements."""
    if not elems:
        raise ValueError("empty family")
    n, r = elems[0].n, elems[0].r
    if k == 0:
        return AlgebraElem.from_elem(RookElem.identity(n, r))
    acc = AlgebraElem.zero(n, r)
    for combo in itertools.combinations(elems, k):
        prod = combo[0]
        for e in combo[1:]:
            prod = prod * e
        acc = acc + prod
    return acc


def centrality_report(n: int, r: int, degrees=None):
    """Commutators of e_k(X), e_k(Y) with the generators; empty when central."""
    fam = jm_elements(n, r)
    p_gen, q_gen, s_gens = generators(n, r)
    gens = ([("P", AlgebraElem.from_elem(p_gen)),
             ("Q", AlgebraElem.from_elem(q_gen))]
            + [(f"s{j}", AlgebraElem.from_elem(s))
               for j, s in enumerate(s_gens, start=1)])
    degrees = degrees or range(1, n + 1)
    failures = []
    for k in degrees:
        for fname, family in (("X", fam.X), ("Y", fam.Y)):
            ek = elementary_symmetric(list(family), k)
            for gname, g in gens:
                if ek.commutator(g):
                    failures.append(f"[e_{k}({fname}), {gname}] != 0")
    return failures
