"""Seminormal irreducible representations and the Gelfand model.

Matrices act on column vectors; column j of a generator matrix holds the
image of the j-th basis vector.  The basis of every representation is a
sorted list of multitableaux, and the induced-module oracle recomputes
the action of an arbitrary monoid element from the L-cell construction
for cross-checking against the closed-form matrices.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import matrices as mx
from .combinatorics import (MultiTableau, a_coeff, enumerate_tableaux,
                            mp_size, multipartitions_up_to, relabel,
                            standardize, swap)
from .exactnum import CycElem, CycNumber
from .monoid import RookElem, enumerate_elements, generators, h_elem


@dataclass(frozen=True)
class ModuleMats:
    """Generator matrices of some module, entries in CycElem."""

    n: int
    r: int
    p_mat: tuple
    q_mat: tuple
    s_mats: tuple

    @property
    def dim(self) -> int:
        return len(self.q_mat)


@dataclass(frozen=True)
class Representation:
    """Module with a tableau-labeled basis; p_mat is None for the group case."""

    label: tuple
    n: int
    r: int
    basis: tuple
    p_mat: object
    q_mat: tuple
    s_mats: tuple

    @property
    def dim(self) -> int:
        return len(self.basis)

    def index(self, L: MultiTableau) -> int:
        return self.basis.index(L)

    def module(self) -> ModuleMats:
        if self.p_mat is None:
            raise ValueError("no P action in the group case")
        return ModuleMats(self.n, self.r, self.p_mat, self.q_mat, self.s_mats)

    def to_json(self):
        out = {"label": [list(c) for c in self.label],
               "n": self.n, "r": self.r,
               "basis": [L.to_json() for L in self.basis],
               "matrices": {
                   "Q": _mat_json(self.q_mat),
                   "s": [_mat_json(m) for m in self.s_mats]}}
        if self.p_mat is not None:
            out["matrices"]["P"] = _mat_json(self.p_mat)
        return out


def _mat_json(m):
    return [[e.to_json() for e in row] for row in m]


def _columns_to_matrix(cols, dim, r):
    zero = CycElem.zero(r)
    return tuple(tuple(cols[j].get(i, zero) for j in range(dim))
                 for i in range(dim))


def _s_column(L: MultiTableau, j: int, r: int, index) -> dict:
    """Action of s_j on v_L as {basis index: coefficient}."""
    one = CycElem.one(r)
    has_j = L.find(j) is not None
    has_j1 = L.find(j + 1) is not None
    if not has_j and not has_j1:
        return {index[L]: one}
    if has_j != has_j1:
        M, ok = swap(L, j)
        assert ok
        return {index[M]: one}
    kj = L.find(j)[0]
    kj1 = L.find(j + 1)[0]
    if kj != kj1:
        M, ok = swap(L, j)
        assert ok
        return {index[M]: one}
    a = a_coeff(L, j)
    out = {index[L]: CycElem.from_rational(r, a)}
    M, ok = swap(L, j)
    if ok:
        out[index[M]] = CycElem.from_rational(r, 1 + a)
    return out


def _q_column(L: MultiTableau, r: int, index) -> dict:
    loc = L.find(1)
    if loc is None:
        return {index[L]: CycElem.one(r)}
    return {index[L]: CycElem.root_power(r, loc[0] - 1)}


def _build(shape, n, r, with_p) -> Representation:
    basis = tuple(enumerate_tableaux(shape, n))
    index = {L: i for i, L in enumerate(basis)}
    dim = len(basis)
    q = _columns_to_matrix([_q_column(L, r, index) for L in basis], dim, r)
    ss = tuple(
        _columns_to_matrix([_s_column(L, j, r, index) for L in basis], dim, r)
        for j in range(1, n))
    p = None
    if with_p:
        one = CycElem.one(r)
        p = _columns_to_matrix(
            [({index[L]: one} if L.find(1) is None else {}) for L in basis],
            dim, r)
    return Representation(shape, n, r, basis, p, q, ss)


@lru_cache(maxsize=None)
def symgroup_irrep(shape) -> Representation:
    """Irreducible C_r wr S_n module on standard multitableaux, n = |shape|."""
    return _build(shape, mp_size(shape), len(shape), with_p=False)


@lru_cache(maxsize=None)
def rook_irrep(shape, n: int) -> Representation:
    """Irreducible C_r wr R_n module on Y(shape, n)."""
    if mp_size(shape) > n:
        raise ValueError("shape larger than ambient size")
    return _build(shape, n, len(shape), with_p=True)


# ---------------------------------------------------------------------------
# factorization of full-rank elements into generator words

def _perm_word(rows) -> list:
    """Adjacent-transposition word multiplying (left to right) to the
    permutation sending column j to rows[j-1]."""
    p = list(rows)
    word = []
    done = False
    while not done:
        done = True
        for j in range(len(p) - 1):
            if p[j] > p[j + 1]:
                p[j], p[j + 1] = p[j + 1], p[j]
                word.append(j + 1)
                done = False
                break
    return list(reversed(word))


def _trans_word(m: int) -> list:
    """s-word for the transposition (1, m)."""
    if m == 1:
        return []
    if m == 2:
        return [1]
    return [m - 1] + _trans_word(m - 1) + [m - 1]


def group_factorize(pi: RookElem) -> list:
    """Word in tokens ("s", j) and ("Q",) whose left-to-right product is pi.

    The diagonal part is expressed through conjugates (1,m) Q^l (1,m) of Q.
    """
    rows, labs = pi.perm_and_labels()
    word = [("s", j) for j in _perm_word(rows)]
    for m, lab in enumerate(labs, start=1):
        lab %= pi.r
        if lab:
            t = [("s", j) for j in _trans_word(m)]
            word += t + [("Q",)] * lab + t
    return word


def _apply_word(rep: Representation, word, vec: dict) -> dict:
    """Apply the word's product to a sparse vector, rightmost token first."""
    zero = CycElem.zero(rep.r)
    for token in reversed(word):
        m = rep.q_mat if token[0] == "Q" else rep.s_mats[token[1] - 1]
        out = {}
        for j, c in vec.items():
            for i in range(rep.dim):
                e = m[i][j]
                if e:
                    out[i] = out.get(i, zero) + e * c
        vec = {i: c for i, c in out.items() if c}
    return vec


# ---------------------------------------------------------------------------
# induced-module oracle

def act_oracle(shape, n: int, sigma: RookElem, L: MultiTableau) -> dict:
    """sigma . v_L as {basis index: CycElem} in rook_irrep(shape, n)."""
    r = len(shape)
    i = mp_size(shape)
    rep = rook_irrep(shape, n)
    Z, inner = standardize(L)
    tau = sigma * h_elem(Z, n, r)
    if tau.rank() < i:
        return {}
    zp = sorted(tau.image())
    pos = {row: l for l, row in enumerate(zp, start=1)}
    cols = []
    for l in range(1, i + 1):
        row, lab = tau.cols[l - 1]
        cols.append((pos[row], lab))
    pi = RookElem(i, r, tuple(cols))
    group = symgroup_irrep(shape)
    vec = _apply_word(group, group_factorize(pi),
                      {group.index(inner): CycElem.one(r)})
    out = {}
    for idx, coeff in vec.items():
        M = relabel(group.basis[idx].fillings, n, zp)
        out[rep.index(M)] = coeff
    return out


def oracle_matrix(shape, n: int, sigma: RookElem):
    """Matrix of sigma on rook_irrep(shape, n) assembled from the oracle."""
    rep = rook_irrep(shape, n)
    cols = [act_oracle(shape, n, sigma, L) for L in rep.basis]
    return _columns_to_matrix(cols, rep.dim, rep.r)


# ---------------------------------------------------------------------------
# Gelfand model

@dataclass(frozen=True)
class GelfandModel:
    n: int
    r: int
    basis: tuple  # symmetric RookElems
    mats: ModuleMats

    @property
    def dim(self) -> int:
        return len(self.basis)


def _pa_adjacent(M: RookElem, i: int) -> bool:
    ci, cj = M.cols[i - 1], M.cols[i]
    return (ci is not None and cj is not None
            and ci[0] == i + 1 and cj[0] == i)


def gelfand_model(n: int, r: int) -> GelfandModel:
    """Module on the symmetric monoid elements containing every simple once."""
    basis = tuple(M for M in enumerate_elements(n, r)
                  if M == M.transpose())
    index = {M: i for i, M in enumerate(basis)}
    dim = len(basis)
    p_gen, q_gen, s_gens = generators(n, r)
    q_inv = RookElem.identity(n, r)
    for _ in range(r - 1):
        q_inv = q_inv * q_gen

    def build(col_fn):
        return _columns_to_matrix([col_fn(M) for M in basis], dim, r)

    def s_col(j):
        def col(M):
            sign = -1 if _pa_adjacent(M, j) else 1
            return {index[s_gens[j - 1] * M * s_gens[j - 1]]:
                    CycElem.from_rational(r, sign)}
        return col

    def q_col(M):
        # conjugation alone fixes every diagonal basis element, so the
        # label of a fixed point at position 1 is fed back as a
        # root-of-unity factor to separate the component characters
        c1 = M.cols[0]
        lab = c1[1] if c1 is not None and c1[0] == 1 else 0
        return {index[q_gen * M * q_inv]: CycElem.root_power(r, lab)}

    def p_col(M):
        if 1 in M.image():
            return {}
        return {index[M]: CycElem.one(r)}

    mats = ModuleMats(n, r,
                      build(p_col), build(q_col),
                      tuple(build(s_col(j)) for j in range(1, n)))
    return GelfandModel(n, r, basis, mats)


# ---------------------------------------------------------------------------
# spectrum-based decomposition

def _to_field(mat, r):
    return tuple(tuple(CycNumber.from_cyc(e) for e in row) for row in mat)


def _split(space, mat, candidates):
    """Refine a list of column vectors by eigenvalue; yields (value, vecs)."""
    if not space:
        return
    order = space[0][0].order
    one = CycNumber.one(order)
    zero = CycNumber.zero(order)
    dim = len(space[0])
    total = 0
    pieces = []
    for key, val in candidates:
        rows = []
        for i in range(dim):
            row = []
            for v in space:
                acc = zero
                for j, x in enumerate(mat[i]):
                    if x:
                        acc = acc + x * v[j]
                row.append(acc - val * v[i])
            rows.append(row)
        kernel = mx.nullspace(rows, one, zero)
        if kernel:
            vecs = []
            for w in kernel:
                vec = [zero] * dim
                for l, c in enumerate(w):
                    if c:
                        for j in range(dim):
                            vec[j] = vec[j] + c * space[l][j]
                vecs.append(tuple(vec))
            total += len(vecs)
            pieces.append((key, vecs))
    if total != len(space):
        raise ValueError("joint eigenspaces do not fill the module")
    for piece in pieces:
        yield piece


def _tableau_profile(L: MultiTableau, n: int):
    prof = []
    for b in range(1, n + 1):
        loc = L.find(b)
        if loc is None:
            prof.append((None, 0))
        else:
            k, row, col = loc
            prof.append((k - 1, col - row))
    return tuple(prof)


def decompose_by_spectrum(mod: ModuleMats) -> dict:
    """Multiplicities of the irreducibles in a module, from JM eigenvalues.

    Splits the module into joint eigenspaces of the commuting family
    X_1..X_n, Y_1..Y_n and matches each eigenvalue string against the
    sign/content profile of a unique multitableau.
    """
    from .jucysmurphy import jm_matrices

    n, r = mod.n, mod.r
    x_mats, y_mats = jm_matrices(mod)
    x_mats = [_to_field(m, r) for m in x_mats]
    y_mats = [_to_field(m, r) for m in y_mats]
    dim = mod.dim
    one = CycNumber.one(r)
    zero = CycNumber.zero(r)
    x_cands = [(None, zero)] + [(k, CycNumber.root_power(r, k))
                                for k in range(r)]
    y_cands = [(c, CycNumber.from_rational(r, c))
               for c in range(-n, n + 1)]
    basis0 = [tuple(one if i == j else zero for j in range(dim))
              for i in range(dim)]
    leaves = [((), basis0)] if dim else []
    for i in range(n):
        nxt = []
        for prof, space in leaves:
            for xkey, xspace in _split(space, x_mats[i], x_cands):
                ycands = [(0, zero)] if xkey is None else y_cands
                for ykey, yspace in _split(xspace, y_mats[i], ycands):
                    nxt.append((prof + ((xkey, ykey),), yspace))
        leaves = nxt

    profile_to_shape = {}
    shape_tableau_count = {}
    for level, shape in multipartitions_up_to(r, n):
        count = 0
        for L in enumerate_tableaux(shape, n):
            profile_to_shape[_tableau_profile(L, n)] = shape
            count += 1
        shape_tableau_count[shape] = count

    per_tableau = {}
    for prof, space in leaves:
        if prof not in profile_to_shape:
            raise ValueError(f"eigenvalue string {prof} matches no tableau")
        per_tableau[prof] = len(space)

    out = {}
    for shape, count in shape_tableau_count.items():
        dims = {per_tableau.get(_tableau_profile(L, n), 0)
                for L in enumerate_tableaux(shape, n)}
        if len(dims) > 1:
            raise ValueError("inconsistent multiplicities within one shape")
        mult = dims.pop()
        if mult:
            out[shape] = mult
    return out
