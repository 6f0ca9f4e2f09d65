"""Generalized rook monoids and their monoid algebras.

An element is a labeled partial injection on [n]: each column j either
maps to nothing or to a (row, label exponent) pair, no row used twice.
Column j of the matrix picture carries xi^label at that row.  Algebra
elements are formal linear combinations with CycElem coefficients.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .exactnum import CycElem

ENUMERATION_LIMIT = 2_000_000


def _count_elements(n: int, r: int) -> int:
    from math import comb, factorial
    return sum(comb(n, k) ** 2 * factorial(k) * r ** k for k in range(n + 1))


@dataclass(frozen=True)
class RookElem:
    """Labeled partial injection; cols[j-1] is (row, label exponent) or None."""

    n: int
    r: int
    cols: tuple

    def __post_init__(self):
        if len(self.cols) != self.n:
            raise ValueError("wrong number of columns")
        used = [row for row, _ in (c for c in self.cols if c is not None)]
        if len(used) != len(set(used)):
            raise ValueError("row used twice")

    # -- constructors -------------------------------------------------------

    @classmethod
    def identity(cls, n: int, r: int) -> "RookElem":
        return cls(n, r, tuple((j, 0) for j in range(1, n + 1)))

    @classmethod
    def zero_elem(cls, n: int, r: int) -> "RookElem":
        return cls(n, r, (None,) * n)

    @classmethod
    def from_perm(cls, perm, r: int, labels=None) -> "RookElem":
        """perm maps column j (1-based) to a row; labels exponent per column."""
        n = len(perm)
        labels = labels or (0,) * n
        return cls(n, r, tuple((perm[j], labels[j] % r) for j in range(n)))

    # -- structure ----------------------------------------------------------

    def __call__(self, j: int):
        return self.cols[j - 1]

    def domain(self) -> frozenset:
        return frozenset(j for j in range(1, self.n + 1)
                         if self.cols[j - 1] is not None)

    def image(self) -> frozenset:
        return frozenset(c[0] for c in self.cols if c is not None)

    def rank(self) -> int:
        return sum(1 for c in self.cols if c is not None)

    def __mul__(self, other: "RookElem") -> "RookElem":
        """Matrix product: (self other)(j) = self(other(j)), labels added."""
        if (self.n, self.r) != (other.n, other.r):
            raise ValueError("size or order mismatch")
        cols = []
        for c in other.cols:
            if c is None:
                cols.append(None)
                continue
            mid, lab = c
            c2 = self.cols[mid - 1]
            cols.append(None if c2 is None
                        else (c2[0], (c2[1] + lab) % self.r))
        return RookElem(self.n, self.r, tuple(cols))

    def transpose(self) -> "RookElem":
        """Matrix transpose: inverts the partial map and negates labels."""
        cols = [None] * self.n
        for j, c in enumerate(self.cols, start=1):
            if c is not None:
                row, lab = c
                cols[row - 1] = (j, (-lab) % self.r)
        return RookElem(self.n, self.r, tuple(cols))

    def sort_key(self):
        dom = sorted(self.domain())
        return (self.rank(), dom,
                [self.cols[j - 1][0] for j in dom],
                [self.cols[j - 1][1] for j in dom])

    def perm_and_labels(self):
        """(row word, label word) on the full domain; requires full rank."""
        if self.rank() != self.n:
            raise ValueError("not full rank")
        return (tuple(c[0] for c in self.cols), tuple(c[1] for c in self.cols))

    def cycle_type(self):
        """Cycle type on the common row/column support; None if supports differ."""
        if self.r != 1:
            raise ValueError("cycle type defined for r = 1 only")
        if self.domain() != self.image():
            return None
        parts = []
        seen = set()
        for j in sorted(self.domain()):
            if j in seen:
                continue
            length = 0
            cur = j
            while cur not in seen:
                seen.add(cur)
                length += 1
                cur = self.cols[cur - 1][0]
            parts.append(length)
        return tuple(sorted(parts, reverse=True))

    def to_json(self):
        return {"n": self.n, "r": self.r,
                "cols": [list(c) if c is not None else None
                         for c in self.cols]}

    @classmethod
    def from_json(cls, data) -> "RookElem":
        return cls(data["n"], data["r"],
                   tuple(tuple(c) if c is not None else None
                         for c in data["cols"]))

    def __repr__(self):
        body = ",".join("." if c is None else f"{c[0]}^{c[1]}"
                        for c in self.cols)
        return f"Rook[{body}]"


# ---------------------------------------------------------------------------
# generators and distinguished elements

def generators(n: int, r: int):
    """(P, Q, [s_1, ..., s_{n-1}])."""
    ident = RookElem.identity(n, r)
    p = RookElem(n, r, (None,) + ident.cols[1:])
    q = RookElem(n, r, ((1, 1 % r),) + ident.cols[1:])
    ss = []
    for j in range(1, n):
        cols = list(ident.cols)
        cols[j - 1], cols[j] = (j + 1, 0), (j, 0)
        ss.append(RookElem(n, r, tuple(cols)))
    return p, q, ss


def transposition(n: int, r: int, a: int, b: int) -> RookElem:
    cols = list(RookElem.identity(n, r).cols)
    cols[a - 1], cols[b - 1] = (b, 0), (a, 0)
    return RookElem(n, r, tuple(cols))


def enumerate_elements(n: int, r: int):
    """All of C_r wr R_n, sorted by (rank, domain, rows, labels)."""
    if _count_elements(n, r) > ENUMERATION_LIMIT:
        raise ValueError("enumeration too large")
    out = []
    universe = list(range(1, n + 1))
    for k in range(n + 1):
        for dom in itertools.combinations(universe, k):
            for rows in itertools.permutations(universe, k):
                for labs in itertools.product(range(r), repeat=k):
                    cols = [None] * n
                    for j, row, lab in zip(dom, rows, labs):
                        cols[j - 1] = (row, lab)
                    out.append(RookElem(n, r, tuple(cols)))
    out.sort(key=RookElem.sort_key)
    return out


def h_elem(Z, n: int, r: int) -> RookElem:
    """h_Z: 1's at (r_l, l) for Z = {r_1 < ... < r_i}, other columns zero."""
    rows = sorted(Z)
    cols = [None] * n
    for l, row in enumerate(rows, start=1):
        cols[l - 1] = (row, 0)
    return RookElem(n, r, tuple(cols))


def lcell_basis(i: int, n: int, r: int):
    """The h_Z over all i-subsets Z, in lexicographic Z order."""
    return [h_elem(Z, n, r)
            for Z in itertools.combinations(range(1, n + 1), i)]


def in_lcell(sigma: RookElem, i: int) -> bool:
    """Rank i with all columns past i zero."""
    return (sigma.rank() == i
            and all(c is None for c in sigma.cols[i:]))


def e_diag(B, n: int, r: int) -> RookElem:
    """Diagonal idempotent with zeros exactly at the coordinates in B."""
    cols = [(j, 0) if j not in B else None for j in range(1, n + 1)]
    return RookElem(n, r, tuple(cols))


# ---------------------------------------------------------------------------
# the monoid algebra

@dataclass(frozen=True)
class AlgebraElem:
    """Finite CycElem-linear combination of monoid elements."""

    n: int
    r: int
    terms: tuple  # sorted ((RookElem, CycElem), ...), no zero coefficients

    @classmethod
    def _build(cls, n, r, mapping) -> "AlgebraElem":
        items = [(e, c) for e, c in mapping.items() if c]
        items.sort(key=lambda t: t[0].sort_key())
        return cls(n, r, tuple(items))

    @classmethod
    def zero(cls, n, r) -> "AlgebraElem":
        return cls(n, r, ())

    @classmethod
    def from_elem(cls, e: RookElem, coeff=None) -> "AlgebraElem":
        coeff = coeff if coeff is not None else CycElem.one(e.r)
        return cls._build(e.n, e.r, {e: coeff})

    def _check(self, other):
        if (self.n, self.r) != (other.n, other.r):
            raise ValueError("size or order mismatch")

    def __add__(self, other: "AlgebraElem") -> "AlgebraElem":
        self._check(other)
        acc = dict(self.terms)
        for e, c in other.terms:
            acc[e] = acc[e] + c if e in acc else c
        return AlgebraElem._build(self.n, self.r, acc)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return AlgebraElem(self.n, self.r,
                           tuple((e, -c) for e, c in self.terms))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        self._check(other)
        acc = {}
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                e = e1 * e2
                c = c1 * c2
                acc[e] = acc[e] + c if e in acc else c
        return AlgebraElem._build(self.n, self.r, acc)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def scale(self, q) -> "AlgebraElem":
        if isinstance(q, (int, Fraction)):
            q = CycElem.from_rational(self.r, q)
        return AlgebraElem._build(self.n, self.r,
                                  {e: c * q for e, c in self.terms})

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self

    def commutator(self, other: "AlgebraElem") -> "AlgebraElem":
        return self * other - other * self


def idempotent_E(A, n: int, r: int) -> AlgebraElem:
    """E_A = sum over B subset A of (-1)^|B| e_B."""
    A = sorted(A)
    acc = AlgebraElem.zero(n, r)
    for size in range(len(A) + 1):
        for B in itertools.combinations(A, size):
            coeff = CycElem.from_rational(r, (-1) ** size)
            acc = acc + AlgebraElem.from_elem(e_diag(set(B), n, r), coeff)
    return acc
