"""Partitions, multipartitions, residue signatures, and multitableaux.

Conventions used throughout the package:

* partitions are tuples of weakly decreasing positive integers, () = empty;
* boxes are (row, col) pairs, 1-based, English orientation;
* the rim of a diagram is read from bottom left to top right, i.e. boxes
  are listed by strictly decreasing row index;
* a multipartition is an r-tuple of partitions and a multitableau is an
  r-tuple of fillings with pairwise disjoint entries drawn from [n].
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

Partition = tuple
Multipartition = tuple
Box = tuple  # (row, col)


# ---------------------------------------------------------------------------
# partitions

def check_partition(parts) -> Partition:
    parts = tuple(int(x) for x in parts)
    if any(p < 1 for p in parts):
        raise ValueError("parts must be positive")
    if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
        raise ValueError("parts must be weakly decreasing")
    return parts


def partitions(k: int) -> list:
    """All partitions of k, reverse-lexicographic (largest first part first)."""
    if k == 0:
        return [()]
    out = []

    def rec(rest, maxpart, acc):
        if rest == 0:
            out.append(tuple(acc))
            return
        for p in range(min(rest, maxpart), 0, -1):
            acc.append(p)
            rec(rest - p, p, acc)
            acc.pop()

    rec(k, k, [])
    return out


def multipartitions(r: int, k: int) -> list:
    """All r-tuples of partitions with total size k, lexicographic order."""
    out = []

    def rec(comp, rest, acc):
        if comp == r:
            if rest == 0:
                out.append(tuple(acc))
            return
        budget = rest if comp < r - 1 else rest
        for size in range(0, budget + 1):
            if comp == r - 1 and size != rest:
                continue
            for lam in partitions(size):
                acc.append(lam)
                rec(comp + 1, rest - size, acc)
                acc.pop()

    rec(0, k, [])
    out.sort()
    return out


def multipartitions_up_to(r: int, n: int) -> list:
    """(level, multipartition) pairs for Lambda_r(i), 0 <= i <= n."""
    return [(i, lam) for i in range(n + 1) for lam in multipartitions(r, i)]


def mp_size(lam: Multipartition) -> int:
    return sum(sum(c) for c in lam)


def empty_multipartition(r: int) -> Multipartition:
    return ((),) * r


# ---------------------------------------------------------------------------
# boxes, contents, residues

def content(box: Box) -> int:
    row, col = box
    return col - row


def residue(box: Box, p):
    """Content of the box, reduced mod p when p is given (p None = char 0)."""
    c = content(box)
    return c if p is None else c % p


def removable_boxes(lam: Partition) -> list:
    """Outer corners, by strictly decreasing row (bottom left to top right)."""
    out = []
    for row in range(len(lam), 0, -1):
        if row == len(lam) or lam[row - 1] > lam[row]:
            out.append((row, lam[row - 1]))
    return out


def addable_boxes(lam: Partition) -> list:
    """Addable boxes, by strictly decreasing row."""
    out = [(len(lam) + 1, 1)]
    for row in range(len(lam), 0, -1):
        if row == 1 or lam[row - 2] > lam[row - 1]:
            out.append((row, lam[row - 1] + 1))
    return out


def removable_addable(lam: Partition, i=None, p=None):
    """Outer corners and addable boxes, optionally filtered by residue i."""
    rem = removable_boxes(lam)
    add = addable_boxes(lam)
    if i is not None:
        rem = [b for b in rem if residue(b, p) == i]
        add = [b for b in add if residue(b, p) == i]
    return rem, add


def remove_box(lam: Partition, box: Box) -> Partition:
    row, col = box
    assert lam[row - 1] == col
    parts = list(lam)
    parts[row - 1] -= 1
    return tuple(p for p in parts if p)


def add_box(lam: Partition, box: Box) -> Partition:
    row, col = box
    parts = list(lam) + [0]
    assert parts[row - 1] == col - 1
    parts[row - 1] += 1
    return check_partition(p for p in parts if p)


def is_p_regular(lam: Partition, p: int) -> bool:
    """No part value repeated p or more times."""
    if p < 2:
        raise ValueError("p must be at least 2")
    return all(lam.count(v) < p for v in set(lam))


# ---------------------------------------------------------------------------
# i-signatures

@dataclass(frozen=True)
class Signature:
    raw: str
    reduced: str
    normal: tuple    # removable boxes surviving reduction, rim order
    conormal: tuple  # addable boxes surviving reduction, rim order


def rim_word(lam: Partition, i, p) -> list:
    """(box, '+'/'-') for residue-i addable/removable boxes in rim order."""
    rem, add = removable_addable(lam, i, p)
    word = [(b, "-") for b in rem] + [(b, "+") for b in add]
    word.sort(key=lambda t: -t[0][0])
    return word


def signature(lam: Partition, i, p) -> Signature:
    """Raw and reduced i-signature; reduction deletes adjacent '-+' pairs."""
    word = rim_word(lam, i, p)
    stack = []
    for box, sym in word:
        if sym == "+" and stack and stack[-1][1] == "-":
            stack.pop()
        else:
            stack.append((box, sym))
    reduced = "".join(s for _, s in stack)
    assert "-+" not in reduced
    return Signature(
        raw="".join(s for _, s in word),
        reduced=reduced,
        normal=tuple(b for b, s in stack if s == "-"),
        conormal=tuple(b for b, s in stack if s == "+"),
    )


# ---------------------------------------------------------------------------
# multitableaux

@dataclass(frozen=True)
class MultiTableau:
    """Filling of a multipartition diagram with distinct entries from [n]."""

    n: int
    fillings: tuple  # per component: tuple of row tuples

    @property
    def order(self) -> int:
        return len(self.fillings)

    def shape(self) -> Multipartition:
        return tuple(tuple(len(row) for row in comp) for comp in self.fillings)

    def entries(self) -> frozenset:
        return frozenset(e for comp in self.fillings for row in comp for e in row)

    def find(self, b: int):
        """(component, row, col) of entry b (1-based), or None."""
        for k, comp in enumerate(self.fillings, start=1):
            for rr, row in enumerate(comp, start=1):
                for cc, e in enumerate(row, start=1):
                    if e == b:
                        return (k, rr, cc)
        return None

    def is_standard(self) -> bool:
        seen = set()
        for comp in self.fillings:
            for rr, row in enumerate(comp):
                for cc, e in enumerate(row):
                    if e < 1 or e > self.n or e in seen:
                        return False
                    seen.add(e)
                    if cc and row[cc - 1] >= e:
                        return False
                    if rr and comp[rr - 1][cc] >= e:
                        return False
        return True

    def sort_key(self):
        absent = (self.order + 1, 0, 0)
        return tuple(self.find(b) or absent for b in range(1, self.n + 1))

    def to_json(self):
        """Per-component matrices padded with 0 for absent cells."""
        return [[list(row) for row in comp] for comp in self.fillings]


def _standard_multitableaux(shape: Multipartition):
    """All standard fillings of shape with entries 1..|shape|."""
    size = mp_size(shape)
    if size == 0:
        yield tuple(() for _ in shape)
        return
    for k in range(len(shape)):
        for box in removable_boxes(shape[k]):
            smaller = list(shape)
            smaller[k] = remove_box(shape[k], box)
            for sub in _standard_multitableaux(tuple(smaller)):
                comp = [list(map(list, c)) for c in sub]
                row, col = box
                while len(comp[k]) < row:
                    comp[k].append([])
                comp[k][row - 1].append(size)
                assert len(comp[k][row - 1]) == col
                yield tuple(tuple(tuple(r) for r in c) for c in comp)


def relabel(fillings, n: int, chosen) -> MultiTableau:
    """Replace entry l by chosen[l-1] throughout (chosen strictly increasing)."""
    return MultiTableau(n, tuple(
        tuple(tuple(chosen[e - 1] for e in row) for row in comp)
        for comp in fillings))


def enumerate_tableaux(shape: Multipartition, n: int) -> list:
    """All of Y(shape, n), sorted by the positions of the entries 1..n."""
    size = mp_size(shape)
    if size > n:
        raise ValueError("shape larger than ambient set")
    std = list(_standard_multitableaux(shape))
    out = []
    for chosen in itertools.combinations(range(1, n + 1), size):
        for fill in std:
            out.append(relabel(fill, n, chosen))
    out.sort(key=MultiTableau.sort_key)
    return out


def standardize(L: MultiTableau):
    """Split L into (Z, L') with Z its sorted entry set and L' on 1..|Z|."""
    entries = sorted(L.entries())
    pos = {e: l for l, e in enumerate(entries, start=1)}
    inner = MultiTableau(len(entries), tuple(
        tuple(tuple(pos[e] for e in row) for row in comp)
        for comp in L.fillings))
    return tuple(entries), inner


def sgn_exponent(L: MultiTableau, b: int):
    """k-1 when b sits in component k, else None (sign xi^(k-1))."""
    loc = L.find(b)
    return None if loc is None else loc[0] - 1


def tableau_stats(L: MultiTableau, b: int):
    """(sign exponent or None, content or None, component or None)."""
    loc = L.find(b)
    if loc is None:
        return None, None, None
    k, row, col = loc
    return k - 1, col - row, k


def swap(L: MultiTableau, i: int):
    """(s_i L, valid flag): replace i <-> i+1 wherever they occur."""
    if not 1 <= i <= L.n - 1:
        raise ValueError("index out of range")
    sub = {i: i + 1, i + 1: i}
    M = MultiTableau(L.n, tuple(
        tuple(tuple(sub.get(e, e) for e in row) for row in comp)
        for comp in L.fillings))
    return M, M.is_standard()


def a_coeff(L: MultiTableau, i: int) -> Fraction:
    """1 / (ct(L(i+1)) - ct(L(i))); requires i, i+1 in the same component."""
    li, lj = L.find(i), L.find(i + 1)
    if li is None or lj is None or li[0] != lj[0]:
        raise ValueError("i and i+1 must share a component")
    return Fraction(1, (lj[2] - lj[1]) - (li[2] - li[1]))
