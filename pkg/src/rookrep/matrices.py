"""Small dense matrix helpers over an arbitrary commutative ring.

Matrices are tuples of row tuples.  Entries only need +, -, * among
themselves and truthiness for zero tests; ``nullspace`` additionally
needs field entries exposing ``inv``.
"""

from __future__ import annotations


def identity(n, one, zero):
    return tuple(tuple(one if i == j else zero for j in range(n))
                 for i in range(n))


def constant(rows, cols, value):
    return tuple((value,) * cols for _ in range(rows))


def mat_add(a, b):
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_sub(a, b):
    return tuple(tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_scale(c, a):
    return tuple(tuple(c * x for x in row) for row in a)


def mat_mul(a, b):
    bt = tuple(zip(*b))
    return tuple(
        tuple(_dot(row, col) for col in bt)
        for row in a)


def _dot(u, v):
    it = iter(zip(u, v))
    x, y = next(it)
    acc = x * y
    for x, y in it:
        acc = acc + x * y
    return acc


def mat_pow(a, k, one, zero):
    out = identity(len(a), one, zero)
    for _ in range(k):
        out = mat_mul(out, a)
    return out


def mat_vec(a, v):
    return tuple(_dot(row, v) for row in a)


def mat_eq(a, b) -> bool:
    return all(not (x - y) for ra, rb in zip(a, b) for x, y in zip(ra, rb))


def is_zero_matrix(a) -> bool:
    return all(not x for row in a for x in row)


def nullspace(a, one, zero):
    """Basis of the right kernel of a matrix over a field.

    Entries must support truthiness, +, -, *, and ``inv``.  Returns a list
    of vectors (tuples) spanning {v : a v = 0}; empty list for injective a.
    """
    if not a:
        return []
    rows = [list(r) for r in a]
    ncols = len(rows[0])
    pivots = []
    rix = 0
    for col in range(ncols):
        piv = next((i for i in range(rix, len(rows)) if rows[i][col]), None)
        if piv is None:
            continue
        rows[rix], rows[piv] = rows[piv], rows[rix]
        inv = rows[rix][col].inv()
        rows[rix] = [inv * x for x in rows[rix]]
        for i in range(len(rows)):
            if i != rix and rows[i][col]:
                c = rows[i][col]
                rows[i] = [x - c * y for x, y in zip(rows[i], rows[rix])]
        pivots.append(col)
        rix += 1
        if rix == len(rows):
            break
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        vec = [zero] * ncols
        vec[fc] = one
        for ri, pc in enumerate(pivots):
            vec[pc] = zero - rows[ri][fc]
        basis.append(tuple(vec))
    return basis
