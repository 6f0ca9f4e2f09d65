"""Exact scalar arithmetic.

Two coefficient domains:

* ``CycElem`` -- the group ring Q[x]/(x^r - 1).  Every matrix entry of the
  seminormal representations lives here; the only divisions ever needed
  are by rational integers, so no field structure is required.
* ``CycNumber`` -- the cyclotomic field Q[x]/Phi_r(x), the image of
  ``CycElem`` under x -> xi.  Used internally for kernel and eigenspace
  computations, where pivoting needs inverses.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

Rational = Fraction

_ZERO = Fraction(0)
_ONE = Fraction(1)


# ---------------------------------------------------------------------------
# dense polynomial helpers (coefficient lists, low degree first)

def _poly_trim(p):
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_mul(a, b):
    out = [_ZERO] * (len(a) + len(b) - 1) if a and b else []
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _poly_trim(out)


def _poly_divmod(a, b):
    """Exact division of Fraction polynomials; b must be nonzero."""
    a = list(a)
    b = list(b)
    _poly_trim(b)
    q = [_ZERO] * max(0, len(a) - len(b) + 1)
    inv = 1 / b[-1]
    for i in range(len(a) - len(b), -1, -1):
        c = a[i + len(b) - 1] * inv
        if c:
            q[i] = c
            for j, y in enumerate(b):
                a[i + j] -= c * y
    return q, _poly_trim(a)


@lru_cache(maxsize=None)
def cyclotomic_poly(r: int) -> tuple:
    """Monic minimal polynomial of a primitive r-th root of unity
    (low-degree-first Fraction coefficients)."""
    if r < 1:
        raise ValueError("order must be positive")
    poly = [-_ONE] + [_ZERO] * (r - 1) + [_ONE]
    for d in range(1, r):
        if r % d == 0:
            poly, rem = _poly_divmod(poly, list(cyclotomic_poly(d)))
            assert not rem
    return tuple(poly)


# ---------------------------------------------------------------------------
# the group ring Q[x]/(x^r - 1)

@dataclass(frozen=True)
class CycElem:
    """Element of Q[x]/(x^r - 1), canonical form = full coefficient vector."""

    order: int
    coeffs: tuple

    def __post_init__(self):
        if self.order < 1:
            raise ValueError("order must be positive")
        if len(self.coeffs) != self.order:
            raise ValueError("coefficient vector must have length r")

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, r: int) -> "CycElem":
        return cls(r, (_ZERO,) * r)

    @classmethod
    def one(cls, r: int) -> "CycElem":
        return cls.from_rational(r, _ONE)

    @classmethod
    def from_rational(cls, r: int, q) -> "CycElem":
        return cls(r, (Fraction(q),) + (_ZERO,) * (r - 1))

    @classmethod
    def root_power(cls, r: int, k: int) -> "CycElem":
        """The class of x^(k mod r)."""
        if r < 1:
            raise ValueError("order must be positive")
        c = [_ZERO] * r
        c[k % r] = _ONE
        return cls(r, tuple(c))

    @classmethod
    def sum_root_powers(cls, r: int, s: int) -> "CycElem":
        """sum_{l=0}^{r-1} x^(l*s); equals r when s = 0 mod r, else 0."""
        c = [_ZERO] * r
        for l in range(r):
            c[(l * s) % r] += _ONE
        return cls(r, tuple(c))

    # -- ring operations ----------------------------------------------------

    def _check(self, other: "CycElem"):
        if self.order != other.order:
            raise ValueError("mismatched orders")

    def __add__(self, other):
        self._check(other)
        return CycElem(self.order,
                       tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        self._check(other)
        return CycElem(self.order,
                       tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        return CycElem(self.order, tuple(-a for a in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            q = Fraction(other)
            return CycElem(self.order, tuple(a * q for a in self.coeffs))
        self._check(other)
        r = self.order
        out = [_ZERO] * r
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[(i + j) % r] += a * b
        return CycElem(r, tuple(out))

    __rmul__ = __mul__

    def __bool__(self):
        return any(self.coeffs)

    def is_zero(self) -> bool:
        return not self

    def is_rational(self):
        """The rational value if this element is a scalar, else None."""
        if any(self.coeffs[1:]):
            return None
        return self.coeffs[0]

    # -- serialization ------------------------------------------------------

    def to_json(self):
        return {"order": self.order,
                "coeffs": [[str(c.numerator), str(c.denominator)]
                           for c in self.coeffs]}

    @classmethod
    def from_json(cls, data) -> "CycElem":
        return cls(data["order"],
                   tuple(Fraction(int(n), int(d)) for n, d in data["coeffs"]))

    def __repr__(self):
        if not self:
            return "Cyc(0)"
        parts = []
        for k, c in enumerate(self.coeffs):
            if c:
                parts.append(f"{c}" if k == 0 else (f"{c}*x^{k}" if c != 1 else f"x^{k}"))
        return "Cyc(%s; r=%d)" % (" + ".join(parts), self.order)


def root_power(r: int, k: int) -> CycElem:
    return CycElem.root_power(r, k)


def sum_root_powers(r: int, s: int) -> CycElem:
    return CycElem.sum_root_powers(r, s)


# ---------------------------------------------------------------------------
# the cyclotomic field Q(xi_r)

@dataclass(frozen=True)
class CycNumber:
    """Element of Q[x]/Phi_r(x); supports division, used for exact kernels."""

    order: int
    coeffs: tuple  # length deg(Phi_r)

    @classmethod
    def _deg(cls, r):
        return len(cyclotomic_poly(r)) - 1

    @classmethod
    def _make(cls, r, poly):
        phi = list(cyclotomic_poly(r))
        _, rem = _poly_divmod(list(poly), phi)
        rem = rem + [_ZERO] * (cls._deg(r) - len(rem))
        return cls(r, tuple(rem))

    @classmethod
    def zero(cls, r):
        return cls(r, (_ZERO,) * cls._deg(r))

    @classmethod
    def one(cls, r):
        return cls.from_rational(r, _ONE)

    @classmethod
    def from_rational(cls, r, q):
        return cls._make(r, [Fraction(q)])

    @classmethod
    def root_power(cls, r, k):
        return cls._make(r, [_ZERO] * (k % r) + [_ONE])

    @classmethod
    def from_cyc(cls, e: CycElem) -> "CycNumber":
        """Evaluation x -> xi, i.e. reduction mod Phi_r."""
        return cls._make(e.order, list(e.coeffs))

    def _check(self, other):
        if self.order != other.order:
            raise ValueError("mismatched orders")

    def __add__(self, other):
        self._check(other)
        return CycNumber(self.order,
                         tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        self._check(other)
        return CycNumber(self.order,
                         tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        return CycNumber(self.order, tuple(-a for a in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            q = Fraction(other)
            return CycNumber(self.order, tuple(a * q for a in self.coeffs))
        self._check(other)
        return CycNumber._make(self.order,
                               _poly_mul(list(self.coeffs), list(other.coeffs)))

    __rmul__ = __mul__

    def __bool__(self):
        return any(self.coeffs)

    def inv(self) -> "CycNumber":
        """Multiplicative inverse via the extended Euclidean algorithm."""
        if not self:
            raise ZeroDivisionError("inverse of zero")
        # invariant: r_k = t_k * self  (mod Phi_r)
        r0, r1 = list(cyclotomic_poly(self.order)), _poly_trim(list(self.coeffs))
        t0, t1 = [], [_ONE]
        while r1:
            q, rem = _poly_divmod(r0, r1)
            r0, r1 = r1, rem
            qt = _poly_mul(q, t1)
            width = max(len(t0), len(qt))
            t0, t1 = t1, _poly_trim([
                (t0[i] if i < len(t0) else _ZERO) - (qt[i] if i < len(qt) else _ZERO)
                for i in range(width)])
        if len(r0) != 1:
            raise ZeroDivisionError("element is not invertible")
        scale = 1 / r0[0]
        return CycNumber._make(self.order, [c * scale for c in t0])

    def __truediv__(self, other):
        return self * other.inv()

    def is_rational(self):
        if any(self.coeffs[1:]):
            return None
        return self.coeffs[0]

    def __repr__(self):
        return "CycN(%s; r=%d)" % (list(self.coeffs), self.order)
