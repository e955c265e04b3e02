"""Exact arithmetic in the real field Q(sqrt2, sqrt3, sqrt5).

Elements are stored as rational coordinates over the basis
``1, √2, √3, √5, √6, √10, √15, √30``.  This field contains ``cos(pi/m)`` for
every ``m`` in ``{1, 2, 3, 4, 5, 6}``, which is all a Coxeter matrix with
those entries (plus ``∞``) needs.
"""
from __future__ import annotations

import math
from fractions import Fraction
from functools import reduce
from typing import Iterable, Union

from .errors import UnsupportedOrder

__all__ = [
    "AlgebraicNumber",
    "UnsupportedOrder",
    "INFINITY",
    "RADICANDS",
    "bilinear_entry",
    "sign",
    "arith",
]

#: radicands of the ordered basis
RADICANDS = (1, 2, 3, 5, 6, 10, 15, 30)
_INDEX = {d: i for i, d in enumerate(RADICANDS)}

#: Coxeter-matrix encoding of "no relation"
INFINITY = 0

SUPPORTED_ORDERS = (1, 2, 3, 4, 5, 6, INFINITY)


def _squarefree_split(n: int) -> tuple[int, int]:
    # n = g*g*r with r squarefree; only primes 2, 3, 5 can occur here
    g, r = 1, 1
    for p in (2, 3, 5):
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        g *= p ** (e // 2)
        r *= p ** (e % 2)
    assert n == 1
    return g, r


def _build_table():
    table = []
    for a in RADICANDS:
        row = []
        for b in RADICANDS:
            g, r = _squarefree_split(a * b)
            row.append((_INDEX[r], g))
        table.append(tuple(row))
    return tuple(table)


#: MUL[i][j] = (k, g) means basis_i * basis_j = g * basis_k
MUL = _build_table()

Scalar = Union[int, Fraction, "AlgebraicNumber"]

_FZERO = Fraction(0)


class AlgebraicNumber:
    """An immutable element of Q(√2, √3, √5)."""

    __slots__ = ("coeffs", "_hash", "_sign")

    def __init__(self, coeffs: Iterable = (0,) * 8):
        cs = tuple(Fraction(c) for c in coeffs)
        if len(cs) != 8:
            raise ValueError("need exactly 8 coordinates, got %d" % len(cs))
        self.coeffs = cs
        self._hash = None
        self._sign = None

    @classmethod
    def rational(cls, q) -> AlgebraicNumber:
        return cls((q, 0, 0, 0, 0, 0, 0, 0))

    @classmethod
    def sqrt(cls, d: int) -> AlgebraicNumber:
        """The square root of a squarefree radicand in the basis."""
        cs = [0] * 8
        cs[_INDEX[d]] = 1
        return cls(cs)

    @classmethod
    def coerce(cls, x: Scalar) -> AlgebraicNumber:
        if isinstance(x, AlgebraicNumber):
            return x
        return cls.rational(x)

    # ------------------------------------------------------------------

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = AlgebraicNumber.rational(other)
        if not isinstance(other, AlgebraicNumber):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.coeffs)
        return self._hash

    @classmethod
    def _raw(cls, cs: tuple) -> AlgebraicNumber:
        # cs must already be a tuple of 8 Fractions
        obj = object.__new__(cls)
        obj.coeffs = cs
        obj._hash = None
        obj._sign = None
        return obj

    def __add__(self, other: Scalar) -> AlgebraicNumber:
        other = AlgebraicNumber.coerce(other)
        a, b = self.coeffs, other.coeffs
        if not any(b):
            return self
        if not any(a):
            return other
        return AlgebraicNumber._raw(tuple(x + y if y else x for x, y in zip(a, b)))

    __radd__ = __add__

    def __neg__(self) -> AlgebraicNumber:
        return AlgebraicNumber._raw(tuple(-a for a in self.coeffs))

    def __sub__(self, other: Scalar) -> AlgebraicNumber:
        other = AlgebraicNumber.coerce(other)
        a, b = self.coeffs, other.coeffs
        if not any(b):
            return self
        return AlgebraicNumber._raw(tuple(x - y if y else x for x, y in zip(a, b)))

    def __rsub__(self, other: Scalar) -> AlgebraicNumber:
        return AlgebraicNumber.coerce(other) - self

    def __mul__(self, other: Scalar) -> AlgebraicNumber:
        if isinstance(other, (int, Fraction)):
            return AlgebraicNumber._raw(tuple(a * other for a in self.coeffs))
        other = AlgebraicNumber.coerce(other)
        a, b = self.coeffs, other.coeffs
        if not any(a[1:]):
            x = a[0]
            return AlgebraicNumber._raw(tuple(x * y if y else y for y in b))
        if not any(b[1:]):
            y = b[0]
            return AlgebraicNumber._raw(tuple(x * y if x else x for x in a))
        out = [_FZERO] * 8
        for i, x in enumerate(a):
            if not x:
                continue
            row = MUL[i]
            for j, y in enumerate(b):
                if y:
                    k, g = row[j]
                    out[k] += g * x * y
        return AlgebraicNumber._raw(tuple(out))

    __rmul__ = __mul__

    def sign(self) -> int:
        if self._sign is None:
            self._sign = _sign(self.coeffs)
        return self._sign

    def __lt__(self, other: Scalar) -> bool:
        return (self - other).sign() < 0

    def __le__(self, other: Scalar) -> bool:
        return (self - other).sign() <= 0

    def __gt__(self, other: Scalar) -> bool:
        return (self - other).sign() > 0

    def __ge__(self, other: Scalar) -> bool:
        return (self - other).sign() >= 0

    def __float__(self):
        return sum(float(c) * math.sqrt(d) for c, d in zip(self.coeffs, RADICANDS))

    def __repr__(self):
        return "AlgebraicNumber(%s)" % str(self)

    def __str__(self):
        terms = []
        for c, d in zip(self.coeffs, RADICANDS):
            if not c:
                continue
            if d == 1:
                terms.append(str(c))
            elif c == 1:
                terms.append("√%d" % d)
            elif c == -1:
                terms.append("-√%d" % d)
            else:
                terms.append("%s√%d" % (c, d))
        if not terms:
            return "0"
        return "+".join(terms).replace("+-", "-")


ZERO = AlgebraicNumber()
ONE = AlgebraicNumber.rational(1)


def _sign(coeffs: tuple[Fraction, ...], bits: int = 64) -> int:
    if not any(coeffs):
        return 0
    if not any(coeffs[1:]):
        return (coeffs[0] > 0) - (coeffs[0] < 0)
    # clear denominators: sign is unchanged by a positive factor
    den = reduce(math.lcm, (c.denominator for c in coeffs), 1)
    nums = [int(c * den) for c in coeffs]
    while True:
        # √d lies in [r, r+1] / 2**bits with r = isqrt(d * 4**bits)
        lo = hi = 0
        for n, d in zip(nums, RADICANDS):
            if not n:
                continue
            if d == 1:
                lo += n << bits
                hi += n << bits
                continue
            r = math.isqrt(d << (2 * bits))
            if n > 0:
                lo += n * r
                hi += n * (r + 1)
            else:
                lo += n * (r + 1)
                hi += n * r
        if lo > 0:
            return 1
        if hi < 0:
            return -1
        bits *= 2


def sign(a: AlgebraicNumber) -> int:
    """Exact sign of ``a``: -1, 0 or +1."""
    return a.sign()


def arith(a: AlgebraicNumber, b: AlgebraicNumber, op: str) -> AlgebraicNumber:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError("unknown operation %r" % op)


_HALF = Fraction(1, 2)

_NEG_COS = {
    1: AlgebraicNumber.rational(1),  # diagonal entries: (alpha_s|alpha_s) = 1
    2: ZERO,
    3: AlgebraicNumber.rational(-_HALF),
    4: AlgebraicNumber.sqrt(2) * (-_HALF),
    5: AlgebraicNumber((Fraction(-1, 4), 0, 0, Fraction(-1, 4), 0, 0, 0, 0)),
    6: AlgebraicNumber.sqrt(3) * (-_HALF),
    INFINITY: AlgebraicNumber.rational(-1),
}


def bilinear_entry(m) -> AlgebraicNumber:
    """The value ``-cos(pi/m)``; ``m=1`` gives 1 and ``m=∞`` (encoded 0) gives -1."""
    if m == math.inf or m is None:
        m = INFINITY
    if m not in _NEG_COS:
        raise UnsupportedOrder("Coxeter matrix entry %r is not in {1,...,6,inf}" % (m,))
    return _NEG_COS[m]
