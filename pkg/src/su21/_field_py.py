"""Pure-Python arithmetic in Q(zeta), zeta a primitive 8th root of unity.

An element c0 + c1*z + c2*z**2 + c3*z**3 is stored as four integer numerators
over one positive common denominator, reduced so the five integers are coprime.
Reduction uses z**4 = -1.  The compiled backend mirrors this class exactly.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from ._fmt import format_field
from .errors import NotReal

BACKEND = "python"


def _norm5(n0, n1, n2, n3, d):
    if d < 0:
        n0, n1, n2, n3, d = -n0, -n1, -n2, -n3, -d
    g = gcd(n0, n1, n2, n3, d)
    if g != 1:
        n0 //= g
        n1 //= g
        n2 //= g
        n3 //= g
        d //= g
    return n0, n1, n2, n3, d


class FieldElement:
    __slots__ = ("_n0", "_n1", "_n2", "_n3", "_d")

    def __init__(self, c0=0, c1=0, c2=0, c3=0):
        cs = [Fraction(c) for c in (c0, c1, c2, c3)]
        d = 1
        for c in cs:
            d = d * c.denominator // gcd(d, c.denominator)
        n = [c.numerator * (d // c.denominator) for c in cs]
        self._n0, self._n1, self._n2, self._n3, self._d = _norm5(*n, d)

    @classmethod
    def _raw(cls, n0, n1, n2, n3, d):
        obj = object.__new__(cls)
        obj._n0, obj._n1, obj._n2, obj._n3, obj._d = _norm5(n0, n1, n2, n3, d)
        return obj

    @staticmethod
    def _coerce(other):
        if isinstance(other, FieldElement):
            return other
        if isinstance(other, int):
            return FieldElement._raw(other, 0, 0, 0, 1)
        if isinstance(other, Fraction):
            return FieldElement._raw(other.numerator, 0, 0, 0, other.denominator)
        return None

    # -- accessors ---------------------------------------------------------
    @property
    def numerators(self) -> tuple[int, int, int, int]:
        return (self._n0, self._n1, self._n2, self._n3)

    @property
    def denominator(self) -> int:
        return self._d

    @property
    def coeffs(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        d = self._d
        return (Fraction(self._n0, d), Fraction(self._n1, d), Fraction(self._n2, d), Fraction(self._n3, d))

    # -- ring operations ---------------------------------------------------
    def __add__(self, other):
        o = FieldElement._coerce(other)
        if o is None:
            return NotImplemented
        d1, d2 = self._d, o._d
        if d1 == d2:
            return FieldElement._raw(self._n0 + o._n0, self._n1 + o._n1, self._n2 + o._n2, self._n3 + o._n3, d1)
        return FieldElement._raw(
            self._n0 * d2 + o._n0 * d1,
            self._n1 * d2 + o._n1 * d1,
            self._n2 * d2 + o._n2 * d1,
            self._n3 * d2 + o._n3 * d1,
            d1 * d2,
        )

    __radd__ = __add__

    def __neg__(self):
        obj = object.__new__(FieldElement)
        obj._n0, obj._n1, obj._n2, obj._n3, obj._d = -self._n0, -self._n1, -self._n2, -self._n3, self._d
        return obj

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = FieldElement._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = FieldElement._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = FieldElement._coerce(other)
        if o is None:
            return NotImplemented
        a0, a1, a2, a3 = self._n0, self._n1, self._n2, self._n3
        b0, b1, b2, b3 = o._n0, o._n1, o._n2, o._n3
        # z**4 = -1 folds the degree 4..6 terms back with a sign flip
        return FieldElement._raw(
            a0 * b0 - a1 * b3 - a2 * b2 - a3 * b1,
            a0 * b1 + a1 * b0 - a2 * b3 - a3 * b2,
            a0 * b2 + a1 * b1 + a2 * b0 - a3 * b3,
            a0 * b3 + a1 * b2 + a2 * b1 + a3 * b0,
            self._d * o._d,
        )

    __rmul__ = __mul__

    def galois(self, k: int):
        """Image under the automorphism z -> z**k, k odd."""
        k %= 8
        if k == 1:
            return self
        if k == 3:
            return FieldElement._raw(self._n0, self._n3, -self._n2, self._n1, self._d)
        if k == 5:
            return FieldElement._raw(self._n0, -self._n1, self._n2, -self._n3, self._d)
        if k == 7:
            return FieldElement._raw(self._n0, -self._n3, -self._n2, -self._n1, self._d)
        raise ValueError("galois exponent must be odd")

    def conjugate(self):
        """Complex conjugation, z -> z**-1 = -z**3."""
        return FieldElement._raw(self._n0, -self._n3, -self._n2, -self._n1, self._d)

    def norm(self) -> Fraction:
        p = self * self.galois(3) * self.galois(5) * self.galois(7)
        return Fraction(p._n0, p._d)

    def inverse(self):
        if not self:
            raise ZeroDivisionError("inverse of zero in Q(zeta8)")
        rest = self.galois(3) * self.galois(5) * self.galois(7)
        p = self * rest
        # p is rational: p = p._n0 / p._d
        return FieldElement._raw(rest._n0 * p._d, rest._n1 * p._d, rest._n2 * p._d, rest._n3 * p._d, rest._d * p._n0)

    def __truediv__(self, other):
        o = FieldElement._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = FieldElement._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, e: int):
        if not isinstance(e, int):
            return NotImplemented
        base = self if e >= 0 else self.inverse()
        e = abs(e)
        out = FieldElement._raw(1, 0, 0, 0, 1)
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    # -- predicates --------------------------------------------------------
    def __bool__(self):
        return bool(self._n0 or self._n1 or self._n2 or self._n3)

    def is_real(self) -> bool:
        return self._n2 == 0 and self._n1 == -self._n3

    def is_rational(self) -> bool:
        return self._n1 == 0 and self._n2 == 0 and self._n3 == 0

    def real_sign(self) -> int:
        """Sign of a real element under sqrt(2) -> 1.414..., computed exactly."""
        if not self.is_real():
            raise NotReal(f"{self!r} is not fixed by complex conjugation")
        # real elements are n0 + n1*sqrt(2) over d, since z - z**3 = sqrt(2)
        a, b = self._n0, self._n1
        sa = (a > 0) - (a < 0)
        sb = (b > 0) - (b < 0)
        if sa == sb or sb == 0:
            return sa
        if sa == 0:
            return sb
        lhs, rhs = a * a, 2 * b * b
        if lhs == rhs:
            return 0
        return sa if lhs > rhs else sb

    # -- comparison / hashing ----------------------------------------------
    def __eq__(self, other):
        o = FieldElement._coerce(other)
        if o is None:
            return NotImplemented
        return (
            self._d == o._d
            and self._n0 == o._n0
            and self._n1 == o._n1
            and self._n2 == o._n2
            and self._n3 == o._n3
        )

    def __hash__(self):
        if self.is_rational():
            return hash(Fraction(self._n0, self._d))
        return hash((self._n0, self._n1, self._n2, self._n3, self._d))

    def __reduce__(self):
        return (FieldElement._raw, (self._n0, self._n1, self._n2, self._n3, self._d))

    def __str__(self):
        return format_field(self._n0, self._n1, self._n2, self._n3, self._d)

    def __repr__(self):
        return f"FieldElement({', '.join(str(c) for c in self.coeffs)})"
