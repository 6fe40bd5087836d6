# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled twin of ``su21._field_py``.

Elements whose five integers all fit below 2**30 keep machine-word copies, so
products of two such elements (sums of four terms below 2**60) cannot overflow
int64.  Anything larger is carried as Python ints.
"""

from fractions import Fraction
from math import gcd as _pygcd

from su21._fmt import format_field
from su21.errors import NotReal

BACKEND = "cython"

cdef long long _SMALL = 1 << 30


cdef inline long long _llabs(long long x):
    return -x if x < 0 else x


cdef inline long long _cgcd(long long a, long long b):
    cdef long long t
    a = _llabs(a)
    b = _llabs(b)
    while b:
        t = a % b
        a = b
        b = t
    return a


cdef inline bint _fits(long long x):
    return -_SMALL < x < _SMALL


cdef FieldElement _from_c(long long n0, long long n1, long long n2, long long n3, long long d):
    cdef long long g
    cdef FieldElement obj
    if d < 0:
        n0 = -n0
        n1 = -n1
        n2 = -n2
        n3 = -n3
        d = -d
    g = _cgcd(_cgcd(_cgcd(n0, n1), _cgcd(n2, n3)), d)
    if g > 1:
        n0 //= g
        n1 //= g
        n2 //= g
        n3 //= g
        d //= g
    obj = FieldElement.__new__(FieldElement)
    if _fits(n0) and _fits(n1) and _fits(n2) and _fits(n3) and _fits(d):
        obj._small = True
        obj._s0 = n0
        obj._s1 = n1
        obj._s2 = n2
        obj._s3 = n3
        obj._sd = d
    else:
        obj._small = False
        obj._n0 = n0
        obj._n1 = n1
        obj._n2 = n2
        obj._n3 = n3
        obj._d = d
    return obj


cdef FieldElement _from_py(object n0, object n1, object n2, object n3, object d):
    cdef FieldElement obj
    if d < 0:
        n0, n1, n2, n3, d = -n0, -n1, -n2, -n3, -d
    g = _pygcd(n0, n1, n2, n3, d)
    if g != 1:
        n0 //= g
        n1 //= g
        n2 //= g
        n3 //= g
        d //= g
    lim = _SMALL
    if -lim < n0 < lim and -lim < n1 < lim and -lim < n2 < lim and -lim < n3 < lim and d < lim:
        obj = FieldElement.__new__(FieldElement)
        obj._small = True
        obj._s0 = n0
        obj._s1 = n1
        obj._s2 = n2
        obj._s3 = n3
        obj._sd = d
        return obj
    obj = FieldElement.__new__(FieldElement)
    obj._small = False
    obj._n0 = n0
    obj._n1 = n1
    obj._n2 = n2
    obj._n3 = n3
    obj._d = d
    return obj


cdef inline tuple _ints(FieldElement x):
    if x._small:
        return (x._s0, x._s1, x._s2, x._s3, x._sd)
    return (x._n0, x._n1, x._n2, x._n3, x._d)


cdef FieldElement _coerce(object other):
    if isinstance(other, FieldElement):
        return <FieldElement>other
    if isinstance(other, int):
        return _from_py(other, 0, 0, 0, 1)
    if isinstance(other, Fraction):
        return _from_py(other.numerator, 0, 0, 0, other.denominator)
    return None


def _unpickle(n0, n1, n2, n3, d):
    return _from_py(n0, n1, n2, n3, d)


cdef FieldElement _add(FieldElement a, FieldElement b):
    if a._small and b._small:
        if a._sd == b._sd:
            return _from_c(a._s0 + b._s0, a._s1 + b._s1, a._s2 + b._s2, a._s3 + b._s3, a._sd)
        return _from_c(
            a._s0 * b._sd + b._s0 * a._sd,
            a._s1 * b._sd + b._s1 * a._sd,
            a._s2 * b._sd + b._s2 * a._sd,
            a._s3 * b._sd + b._s3 * a._sd,
            a._sd * b._sd,
        )
    a0, a1, a2, a3, ad = _ints(a)
    b0, b1, b2, b3, bd = _ints(b)
    return _from_py(a0 * bd + b0 * ad, a1 * bd + b1 * ad, a2 * bd + b2 * ad, a3 * bd + b3 * ad, ad * bd)


cdef FieldElement _neg(FieldElement a):
    if a._small:
        return _from_c(-a._s0, -a._s1, -a._s2, -a._s3, a._sd)
    return _from_py(-a._n0, -a._n1, -a._n2, -a._n3, a._d)


cdef FieldElement _mul(FieldElement a, FieldElement b):
    cdef long long a0, a1, a2, a3, b0, b1, b2, b3
    if a._small and b._small:
        a0 = a._s0
        a1 = a._s1
        a2 = a._s2
        a3 = a._s3
        b0 = b._s0
        b1 = b._s1
        b2 = b._s2
        b3 = b._s3
        return _from_c(
            a0 * b0 - a1 * b3 - a2 * b2 - a3 * b1,
            a0 * b1 + a1 * b0 - a2 * b3 - a3 * b2,
            a0 * b2 + a1 * b1 + a2 * b0 - a3 * b3,
            a0 * b3 + a1 * b2 + a2 * b1 + a3 * b0,
            a._sd * b._sd,
        )
    x0, x1, x2, x3, xd = _ints(a)
    y0, y1, y2, y3, yd = _ints(b)
    return _from_py(
        x0 * y0 - x1 * y3 - x2 * y2 - x3 * y1,
        x0 * y1 + x1 * y0 - x2 * y3 - x3 * y2,
        x0 * y2 + x1 * y1 + x2 * y0 - x3 * y3,
        x0 * y3 + x1 * y2 + x2 * y1 + x3 * y0,
        xd * yd,
    )


cdef FieldElement _galois(FieldElement a, int k):
    n0, n1, n2, n3, d = _ints(a)
    if k == 3:
        return _from_py(n0, n3, -n2, n1, d)
    if k == 5:
        return _from_py(n0, -n1, n2, -n3, d)
    if k == 7:
        return _from_py(n0, -n3, -n2, -n1, d)
    return a


cdef class FieldElement:
    cdef bint _small
    cdef long long _s0, _s1, _s2, _s3, _sd
    cdef object _n0, _n1, _n2, _n3, _d

    def __init__(self, c0=0, c1=0, c2=0, c3=0):
        cs = [Fraction(c) for c in (c0, c1, c2, c3)]
        d = 1
        for c in cs:
            d = d * c.denominator // _pygcd(d, c.denominator)
        n = [c.numerator * (d // c.denominator) for c in cs]
        cdef FieldElement tmp = _from_py(n[0], n[1], n[2], n[3], d)
        self._small = tmp._small
        self._s0, self._s1, self._s2, self._s3, self._sd = tmp._s0, tmp._s1, tmp._s2, tmp._s3, tmp._sd
        self._n0, self._n1, self._n2, self._n3, self._d = tmp._n0, tmp._n1, tmp._n2, tmp._n3, tmp._d

    @classmethod
    def _raw(cls, n0, n1, n2, n3, d):
        return _from_py(n0, n1, n2, n3, d)

    @property
    def numerators(self):
        return _ints(self)[:4]

    @property
    def denominator(self):
        return _ints(self)[4]

    @property
    def coeffs(self):
        n0, n1, n2, n3, d = _ints(self)
        return (Fraction(n0, d), Fraction(n1, d), Fraction(n2, d), Fraction(n3, d))

    def __add__(self, other):
        cdef FieldElement o = _coerce(other)
        if o is None:
            return NotImplemented
        return _add(self, o)

    def __radd__(self, other):
        cdef FieldElement o = _coerce(other)
        if o is None:
            return NotImplemented
        return _add(o, self)

    def __neg__(self):
        return _neg(self)

    def __pos__(self):
        return self

    def __sub__(self, other):
        cdef FieldElement o = _coerce(other)
        if o is None:
            return NotImplemented
        return _add(self, _neg(o))

    def __rsub__(self, other):
        cdef FieldElement o = _coerce(other)
        if o is None:
            return NotImplemented
        return _add(o, _neg(self))

    def __mul__(self, other):
        cdef FieldElement o = _coerce(other)
        if o is None:
            return NotImplemented
        return _mul(self, o)

    def __rmul__(self, other):
        cdef FieldElement o = _coerce(other)
        if o is None:
            return NotImplemented
        return _mul(o, self)

    def galois(self, int k):
        k %= 8
        if k % 2 == 0:
            raise ValueError("galois exponent must be odd")
        return _galois(self, k)

    def conjugate(self):
        return _galois(self, 7)

    def norm(self):
        cdef FieldElement p = _mul(_mul(_mul(self, _galois(self, 3)), _galois(self, 5)), _galois(self, 7))
        n0, _, _, _, d = _ints(p)
        return Fraction(n0, d)

    def inverse(self):
        if not self:
            raise ZeroDivisionError("inverse of zero in Q(zeta8)")
        cdef FieldElement rest = _mul(_mul(_galois(self, 3), _galois(self, 5)), _galois(self, 7))
        cdef FieldElement p = _mul(self, rest)
        r0, r1, r2, r3, rd = _ints(rest)
        p0, _, _, _, pd = _ints(p)
        return _from_py(r0 * pd, r1 * pd, r2 * pd, r3 * pd, rd * p0)

    def __truediv__(self, other):
        cdef FieldElement o = _coerce(other)
        if o is None:
            return NotImplemented
        return _mul(self, o.inverse())

    def __rtruediv__(self, other):
        cdef FieldElement o = _coerce(other)
        if o is None:
            return NotImplemented
        return _mul(o, self.inverse())

    def __pow__(self, e, mod):
        if mod is not None or not isinstance(e, int):
            return NotImplemented
        cdef FieldElement base = self if e >= 0 else self.inverse()
        cdef FieldElement out = _from_c(1, 0, 0, 0, 1)
        e = abs(e)
        while e:
            if e & 1:
                out = _mul(out, base)
            base = _mul(base, base)
            e >>= 1
        return out

    def __bool__(self):
        if self._small:
            return self._s0 != 0 or self._s1 != 0 or self._s2 != 0 or self._s3 != 0
        return bool(self._n0 or self._n1 or self._n2 or self._n3)

    def is_real(self):
        n0, n1, n2, n3, d = _ints(self)
        return n2 == 0 and n1 == -n3

    def is_rational(self):
        n0, n1, n2, n3, d = _ints(self)
        return n1 == 0 and n2 == 0 and n3 == 0

    def real_sign(self):
        if not self.is_real():
            raise NotReal(f"{self!r} is not fixed by complex conjugation")
        a, b, _, _, _ = _ints(self)
        sa = (a > 0) - (a < 0)
        sb = (b > 0) - (b < 0)
        if sa == sb or sb == 0:
            return sa
        if sa == 0:
            return sb
        lhs = a * a
        rhs = 2 * b * b
        if lhs == rhs:
            return 0
        return sa if lhs > rhs else sb

    def __eq__(self, other):
        cdef FieldElement o = _coerce(other)
        if o is None:
            return NotImplemented
        if self._small and o._small:
            return (self._sd == o._sd and self._s0 == o._s0 and self._s1 == o._s1
                    and self._s2 == o._s2 and self._s3 == o._s3)
        return _ints(self) == _ints(o)

    def __ne__(self, other):
        r = self.__eq__(other)
        if r is NotImplemented:
            return r
        return not r

    def __hash__(self):
        n0, n1, n2, n3, d = _ints(self)
        if n1 == 0 and n2 == 0 and n3 == 0:
            return hash(Fraction(n0, d))
        return hash((n0, n1, n2, n3, d))

    def __reduce__(self):
        return (_unpickle, _ints(self))

    def __str__(self):
        return format_field(*_ints(self))

    def __repr__(self):
        return f"FieldElement({', '.join(str(c) for c in self.coeffs)})"
