"""Exact arithmetic in Q(zeta8) = Q(i, sqrt2).

The element type comes from the compiled extension when it is importable and
from the pure-Python module otherwise.  Setting ``SU21_PURE_PYTHON=1`` in the
environment forces the fallback.
"""

from __future__ import annotations

import os
from fractions import Fraction
from math import isqrt

if os.environ.get("SU21_PURE_PYTHON"):
    from ._field_py import BACKEND, FieldElement
else:
    try:
        from ._field_ext import BACKEND, FieldElement
    except ImportError:
        from ._field_py import BACKEND, FieldElement

__all__ = [
    "BACKEND",
    "FieldElement",
    "ZERO",
    "ONE",
    "ZETA",
    "I",
    "SQRT2",
    "fe",
    "parse",
    "invert",
    "conjugate",
    "real_sign",
    "re",
    "im",
    "sqrt_real",
    "to_json",
    "from_json",
]

ZERO = FieldElement(0)
ONE = FieldElement(1)
ZETA = FieldElement(0, 1)
I = ZETA * ZETA
SQRT2 = ZETA - ZETA * ZETA * ZETA
_HALF = FieldElement(Fraction(1, 2))


def fe(x) -> FieldElement:
    """Coerce an int, Fraction or FieldElement."""
    if isinstance(x, FieldElement):
        return x
    if isinstance(x, (int, Fraction)):
        return FieldElement(x)
    if isinstance(x, str):
        return parse(x)
    raise TypeError(f"cannot convert {type(x).__name__} to FieldElement")


_UNITS = {"": ONE, "sqrt2": SQRT2, "i": I, "i*sqrt2": I * SQRT2, "sqrt2*i": I * SQRT2}


def parse(text: str) -> FieldElement:
    """Parse the printed form, e.g. ``"1/2 - 3/4*i*sqrt2"``.

    Accepts sums of terms ``c``, ``c*u`` or ``u`` with u in {sqrt2, i, i*sqrt2}
    and c an integer or a fraction.
    """
    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty field element")
    terms = []
    start = 0
    for k in range(1, len(s) + 1):
        if k == len(s) or s[k] in "+-":
            terms.append(s[start:k])
            start = k
    total = ZERO
    for term in terms:
        sign = -1 if term.startswith("-") else 1
        body = term.lstrip("+-")
        if not body:
            raise ValueError(f"malformed field element {text!r}")
        coeff_part, unit = body, ""
        for name in ("i*sqrt2", "sqrt2*i", "sqrt2", "i"):
            if body == name:
                coeff_part, unit = "1", name
                break
            if body.endswith("*" + name):
                coeff_part, unit = body[: -len(name) - 1], name
                break
        try:
            coeff = Fraction(coeff_part)
        except ValueError:
            raise ValueError(f"malformed field element {text!r}") from None
        total = total + _UNITS[unit] * FieldElement(sign * coeff)
    return total


def invert(a: FieldElement) -> FieldElement:
    return a.inverse()


def conjugate(a: FieldElement) -> FieldElement:
    return a.conjugate()


def real_sign(a: FieldElement) -> int:
    """-1, 0 or 1; raises NotReal for elements not fixed by conjugation."""
    return a.real_sign()


def re(a: FieldElement) -> FieldElement:
    return (a + a.conjugate()) * _HALF


def im(a: FieldElement) -> FieldElement:
    """The real b with a = re(a) + i*b."""
    return (a - a.conjugate()) * _HALF * (-I)


def _rational_sqrt(q: Fraction) -> Fraction | None:
    if q < 0:
        return None
    n, d = q.numerator, q.denominator
    rn, rd = isqrt(n), isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


def sqrt_real(a: FieldElement) -> FieldElement | None:
    """Nonnegative square root inside Q(sqrt2), or None if there is none."""
    sign = a.real_sign()
    if sign < 0:
        return None
    if sign == 0:
        return ZERO
    c0, c1, _, _ = a.coeffs
    # a = x + y*sqrt2 with x = c0, y = c1; want (p + q*sqrt2)^2 = x + y*sqrt2
    x, y = c0, c1
    n = _rational_sqrt(x * x - 2 * y * y)
    if n is None:
        return None
    for p2 in ((x + n) / 2, (x - n) / 2):
        p = _rational_sqrt(p2)
        if p is None:
            continue
        if p == 0:
            q = _rational_sqrt(x / 2)
            if q is None or y != 0:
                continue
        else:
            q = y / (2 * p)
        root = FieldElement(p) + FieldElement(q) * SQRT2
        if root * root == a:
            return root if root.real_sign() >= 0 else -root
    return None


def to_json(a: FieldElement) -> list[list[str]]:
    return [[str(c.numerator), str(c.denominator)] for c in a.coeffs]


def from_json(data) -> FieldElement:
    if len(data) != 4:
        raise ValueError("a field element is four [numerator, denominator] pairs")
    return FieldElement(*(Fraction(int(n), int(d)) for n, d in data))
