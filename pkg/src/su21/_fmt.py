from __future__ import annotations

from fractions import Fraction


def _term(c: Fraction, unit: str) -> str:
    if unit == "":
        return str(c)
    if c == 1:
        return unit
    if c == -1:
        return "-" + unit
    return f"{c}*{unit}"


def format_field(n0: int, n1: int, n2: int, n3: int, d: int) -> str:
    """Render in the basis 1, sqrt2, i, i*sqrt2 (z = (1+i)/sqrt2)."""
    r = Fraction(n0, d)
    s = Fraction(n1 - n3, 2 * d)
    t = Fraction(n2, d)
    u = Fraction(n1 + n3, 2 * d)
    parts = [_term(c, unit) for c, unit in ((r, ""), (s, "sqrt2"), (t, "i"), (u, "i*sqrt2")) if c]
    if not parts:
        return "0"
    out = parts[0]
    for p in parts[1:]:
        out += " - " + p[1:] if p.startswith("-") else " + " + p
    return out
