"""Bounded search for a conjugating element of SU(2,1) between two real spans."""

from __future__ import annotations

from functools import lru_cache

from ..catalog.witnesses import SEARCH_GENERATORS, matrix
from ..linalg import IDENTITY, Matrix3
from ..liealg import Subalgebra, in_su21_group, span_equal

Word = tuple[str, ...]


@lru_cache(maxsize=None)
def _alphabet() -> tuple[tuple[str, Matrix3], ...]:
    """Generators followed by their inverses, dropping repeated matrices."""
    seen: dict[Matrix3, str] = {}
    out = []
    for name in SEARCH_GENERATORS:
        g = matrix(name)
        for label, m in ((name, g), (name + "^-1", g.inverse())):
            if m not in seen:
                seen[m] = label
                out.append((label, m))
    return tuple(out)


@lru_cache(maxsize=None)
def _level(depth: int) -> tuple[tuple[Word, Matrix3], ...]:
    """Words of exactly this length giving matrices not reached by shorter words."""
    if depth == 0:
        return (((), IDENTITY),)
    shorter = {m for d in range(depth) for _, m in _level(d)}
    out = []
    seen = set()
    for word, m in _level(depth - 1):
        for label, g in _alphabet():
            p = m @ g
            if p in shorter or p in seen:
                continue
            seen.add(p)
            out.append((word + (label,), p))
    return tuple(out)


@lru_cache(maxsize=None)
def candidates(depth: int) -> tuple[tuple[Word, Matrix3, Matrix3], ...]:
    """(word, g, g^-1) for every element of SU(2,1) reachable in at most ``depth`` steps."""
    out = []
    for d in range(depth + 1):
        for word, m in _level(d):
            if in_su21_group(m):
                out.append((word, m, m.inverse()))
    return tuple(out)


def _proportional(x: Matrix3, y: Matrix3) -> bool:
    ex, ey = x.entries, y.entries
    k = next((j for j, v in enumerate(ey) if v), None)
    if k is None or not ex[k]:
        return False
    r = ex[k] / ey[k]
    return all(a == r * b for a, b in zip(ex, ey))


def search_with_word(src: Subalgebra, dst: Subalgebra, depth: int) -> tuple[Word, Matrix3] | None:
    if src.dim != dst.dim:
        return None
    line = src.dim == 1
    if line:
        x, y = src.basis()[0], dst.basis()[0]
    for word, g, gi in candidates(depth):
        if line:
            if _proportional(g @ x @ gi, y):
                return word, g
        elif span_equal(Subalgebra(tuple(g @ v @ gi for v in src.span), src.scalar_domain), dst):
            return word, g
    return None


def search_equivalence_witness(src: Subalgebra, dst: Subalgebra, depth: int) -> Matrix3 | None:
    """First g in SU(2,1), by word length then generator order, with g.src = dst."""
    found = search_with_word(src, dst, depth)
    return found[1] if found else None


def format_word(word: Word) -> str:
    return "*".join(word) if word else "I"
