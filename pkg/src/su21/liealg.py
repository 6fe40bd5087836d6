"""sl3(C), su(2,1), the conjugation tau, and spans of traceless matrices."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from types import MappingProxyType
from typing import Iterable, Mapping, Sequence

from .errors import DomainMismatch, Singular
from .field import I, ONE, FieldElement, fe, to_json
from .linalg import N, CoordMatrix, Domain, Matrix3

E = Matrix3.unit
_HALF = FieldElement(Fraction(1, 2))

A_BASIS: tuple[Matrix3, ...] = (
    Matrix3.diag(I, -I, 0),
    Matrix3.diag(0, I, -I),
    E(1, 2) - E(2, 1),
    (E(1, 2) + E(2, 1)).scale(I),
    E(1, 3) + E(3, 1),
    (E(1, 3) - E(3, 1)).scale(I),
    E(2, 3) + E(3, 2),
    (E(2, 3) - E(3, 2)).scale(I),
)

H_ALPHA = Matrix3.diag(1, -1, 0)
H_BETA = Matrix3.diag(0, 1, -1)
X_ALPHA = E(1, 2)
X_BETA = E(2, 3)
X_ALPHA_BETA = -E(1, 3)
Y_ALPHA = E(2, 1)
Y_BETA = E(3, 2)
Y_ALPHA_BETA = -E(3, 1)

CHEVALLEY_NAMES = ("H_alpha", "H_beta", "X_alpha", "X_beta", "X_alpha_beta", "Y_alpha", "Y_beta", "Y_alpha_beta")
CHEVALLEY: tuple[Matrix3, ...] = (
    H_ALPHA,
    H_BETA,
    X_ALPHA,
    X_BETA,
    X_ALPHA_BETA,
    Y_ALPHA,
    Y_BETA,
    Y_ALPHA_BETA,
)


def bracket(x: Matrix3, y: Matrix3) -> Matrix3:
    return x @ y - y @ x


def tau_alg(x: Matrix3) -> Matrix3:
    """x -> -N conj(x)^t N^-1 (N is its own inverse)."""
    return -(N @ x.dagger() @ N)


def tau_grp(g: Matrix3) -> Matrix3:
    """g -> N conj(g)^-t N^-1."""
    return N @ g.dagger().inverse() @ N


def in_su21_algebra(x: Matrix3) -> bool:
    return not x.trace() and tau_alg(x) == x


def in_su21_group(g: Matrix3) -> bool:
    return g.det() == ONE and g.dagger() @ N @ g == N


def from_a_coords(c: Sequence) -> Matrix3:
    out = Matrix3.zero()
    for k, ck in enumerate(c):
        ck = fe(ck)
        if ck:
            out = out + A_BASIS[k].scale(ck)
    return out


def from_chevalley_coords(c: Sequence) -> Matrix3:
    out = Matrix3.zero()
    for k, ck in enumerate(c):
        ck = fe(ck)
        if ck:
            out = out + CHEVALLEY[k].scale(ck)
    return out


def a_coords(m: Matrix3) -> tuple[FieldElement, ...]:
    """Complex coordinates of a traceless matrix in the a-basis."""
    mi = -I
    return (
        mi * m[0, 0],
        mi * (m[0, 0] + m[1, 1]),
        (m[0, 1] - m[1, 0]) * _HALF,
        mi * (m[0, 1] + m[1, 0]) * _HALF,
        (m[0, 2] + m[2, 0]) * _HALF,
        mi * (m[0, 2] - m[2, 0]) * _HALF,
        (m[1, 2] + m[2, 1]) * _HALF,
        mi * (m[1, 2] - m[2, 1]) * _HALF,
    )


def chevalley_coords(m: Matrix3) -> tuple[FieldElement, ...]:
    return (
        m[0, 0],
        m[0, 0] + m[1, 1],
        m[0, 1],
        m[1, 2],
        -m[0, 2],
        m[1, 0],
        m[2, 1],
        -m[2, 0],
    )


def conjugate_element(g: Matrix3, x: Matrix3, g_inv: Matrix3 | None = None) -> Matrix3:
    return g @ x @ (g_inv if g_inv is not None else g.inverse())


@dataclass(frozen=True, eq=False)
class Subalgebra:
    """A span of traceless matrices over the real or complex scalars.

    Real spans are compared in a-coordinates, complex spans in Chevalley
    coordinates.  The reduced form is computed once and cached.
    """

    span: tuple[Matrix3, ...]
    scalar_domain: Domain = "real"
    label: str = ""
    parameters: Mapping[str, FieldElement] = field(default_factory=dict)

    def __post_init__(self):
        span = tuple(self.span)
        for x in span:
            if x.trace():
                raise ValueError("subalgebra elements must be traceless")
        object.__setattr__(self, "span", span)
        object.__setattr__(self, "parameters", MappingProxyType(dict(self.parameters)))
        if self.scalar_domain not in ("real", "complex"):
            raise ValueError(f"unknown scalar domain {self.scalar_domain!r}")

    def _coords(self, x: Matrix3) -> tuple[FieldElement, ...]:
        return a_coords(x) if self.scalar_domain == "real" else chevalley_coords(x)

    @property
    def canonical(self) -> tuple[tuple[FieldElement, ...], ...]:
        cached = self.__dict__.get("_canonical")
        if cached is None:
            red, _ = CoordMatrix(tuple(self._coords(x) for x in self.span), self.scalar_domain).rref()
            cached = red.rows
            object.__setattr__(self, "_canonical", cached)
        return cached

    @property
    def dim(self) -> int:
        return len(self.canonical)

    def basis(self) -> tuple[Matrix3, ...]:
        """A reduced basis; over the real domain every element is in su(2,1) when the span is."""
        build = from_a_coords if self.scalar_domain == "real" else from_chevalley_coords
        return tuple(build(r) for r in self.canonical)

    def contains(self, x: Matrix3) -> bool:
        rows = self.canonical + (self._coords(x),)
        return CoordMatrix(rows, self.scalar_domain).rank() == self.dim

    def with_domain(self, scalar_domain: Domain) -> Subalgebra:
        return Subalgebra(self.span, scalar_domain, self.label, self.parameters)

    def complexify(self) -> Subalgebra:
        return self.with_domain("complex")

    def relabel(self, label: str) -> Subalgebra:
        return Subalgebra(self.span, self.scalar_domain, label, self.parameters)

    def to_json(self) -> dict:
        return {
            "label": self.label,
            "scalar_domain": self.scalar_domain,
            "span": [x.to_json() for x in self.span],
            "parameters": {k: to_json(v) for k, v in sorted(self.parameters.items())},
        }


def span_of(vectors: Iterable[Matrix3], scalar_domain: Domain = "real", label: str = "") -> Subalgebra:
    return Subalgebra(tuple(vectors), scalar_domain, label)


def conjugate_subalgebra(g: Matrix3, u: Subalgebra) -> Subalgebra:
    """g . u = g u g^-1."""
    if not g.det():
        raise Singular("conjugating matrix is singular")
    gi = g.inverse()
    return Subalgebra(tuple(g @ x @ gi for x in u.span), u.scalar_domain, u.label, u.parameters)


def tau_subalgebra(u: Subalgebra) -> Subalgebra:
    return Subalgebra(tuple(tau_alg(x) for x in u.span), u.scalar_domain, u.label, u.parameters)


def span_equal(u: Subalgebra, v: Subalgebra) -> bool:
    if u.scalar_domain != v.scalar_domain:
        raise DomainMismatch(f"cannot compare a {u.scalar_domain} span with a {v.scalar_domain} span")
    return u.canonical == v.canonical


def is_closed(u: Subalgebra) -> tuple[bool, list[tuple[int, int]]]:
    """Whether every bracket of basis elements stays in the span; lists failing index pairs."""
    basis = u.basis()
    violations = []
    for j in range(len(basis)):
        for k in range(j + 1, len(basis)):
            if not u.contains(bracket(basis[j], basis[k])):
                violations.append((j, k))
    return not violations, violations


def is_real_span(u: Subalgebra) -> bool:
    """tau maps the span onto itself."""
    return span_equal(tau_subalgebra(u), u)


def real_form(u: Subalgebra) -> Subalgebra:
    """The real span of the tau-fixed part of a tau-stable complex span."""
    vecs = []
    for x in u.span:
        t = tau_alg(x)
        vecs.append(x + t)
        vecs.append((x - t).scale(I))
    return Subalgebra(tuple(vecs), "real", u.label, u.parameters)


__all__ = [
    "A_BASIS",
    "CHEVALLEY",
    "CHEVALLEY_NAMES",
    "H_ALPHA",
    "H_BETA",
    "X_ALPHA",
    "X_BETA",
    "X_ALPHA_BETA",
    "Y_ALPHA",
    "Y_BETA",
    "Y_ALPHA_BETA",
    "Subalgebra",
    "a_coords",
    "bracket",
    "chevalley_coords",
    "conjugate_element",
    "conjugate_subalgebra",
    "from_a_coords",
    "from_chevalley_coords",
    "in_su21_algebra",
    "in_su21_group",
    "is_closed",
    "is_real_span",
    "real_form",
    "span_equal",
    "span_of",
    "tau_alg",
    "tau_grp",
    "tau_subalgebra",
]
