"""Cocycles, coboundaries and first Galois cohomology checks for tau.

Everything here is a finite exact test.  Parametrized torus families are
checked at sample points: their entries are Laurent polynomials of low degree
in the parameters, so agreement at several generic points is what the
catalog relies on.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Callable, Sequence

from .errors import NotACocycle, NotInSL3, NotReal, SingularSample
from .field import I, ONE, SQRT2, FieldElement, fe
from .linalg import IDENTITY, N, Matrix3, hermitian_signature
from .liealg import Subalgebra, conjugate_subalgebra, span_equal, tau_grp

Params = tuple[FieldElement, ...]


class TorusSigmaType(str, Enum):
    FIX = "fix"
    INV = "inv"
    SWAP_INV = "swap_inv"
    COMPONENTWISE = "componentwise"
    COMPONENTWISE_INV = "componentwise_inv"

    @property
    def arity(self) -> int:
        return 1 if self in (TorusSigmaType.FIX, TorusSigmaType.INV) else 2


def apply_sigma(kind: TorusSigmaType, p: Sequence) -> Params:
    """The parameter tuple q with sigma(chi(p)) = chi(q)."""
    kind = TorusSigmaType(kind)
    p = _as_tuple(p)
    if len(p) != kind.arity:
        raise ValueError(f"{kind.value} acts on {kind.arity} parameter(s), got {len(p)}")
    if any(not x for x in p):
        raise SingularSample("torus parameters must be nonzero")
    c = [x.conjugate() for x in p]
    if kind is TorusSigmaType.FIX:
        return (c[0],)
    if kind is TorusSigmaType.INV:
        return (c[0].inverse(),)
    if kind is TorusSigmaType.SWAP_INV:
        return (c[1].inverse(), c[0].inverse())
    if kind is TorusSigmaType.COMPONENTWISE:
        return (c[0], c[1])
    return (c[0].inverse(), c[1].inverse())


def _as_tuple(z) -> Params:
    if isinstance(z, (tuple, list)):
        return tuple(fe(x) for x in z)
    return (fe(z),)


def is_torus_cocycle(z, kind: TorusSigmaType) -> bool:
    """chi(z) sigma(chi(z)) = 1 in the torus, i.e. z * sigma(z) = (1, ..., 1)."""
    z = _as_tuple(z)
    return all(a * b == ONE for a, b in zip(z, apply_sigma(kind, z)))


@dataclass(frozen=True)
class TorusClass:
    """A class in H^1 of a small torus, named by a sign representative."""

    representative: tuple[int, ...]

    @property
    def trivial(self) -> bool:
        return all(s == 1 for s in self.representative)

    @property
    def label(self) -> str:
        return "trivial" if self.trivial else "nontrivial"

    def __str__(self) -> str:
        if self.trivial:
            return "trivial"
        return "[chi(" + ", ".join(str(s) for s in self.representative) + ")]"


def torus_class(z: Sequence, kind: TorusSigmaType) -> TorusClass:
    """Class of the cocycle chi(z) in H^1 of a 1- or 2-dimensional torus.

    kind fix, swap_inv, componentwise: every cocycle is a coboundary.
    kind inv: z is real and chi(z) ~ chi(sign z), since positive reals are
    norms h*conj(h).  componentwise_inv is the product of two inv tori and
    has four classes, one per sign pattern.
    """
    kind = TorusSigmaType(kind)
    z = _as_tuple(z)
    if not is_torus_cocycle(z, kind):
        raise NotACocycle(f"{tuple(str(x) for x in z)} is not a cocycle for {kind.value}")
    if kind in (TorusSigmaType.FIX, TorusSigmaType.SWAP_INV, TorusSigmaType.COMPONENTWISE):
        return TorusClass((1,) * kind.arity)
    signs = []
    for x in z:
        if not x.is_real():
            raise NotReal(f"{x} should be real for an inv-type cocycle")
        signs.append(x.real_sign())
    return TorusClass(tuple(signs))


def require_sl3(g: Matrix3) -> None:
    if g.det() != ONE:
        raise NotInSL3(f"det = {g.det()}, expected 1")


def is_cocycle(g: Matrix3) -> bool:
    """g tau(g) = 1."""
    require_sl3(g)
    return g @ tau_grp(g) == IDENTITY


def check_coboundary(g: Matrix3, c: Matrix3) -> bool:
    """g^-1 tau(g) = c."""
    return g.inverse() @ tau_grp(g) == c


def sl3_class(c: Matrix3) -> str:
    """'trivial' or 'nontrivial' in H^1(SL3(C), tau).

    For a cocycle c the matrix cN is Hermitian, and replacing c by the
    equivalent g^-1 c tau(g) changes cN by the congruence g^-1 (cN) g^-dagger.
    The identity gives N, of signature (2, 1); diag(-1,-1,1) gives -I.
    """
    if not is_cocycle(c):
        raise NotACocycle("c tau(c) != 1")
    h = c @ N
    p, n, _ = hermitian_signature(h.rows())
    if (p, n) in ((2, 1), (1, 2)):
        return "trivial"
    return "nontrivial"


def check_stabilizer_membership(g: Matrix3, u: Subalgebra) -> bool:
    """g . u = u as spans (complex spans are compared over C)."""
    return span_equal(conjugate_subalgebra(g, u), u)


# -- parametrized torus families --------------------------------------------


@dataclass(frozen=True)
class ParametrizedFamily:
    """A torus S(p) = w diag(embed(p)) w^-1 together with its printed entry formulas.

    ``build`` evaluates the printed matrix; ``embed`` gives the diagonal torus
    element the family is claimed to conjugate; ``claimed`` is the stated
    action of tau on the parameters.
    """

    name: str
    arity: int
    build: Callable[[Params], Matrix3]
    embed: Callable[[Params], tuple[FieldElement, FieldElement, FieldElement]]
    claimed: TorusSigmaType
    conjugator: str | None = None
    constraint: str = ""

    def __call__(self, p: Sequence) -> Matrix3:
        p = tuple(fe(x) for x in p)
        if len(p) != self.arity:
            raise ValueError(f"{self.name} takes {self.arity} parameter(s)")
        if any(not x for x in p):
            raise SingularSample(f"{self.name} is undefined at a zero parameter")
        try:
            return self.build(p)
        except ZeroDivisionError as exc:
            raise SingularSample(f"{self.name} is undefined at {p}") from exc

    def diagonal(self, p: Sequence) -> Matrix3:
        return Matrix3.diag(*self.embed(tuple(fe(x) for x in p)))


def check_family_tau_action(
    fam: ParametrizedFamily, samples: Sequence[Sequence], claim: TorusSigmaType | None = None
) -> bool:
    """tau(fam(p)) = fam(claim(p)) at every sample; claim defaults to the family's own."""
    kind = TorusSigmaType(claim) if claim is not None else fam.claimed
    for p in samples:
        if tau_grp(fam(p)) != fam(apply_sigma(kind, p)):
            return False
    return True


def check_family_multiplicative(fam: ParametrizedFamily, pairs: Sequence[tuple[Sequence, Sequence]]) -> bool:
    """fam(p) fam(q) = fam(p*q) with the componentwise product."""
    for p, q in pairs:
        pq = tuple(fe(a) * fe(b) for a, b in zip(p, q))
        if fam(p) @ fam(q) != fam(pq):
            return False
    return True


def check_family_conjugator(fam: ParametrizedFamily, w: Matrix3, samples: Sequence[Sequence]) -> bool:
    """fam(p) = w diag(embed(p)) w^-1 at every sample."""
    wi = w.inverse()
    return all(fam(p) == w @ fam.diagonal(p) @ wi for p in samples)


def check_transform_involution(kind: TorusSigmaType, samples: Sequence[Sequence]) -> bool:
    return all(apply_sigma(kind, apply_sigma(kind, p)) == tuple(fe(x) for x in p) for p in samples)


DEFAULT_SAMPLES_1: tuple[FieldElement, ...] = (fe(2), fe(3), ONE + I, SQRT2, fe(2) + I)


def default_samples(arity: int) -> list[Params]:
    base = DEFAULT_SAMPLES_1
    if arity == 1:
        return [(x,) for x in base]
    return [(base[k], base[(k + 1) % len(base)]) for k in range(len(base))]


def default_pairs(arity: int) -> list[tuple[Params, Params]]:
    s = default_samples(arity)
    return [(s[k], s[(k + 2) % len(s)]) for k in range(len(s))]
