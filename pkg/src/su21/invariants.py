"""Conjugation invariants of real subalgebras, used to certify non-equivalence.

Everything is computed exactly.  A structure-constant table is built in real
coordinates (coefficients in Q(sqrt2)) and all series, centers and Killing
forms come from it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import NotClosed
from .field import I, ZERO, FieldElement, fe, im, re, sqrt_real
from .linalg import IDENTITY, N, Matrix3, hermitian_signature, nullspace, rank, solve_in_span
from .liealg import Subalgebra, a_coords, bracket, from_a_coords, is_closed

STRUCTURE_CLASSES = ("abelian", "nilpotent", "solvable", "semisimple", "levi_decomposable", "other")


def _real_vec(m: Matrix3) -> list[FieldElement]:
    out = []
    for c in a_coords(m):
        out.append(re(c))
        out.append(im(c))
    return out


def _from_real_vec(v: Sequence[FieldElement]) -> Matrix3:
    return from_a_coords([v[2 * k] + I * v[2 * k + 1] for k in range(8)])


def _independent(vectors: Sequence[Sequence[FieldElement]]) -> list[list[FieldElement]]:
    """A maximal independent subset, in order."""
    kept: list[list[FieldElement]] = []
    for v in vectors:
        if any(v) and rank(kept + [list(v)]) > len(kept):
            kept.append(list(v))
    return kept


def _bracket_span(a: Sequence[Matrix3], b: Sequence[Matrix3]) -> list[Matrix3]:
    vecs = _independent([_real_vec(bracket(x, y)) for x in a for y in b])
    return [_from_real_vec(v) for v in vecs]


class _Structure:
    """Basis and structure constants of a closed real span."""

    def __init__(self, u: Subalgebra):
        if u.scalar_domain != "real":
            raise ValueError("invariants are defined for real spans")
        ok, bad = is_closed(u)
        if not ok:
            raise NotClosed(f"span is not closed under the bracket; failing pairs {bad}")
        self.basis = list(u.basis())
        self.vecs = [_real_vec(x) for x in self.basis]
        n = len(self.basis)
        # c[j][k] = coordinates of [b_j, b_k] in the basis
        self.c = [[None] * n for _ in range(n)]
        for j in range(n):
            for k in range(n):
                coeffs = solve_in_span(self.vecs, _real_vec(bracket(self.basis[j], self.basis[k])))
                assert coeffs is not None
                self.c[j][k] = coeffs

    @property
    def dim(self) -> int:
        return len(self.basis)

    def ad(self, j: int) -> list[list[FieldElement]]:
        """Matrix of ad b_j: column k holds the coordinates of [b_j, b_k]."""
        n = self.dim
        return [[self.c[j][k][l] for k in range(n)] for l in range(n)]

    def killing(self) -> list[list[FieldElement]]:
        n = self.dim
        ads = [self.ad(j) for j in range(n)]
        out = [[ZERO] * n for _ in range(n)]
        for j in range(n):
            for k in range(j, n):
                t = ZERO
                a, b = ads[j], ads[k]
                for r in range(n):
                    for s in range(n):
                        if a[r][s] and b[s][r]:
                            t = t + a[r][s] * b[s][r]
                out[j][k] = out[k][j] = t
        return out

    def center_dim(self) -> int:
        n = self.dim
        if not n:
            return 0
        rows = [[self.c[j][k][l] for j in range(n)] for k in range(n) for l in range(n)]
        return len(nullspace(rows, n))


def _signature(form: list[list[FieldElement]]) -> tuple[int, int, int]:
    if not form:
        return (0, 0, 0)
    return hermitian_signature(form)


@dataclass(frozen=True)
class Fingerprint:
    dim: int
    derived_dims: tuple[int, ...]
    lower_central_dims: tuple[int, ...]
    center_dim: int
    killing_signature: tuple[int, int, int]
    structure_class: str
    trace_form_signature: tuple[int, int, int]
    kernel_dim: int

    def to_json(self) -> dict:
        return {
            "dim": self.dim,
            "derived_dims": list(self.derived_dims),
            "lower_central_dims": list(self.lower_central_dims),
            "center_dim": self.center_dim,
            "killing_signature": list(self.killing_signature),
            "structure_class": self.structure_class,
            "trace_form_signature": list(self.trace_form_signature),
            "kernel_dim": self.kernel_dim,
        }

    def differences(self, other: Fingerprint) -> list[str]:
        return [k for k in self.to_json() if getattr(self, k) != getattr(other, k)]


def _series(basis: list[Matrix3], lower: bool) -> tuple[int, ...]:
    dims = [len(basis)]
    cur = basis
    while cur:
        nxt = _bracket_span(basis if lower else cur, cur)
        if len(nxt) == len(cur):
            break
        dims.append(len(nxt))
        cur = nxt
    return tuple(dims)


def fingerprint(u: Subalgebra) -> Fingerprint:
    s = _Structure(u)
    n = s.dim
    derived = _series(s.basis, lower=False)
    lower = _series(s.basis, lower=True)
    kill = s.killing()
    ksig = _signature(kill)
    trace_form = [[(x @ y).trace() for y in s.basis] for x in s.basis]
    tsig = _signature(trace_form)
    kernel = len(nullspace([r for x in s.basis for r in x.rows()], 3)) if n else 3

    solvable = derived[-1] == 0
    if n == 0 or (solvable and derived[1:2] == (0,)):
        cls = "abelian"
    elif solvable and lower[-1] == 0:
        cls = "nilpotent"
    elif solvable:
        cls = "solvable"
    elif ksig[2] == 0:
        cls = "semisimple"
    else:
        # the radical is the Killing-orthogonal complement of [u, u]
        d = [_real_vec(x) for x in _bracket_span(s.basis, s.basis)]
        dcoords = [solve_in_span(s.vecs, v) for v in d]
        rows = [[sum((kill[j][k] * dc[k] for k in range(n)), ZERO) for j in range(n)] for dc in dcoords]
        rad = len(nullspace(rows, n))
        cls = "levi_decomposable" if 0 < rad < n else "other"
    return Fingerprint(n, derived, lower, s.center_dim(), ksig, cls, tsig, kernel)


# -- one-dimensional spans --------------------------------------------------


@dataclass(frozen=True)
class ScalingMatch:
    """Real c with charpoly(y)(t) = c^3 charpoly(x)(t / c).

    ``exists`` is decided exactly over the reals.  ``factors`` lists the
    solutions that lie in Q(sqrt2); when both elements are nilpotent every
    nonzero c works and ``any_scalar`` is set.
    """

    factors: frozenset
    exists: bool
    any_scalar: bool = False

    def __bool__(self) -> bool:
        return self.exists

    def __contains__(self, c) -> bool:
        c = fe(c)
        if self.any_scalar:
            return bool(c) and c.is_real()
        return c in self.factors

    def __iter__(self):
        return iter(sorted(self.factors, key=lambda x: (x.coeffs[0], x.coeffs[1])))


def _rational_cube_root(x: FieldElement) -> FieldElement | None:
    if not x.is_rational():
        return None
    q = Fraction(x.coeffs[0])
    out = []
    for v in (abs(q.numerator), q.denominator):
        r = round(v ** (1 / 3))
        r = next((c for c in (r - 1, r, r + 1) if c >= 0 and c**3 == v), None)
        if r is None:
            return None
        out.append(r)
    root = FieldElement(Fraction(out[0], out[1]))
    return -root if q < 0 else root


def eigenvalue_scaling_match(x: Matrix3, y: Matrix3) -> ScalingMatch:
    _, p1x, p0x = x.charpoly()
    _, p1y, p0y = y.charpoly()
    nil_x = not p1x and not p0x
    nil_y = not p1y and not p0y
    if nil_x or nil_y:
        return ScalingMatch(frozenset(), nil_x and nil_y, nil_x and nil_y)
    if bool(p1x) != bool(p1y) or bool(p0x) != bool(p0y):
        return ScalingMatch(frozenset(), False)
    if p1x and p0x:
        r1 = p1y / p1x
        c = (p0y / p0x) / r1
        if c.is_real() and c * c == r1:
            return ScalingMatch(frozenset({c}), True)
        return ScalingMatch(frozenset(), False)
    if p1x:
        r1 = p1y / p1x
        if not r1.is_real() or r1.real_sign() <= 0:
            return ScalingMatch(frozenset(), False)
        root = sqrt_real(r1)
        return ScalingMatch(frozenset({root, -root}) if root is not None else frozenset(), True)
    r0 = p0y / p0x
    if not r0.is_real():
        return ScalingMatch(frozenset(), False)
    root = _rational_cube_root(r0)
    return ScalingMatch(frozenset({root}) if root is not None else frozenset(), True)


def _mat_rank(m: Matrix3) -> int:
    return rank(m.rows())


def _hermitian_on(vectors: list[list[FieldElement]]) -> tuple[int, int, int]:
    nv = [[N[i, i] * v[i] for i in range(3)] for v in vectors]
    form = [[sum((a[i].conjugate() * b[i] for i in range(3)), ZERO) for b in nv] for a in vectors]
    return hermitian_signature(form)


def line_invariants(x: Matrix3) -> dict:
    """Invariants of the real line spanned by x under SU(2,1) conjugation.

    Each entry is unchanged when x is replaced by c g x g^-1 with c real and
    nonzero and g in SU(2,1).
    """
    _, p1, p0 = x.charpoly()
    out: dict = {"rank": _mat_rank(x), "rank_sq": _mat_rank(x @ x)}
    if p1 and not p0:
        v = nullspace(x.rows(), 3)[0]
        vv = sum(((N[i, i] * v[i].conjugate() * v[i]) for i in range(3)), ZERO)
        out["kernel_sign"] = vv.real_sign()
    disc = -(fe(4) * p1 * p1 * p1 + fe(27) * p0 * p0)
    if p1 and not disc:
        r = fe(-3) * p0 / (fe(2) * p1)
        s = fe(-2) * r
        shifted = x - IDENTITY.scale(r)
        out["double_root_rank"] = _mat_rank(shifted)
        out["double_root_form"] = _hermitian_on(nullspace((shifted @ shifted).rows(), 3))
        if out["double_root_rank"] == 2:
            if im(s).real_sign() < 0 or (not im(s) and re(s).real_sign() < 0):
                x, r, s = -x, -r, -s
                shifted = x - IDENTITY.scale(r)
            proj = (shifted @ shifted).scale(((s - r) * (s - r)).inverse())
            semisimple = proj.scale(s) + (IDENTITY - proj).scale(r)
            nil = x - semisimple
            out["nilpotent_sign"] = (N @ nil).scale(I).trace().real_sign()
    return out


def separate_lines(x: Matrix3, y: Matrix3) -> str | None:
    """A reason the lines <x> and <y> are not SU(2,1)-conjugate, or None."""
    if not eigenvalue_scaling_match(x, y):
        return "eigenvalues are not real multiples of each other"
    ix, iy = line_invariants(x), line_invariants(y)
    for key in sorted(set(ix) | set(iy)):
        if ix.get(key) != iy.get(key):
            return f"{key}: {ix.get(key)} vs {iy.get(key)}"
    return None


# -- two-dimensional nonabelian spans ---------------------------------------


def nonabelian_pair_invariant(u: Subalgebra) -> tuple[FieldElement, FieldElement]:
    """Charpoly (p1, p0) of the element x with [x, y] = y, where <y> = [u, u].

    x is determined up to adding multiples of y, and x + t y is conjugate to x
    by exp(t y), so the charpoly is an invariant of u.
    """
    s = _Structure(u)
    if s.dim != 2:
        raise ValueError("expected a two-dimensional span")
    derived = _bracket_span(s.basis, s.basis)
    if len(derived) != 1:
        raise ValueError("span is abelian")
    y = derived[0]
    x = next(b for b in s.basis if rank([_real_vec(y), _real_vec(b)]) == 2)
    k = solve_in_span([_real_vec(y)], _real_vec(bracket(x, y)))[0]
    _, p1, p0 = x.scale(k.inverse()).charpoly()
    return p1, p0


def _u26_second(lam: FieldElement) -> Matrix3:
    from .field import SQRT2

    return from_a_coords([2 * lam, 4 * lam, 0, 6 * lam, -SQRT2, 0, SQRT2, 0])


def jordan_claim_check(lam) -> bool:
    """Whether the second generator of the u26 family has eigenvalues 2-4i lam, -2-4i lam, 8i lam."""
    lam = fe(lam)
    if not lam.is_real():
        raise ValueError("lambda must be real")
    roots = (fe(2) - fe(4) * I * lam, fe(-2) - fe(4) * I * lam, fe(8) * I * lam)
    e1, e2, e3 = roots
    claimed = (-(e1 + e2 + e3), e1 * e2 + e1 * e3 + e2 * e3, -(e1 * e2 * e3))
    return _u26_second(lam).charpoly() == claimed


def eta_condition_holds(lam) -> bool:
    """Eigenvalue comparison for the u26 family at lam leaves only eta = +-lam.

    The scale-free ratio p0^2 / p1^3 of the second generator equals
    -1024 L (1 + 4L)^2 / (48L - 4)^3 with L = lam^2.  Equal ratios for lam and
    eta give P(u) = u(1+4u)^2(48L-4)^3 - L(1+4L)^2(48u-4)^3 = 0 with u = eta^2.
    P has the root u = L; the condition holds when the remaining quadratic
    factor has no root u >= 0 other than L.
    """
    lam = fe(lam)
    if not lam.is_rational():
        raise ValueError("the coefficient comparison is implemented for rational lambda")
    L = Fraction(lam.coeffs[0]) ** 2
    A = (48 * L - 4) ** 3
    B = L * (1 + 4 * L) ** 2
    # P(u) = A(16u^3 + 8u^2 + u) - B(48u - 4)^3, coefficients high to low
    p = [16 * A - B * 48**3, 8 * A + B * 3 * 48**2 * 4, A - B * 3 * 48 * 16, B * 64]
    # synthetic division by (u - L)
    q = [p[0]]
    for c in p[1:3]:
        q.append(c + q[-1] * L)
    assert p[3] + q[-1] * L == 0
    a, b, c = q
    if a == 0:
        if b == 0:
            return c != 0
        r = -c / b
        return r < 0 or r == L
    disc = b * b - 4 * a * c
    if disc < 0:
        return True
    # sign analysis of the two real roots without extracting the square root
    prod, total = c / a, -b / a
    q_at_l = a * L * L + b * L + c
    if q_at_l == 0:
        other = total - L
        return other < 0 or other == L
    if prod <= 0:
        return False
    return total < 0


def separate(u: Subalgebra, v: Subalgebra) -> str | None:
    """A certified reason u and v are not SU(2,1)-conjugate, or None."""
    fu, fv = fingerprint(u), fingerprint(v)
    diff = fu.differences(fv)
    if diff:
        return "fingerprint differs in " + ", ".join(diff)
    if fu.dim == 1:
        return separate_lines(u.basis()[0], v.basis()[0])
    if fu.dim == 2 and fu.structure_class != "abelian":
        if nonabelian_pair_invariant(u) != nonabelian_pair_invariant(v):
            return "normalized charpoly of the non-derived generator differs"
    return None
