"""3x3 matrices over Q(zeta8) and exact row reduction of coordinate matrices."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Literal, Sequence

from .errors import NotReal, Singular
from .field import I, ONE, ZERO, FieldElement, fe, from_json, im, re, to_json

Domain = Literal["real", "complex"]


class Matrix3:
    """Immutable 3x3 matrix, entries stored row-major."""

    __slots__ = ("_e", "_hash")

    def __init__(self, rows: Iterable[Iterable]):
        entries = tuple(fe(x) for row in rows for x in row)
        if len(entries) != 9:
            raise ValueError("a Matrix3 needs exactly 9 entries")
        self._e = entries
        self._hash = None

    @classmethod
    def _from_flat(cls, entries: tuple) -> Matrix3:
        m = object.__new__(cls)
        m._e = entries
        m._hash = None
        return m

    @classmethod
    def identity(cls) -> Matrix3:
        return IDENTITY

    @classmethod
    def zero(cls) -> Matrix3:
        return ZERO_MATRIX

    @classmethod
    def diag(cls, a, b, c) -> Matrix3:
        return cls([[a, 0, 0], [0, b, 0], [0, 0, c]])

    @classmethod
    def unit(cls, i: int, j: int) -> Matrix3:
        """E_ij with 1-based indices."""
        e = [ZERO] * 9
        e[3 * (i - 1) + (j - 1)] = ONE
        return cls._from_flat(tuple(e))

    # -- access -----------------------------------------------------------
    def __getitem__(self, ij: tuple[int, int]) -> FieldElement:
        i, j = ij
        return self._e[3 * i + j]

    @property
    def entries(self) -> tuple[FieldElement, ...]:
        return self._e

    def rows(self) -> list[list[FieldElement]]:
        e = self._e
        return [list(e[0:3]), list(e[3:6]), list(e[6:9])]

    # -- arithmetic -------------------------------------------------------
    def __add__(self, other: Matrix3) -> Matrix3:
        if not isinstance(other, Matrix3):
            return NotImplemented
        return Matrix3._from_flat(tuple(a + b for a, b in zip(self._e, other._e)))

    def __sub__(self, other: Matrix3) -> Matrix3:
        if not isinstance(other, Matrix3):
            return NotImplemented
        return Matrix3._from_flat(tuple(a - b for a, b in zip(self._e, other._e)))

    def __neg__(self) -> Matrix3:
        return Matrix3._from_flat(tuple(-a for a in self._e))

    def scale(self, c) -> Matrix3:
        c = fe(c)
        return Matrix3._from_flat(tuple(c * a for a in self._e))

    def __rmul__(self, c) -> Matrix3:
        return self.scale(c)

    def __mul__(self, other):
        if isinstance(other, Matrix3):
            return self @ other
        return self.scale(other)

    def __matmul__(self, other: Matrix3) -> Matrix3:
        a = self._e
        b = other._e
        out = []
        for i in range(0, 9, 3):
            a0, a1, a2 = a[i], a[i + 1], a[i + 2]
            for j in range(3):
                out.append(a0 * b[j] + a1 * b[3 + j] + a2 * b[6 + j])
        return Matrix3._from_flat(tuple(out))

    def transpose(self) -> Matrix3:
        e = self._e
        return Matrix3._from_flat((e[0], e[3], e[6], e[1], e[4], e[7], e[2], e[5], e[8]))

    def conjugate(self) -> Matrix3:
        return Matrix3._from_flat(tuple(a.conjugate() for a in self._e))

    def dagger(self) -> Matrix3:
        """Conjugate transpose."""
        return self.transpose().conjugate()

    def trace(self) -> FieldElement:
        return self._e[0] + self._e[4] + self._e[8]

    def det(self) -> FieldElement:
        a, b, c, d, e, f, g, h, i = self._e
        return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)

    def adjugate(self) -> Matrix3:
        a, b, c, d, e, f, g, h, i = self._e
        return Matrix3._from_flat(
            (
                e * i - f * h,
                c * h - b * i,
                b * f - c * e,
                f * g - d * i,
                a * i - c * g,
                c * d - a * f,
                d * h - e * g,
                b * g - a * h,
                a * e - b * d,
            )
        )

    def inverse(self) -> Matrix3:
        d = self.det()
        if not d:
            raise Singular("matrix is singular")
        return self.adjugate().scale(d.inverse())

    def charpoly(self) -> tuple[FieldElement, FieldElement, FieldElement]:
        """(p2, p1, p0) with det(tI - A) = t^3 + p2 t^2 + p1 t + p0."""
        a, b, c, d, e, f, g, h, i = self._e
        minors = (a * e - b * d) + (a * i - c * g) + (e * i - f * h)
        return (-self.trace(), minors, -self.det())

    def is_zero(self) -> bool:
        return not any(self._e)

    def is_real(self) -> bool:
        return all(x.is_real() for x in self._e)

    # -- comparison / serialization ----------------------------------------
    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix3):
            return NotImplemented
        return self._e == other._e

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self._e)
        return self._hash

    def __repr__(self) -> str:
        rows = ", ".join("[" + ", ".join(str(x) for x in r) + "]" for r in self.rows())
        return f"Matrix3([{rows}])"

    def to_json(self) -> list:
        return [to_json(x) for x in self._e]

    @classmethod
    def from_json(cls, data) -> Matrix3:
        if len(data) != 9:
            raise ValueError("a Matrix3 serialization has 9 entries")
        return cls._from_flat(tuple(from_json(x) for x in data))


IDENTITY = Matrix3([[1, 0, 0], [0, 1, 0], [0, 0, 1]])
ZERO_MATRIX = Matrix3([[0, 0, 0], [0, 0, 0], [0, 0, 0]])
N = Matrix3.diag(1, 1, -1)


def mat_ops(a: Matrix3, b: Matrix3, op: str) -> Matrix3:
    if op == "mul":
        return a @ b
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    raise ValueError(f"unknown matrix op {op!r}")


# -- row reduction ----------------------------------------------------------

Row = tuple[FieldElement, ...]


def _rref_rows(rows: Sequence[Sequence[FieldElement]], ncols: int) -> list[list[FieldElement]]:
    m = [list(r) for r in rows if any(r)]
    out: list[list[FieldElement]] = []
    pivot_row = 0
    for col in range(ncols):
        pr = next((r for r in range(pivot_row, len(m)) if m[r][col]), None)
        if pr is None:
            continue
        m[pivot_row], m[pr] = m[pr], m[pivot_row]
        inv = m[pivot_row][col].inverse()
        prow = [x * inv for x in m[pivot_row]]
        m[pivot_row] = prow
        for r in range(len(m)):
            if r != pivot_row:
                f = m[r][col]
                if f:
                    m[r] = [x - f * y for x, y in zip(m[r], prow)]
        pivot_row += 1
        if pivot_row == len(m):
            break
    out = [r for r in m[:pivot_row]]
    return out


def _split(row: Sequence[FieldElement]) -> list[FieldElement]:
    out = []
    for x in row:
        out.append(re(x))
        out.append(im(x))
    return out


def _fold(row: Sequence[FieldElement]) -> list[FieldElement]:
    return [row[2 * k] + I * row[2 * k + 1] for k in range(len(row) // 2)]


@dataclass(frozen=True)
class CoordMatrix:
    """Rows of coordinate vectors spanning a space over the declared scalars.

    Over the real domain each complex coordinate is treated as two real ones
    (real and imaginary part), so a real span of complex vectors reduces like
    an ordinary span over Q(sqrt2).
    """

    rows: tuple[Row, ...]
    scalar_domain: Domain = "complex"

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(tuple(fe(x) for x in r) for r in self.rows))
        if self.scalar_domain not in ("real", "complex"):
            raise ValueError(f"unknown scalar domain {self.scalar_domain!r}")

    @property
    def ncols(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    def rref(self) -> tuple[CoordMatrix, int]:
        if not self.rows:
            return self, 0
        if self.scalar_domain == "complex":
            red = _rref_rows(self.rows, self.ncols)
        else:
            red = [_fold(r) for r in _rref_rows([_split(r) for r in self.rows], 2 * self.ncols)]
        return CoordMatrix(tuple(tuple(r) for r in red), self.scalar_domain), len(red)

    def rank(self) -> int:
        return self.rref()[1]


def rref(m: CoordMatrix) -> tuple[CoordMatrix, int]:
    return m.rref()


def rank(rows: Sequence[Sequence[FieldElement]], scalar_domain: Domain = "complex") -> int:
    return CoordMatrix(tuple(tuple(r) for r in rows), scalar_domain).rank()


def nullspace(rows: Sequence[Sequence[FieldElement]], ncols: int) -> list[list[FieldElement]]:
    """Basis of {v : rows . v = 0} over the field."""
    red = _rref_rows(rows, ncols)
    pivots = []
    for r in red:
        pivots.append(next(k for k, x in enumerate(r) if x))
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [ZERO] * ncols
        v[f] = ONE
        for r, p in zip(red, pivots):
            v[p] = -r[f]
        basis.append(v)
    return basis


def solve_in_span(basis: Sequence[Sequence[FieldElement]], v: Sequence[FieldElement]) -> list[FieldElement] | None:
    """Coefficients c with sum c_k basis_k = v, or None.  Basis must be independent."""
    k = len(basis)
    n = len(v)
    # columns are basis vectors; augment with v
    rows = [[basis[j][i] for j in range(k)] + [v[i]] for i in range(n)]
    red = _rref_rows(rows, k + 1)
    coeffs = [ZERO] * k
    for r in red:
        p = next(c for c, x in enumerate(r) if x)
        if p == k:
            return None
        coeffs[p] = r[k]
    return coeffs


def hermitian_signature(h: Sequence[Sequence[FieldElement]]) -> tuple[int, int, int]:
    """(positive, negative, zero) inertia of a Hermitian matrix over Q(zeta8).

    Diagonalizes by congruence.  A real symmetric matrix over Q(sqrt2) is the
    special case where conjugation acts trivially.
    """
    n = len(h)
    m = [[fe(x) for x in row] for row in h]
    for j in range(n):
        for k in range(n):
            if m[j][k] != m[k][j].conjugate():
                raise ValueError("matrix is not Hermitian")
    pos = neg = 0
    active = list(range(n))
    while active:
        piv = next((j for j in active if m[j][j]), None)
        if piv is None:
            pair = next(((j, k) for j in active for k in active if j != k and m[j][k]), None)
            if pair is None:
                break
            j, k = pair
            # e_j <- e_j + c e_k with c = conj(h_jk) makes h_jj = 2|h_jk|^2 + |c|^2 h_kk > 0
            c = m[j][k].conjugate()
            cc = c.conjugate()
            for r in range(n):
                m[j][r] = m[j][r] + cc * m[k][r]
            for r in range(n):
                m[r][j] = m[r][j] + c * m[r][k]
            piv = j
        d = m[piv][piv]
        if not d.is_real():
            raise NotReal("diagonal entry of a Hermitian matrix is not real")
        if d.real_sign() > 0:
            pos += 1
        else:
            neg += 1
        dinv = d.inverse()
        rest = [r for r in active if r != piv]
        for r in rest:
            f = m[r][piv] * dinv
            if f:
                fc = f.conjugate()
                for s in range(n):
                    m[r][s] = m[r][s] - f * m[piv][s]
                for s in range(n):
                    m[s][r] = m[s][r] - fc * m[s][piv]
        active = rest
    return pos, neg, n - pos - neg
