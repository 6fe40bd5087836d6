"""Named witness matrices and stabilizer torus families.

Matrices are written with entries in the printed form accepted by
:func:`su21.field.parse`.  Family entries are Laurent polynomials in the
torus parameters; each family also records the diagonal torus it is
conjugate to and the conjugating witness.
"""

from __future__ import annotations

from ..cohomology import ParametrizedFamily, TorusSigmaType
from ..field import I, ONE, SQRT2, fe
from ..linalg import IDENTITY, Matrix3
from ..liealg import tau_grp

HALF = fe("1/2")
QUARTER = fe("1/4")


def _m(rows) -> Matrix3:
    return Matrix3([[fe(x) for x in row] for row in rows])


MATRICES: dict[str, Matrix3] = {
    "I": IDENTITY,
    "rot12": _m([[0, 1, 0], [-1, 0, 0], [0, 0, 1]]),
    "rot13": _m([[0, 0, 1], [0, 1, 0], [-1, 0, 0]]),
    "rot31": _m([[0, 0, -1], [0, 1, 0], [1, 0, 0]]),
    "swap12": _m([[0, 1, 0], [1, 0, 0], [0, 0, -1]]),
    "h_xa": _m([[0, -1, 0], [-1, 0, 0], [0, 0, -1]]),
    "g_xa": _m(
        [
            ["-1/2", "1/2", "1/2*sqrt2"],
            ["-1/2", "1/2", "-1/2*sqrt2"],
            ["-1/2*sqrt2", "-1/2*sqrt2", 0],
        ]
    ),
    "g_reg": _m(
        [
            ["1/2-1/2*i", 0, "-1/2+1/2*i"],
            [0, "i", 0],
            ["1/2-1/2*i", 0, "1/2-1/2*i"],
        ]
    ),
    "g1": _m([[0, "1/2*sqrt2", "1/2*sqrt2"], [0, "1/2*sqrt2", "-1/2*sqrt2"], [-1, 0, 0]]),
    "g2": _m([["1/2*sqrt2", 0, "-1/2*sqrt2"], ["-1/2*sqrt2", 0, "-1/2*sqrt2"], [0, 1, 0]]),
    "g3": _m(
        [
            ["-1/2", "-1/2", "-1/2*sqrt2"],
            ["1/2", "1/2", "-1/2*sqrt2"],
            ["1/2*sqrt2", "-1/2*sqrt2", 0],
        ]
    ),
    "w_half": _m([[1, 0, 0], [0, 0, "i"], [0, "i", 0]]),
    "g_half": _m(
        [
            ["i", 0, 0],
            [0, "1/2-1/2*i", "-1/2-1/2*i"],
            [0, "-1/2-1/2*i", "1/2-1/2*i"],
        ]
    ),
    "c_v4": _m([["1/2*sqrt2", "-1/2*sqrt2", 0], ["-1/2*sqrt2", "-1/2*sqrt2", 0], [0, 0, -1]]),
    "g_xab": _m(
        [
            ["1/2+1/2*i", 0, "1/2+1/2*i"],
            [0, "-i", 0],
            ["-1/2-1/2*i", 0, "1/2+1/2*i"],
        ]
    ),
    "z_diag": Matrix3.diag(2, 1, "1/2"),
    "T(1,1)": IDENTITY,
    "T(-1,1)": Matrix3.diag(-1, 1, -1),
    "T(1,-1)": Matrix3.diag(1, -1, -1),
    "T(-1,-1)": Matrix3.diag(-1, -1, 1),
}

# The second real point of the <X_a + H_a + 2H_b> orbit uses g_xa twice.
_GG = MATRICES["g_xa"] @ MATRICES["g_xa"]
MATRICES["c_u14"] = _GG.inverse() @ tau_grp(_GG)


def matrix(name: str) -> Matrix3:
    try:
        return MATRICES[name]
    except KeyError:
        raise KeyError(f"unknown witness matrix {name!r}") from None


def product(names) -> Matrix3:
    out = IDENTITY
    for n in names:
        out = out @ matrix(n)
    return out


# -- torus families -----------------------------------------------------------


def _sym_ac(a, b, c, sign):
    """[[ (a+c)/2, 0, s(a-c)/2 ], [0, b, 0], [s(a-c)/2, 0, (a+c)/2]]."""
    p, q = (a + c) * HALF, (a - c) * HALF * fe(sign)
    return Matrix3([[p, 0, q], [0, b, 0], [q, 0, p]])


def _build_xa(p):
    a, b = p
    c = (a * b).inverse()
    s, d = a + b + fe(2) * c, a + b - fe(2) * c
    r = SQRT2 * (a - b)
    return Matrix3([[s, d, r], [d, s, r], [r, r, fe(2) * (a + b)]]).scale(QUARTER)


def _build_reg(p):
    (t,) = p
    return _sym_ac(t, ONE, t.inverse(), 1)


def _build_xh(p):
    (t,) = p
    t2 = (t * t).inverse()
    u, v = (t + t2) * HALF, (t - t2) * HALF
    return Matrix3([[u, v, 0], [v, u, 0], [0, 0, t]])


def _build_circle(p):
    a, c = p
    return _sym_ac(a, (a * c).inverse(), c, 1)


def _build_half(p):
    b, c = p
    a = (b * c).inverse()
    u, v = (b + c) * HALF, (b - c) * HALF * I
    return Matrix3([[a, 0, 0], [0, u, v], [0, -v, u]])


def _build_twisted(p, printed=False):
    a, b = p
    c = (a * b).inverse()
    d = fe(2) * c
    u, v = (a + b + d) * QUARTER, (-a - b + d) * QUARTER
    r = SQRT2 * (b - a) * QUARTER
    v21 = (a - b + d) * QUARTER if printed else v
    z = (a + b) * (QUARTER if printed else HALF)
    return Matrix3([[u, v, r], [v21, u, -r], [r, -r, z]])


def _build_xab(p):
    (t,) = p
    return _sym_ac(t, ONE, t.inverse(), -1)


def _build_flag(p):
    a, c = p
    return _sym_ac(a, (a * c).inverse(), c, -1)


def _e_abc(p):
    a, b = p
    return (a, b, (a * b).inverse())


def _e_a1c(p):
    a, c = p
    return (a, (a * c).inverse(), c)


def _e_t1t(p):
    (t,) = p
    return (t, ONE, t.inverse())


FIX, INV, SWAP_INV = TorusSigmaType.FIX, TorusSigmaType.INV, TorusSigmaType.SWAP_INV

FAMILIES: dict[str, ParametrizedFamily] = {
    f.name: f
    for f in (
        ParametrizedFamily("fam_xa", 2, _build_xa, _e_abc, SWAP_INV, "g_xa", "c = 1/(ab)"),
        ParametrizedFamily("fam_reg", 1, _build_reg, _e_t1t, FIX, "g_reg"),
        ParametrizedFamily("fam_xh", 1, _build_xh, lambda p: (p[0], p[0], (p[0] * p[0]).inverse()), INV, "g_xa"),
        ParametrizedFamily("fam_circle", 2, _build_circle, _e_a1c, SWAP_INV, "g_reg", "b = 1/(ac)"),
        ParametrizedFamily(
            "fam_half", 2, _build_half, lambda p: ((p[0] * p[1]).inverse(), p[0], p[1]), SWAP_INV, "g_half", "a = 1/(bc)"
        ),
        ParametrizedFamily("fam_circle2", 2, _build_twisted, _e_abc, SWAP_INV, "g3", "c = 1/(ab)"),
        ParametrizedFamily("fam_xab", 1, _build_xab, _e_t1t, FIX, "g_xab"),
        ParametrizedFamily("fam_x_h", 2, _build_twisted, _e_abc, SWAP_INV, "g3", "c = 1/(ab)"),
        ParametrizedFamily("fam_flag", 2, _build_flag, _e_a1c, SWAP_INV, "g_xab", "b = 1/(ac)"),
    )
}

# The twisted family as typeset, with two misprinted entries; kept so the
# correction itself is a checked claim.
PRINTED_CIRCLE2 = ParametrizedFamily(
    "fam_circle2_printed", 2, lambda p: _build_twisted(p, printed=True), _e_abc, SWAP_INV, "g3", "c = 1/(ab)"
)

# A wrong tau-action per family: the negative control must fail.
NEGATIVE_CONTROL: dict[TorusSigmaType, TorusSigmaType] = {
    FIX: INV,
    INV: FIX,
    SWAP_INV: TorusSigmaType.COMPONENTWISE_INV,
}


def family(name: str) -> ParametrizedFamily:
    try:
        return FAMILIES[name]
    except KeyError:
        raise KeyError(f"unknown torus family {name!r}") from None


# Candidate generators for the bounded equivalence search.
SEARCH_GENERATORS: tuple[str, ...] = (
    "swap12",
    "rot12",
    "rot13",
    "g1",
    "g2",
    "g3",
    "w_half",
    "c_v4",
    "rot31",
    "T(-1,1)",
    "T(1,-1)",
    "T(-1,-1)",
)
