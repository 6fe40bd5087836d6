"""The embedded classification data.

Complex representatives are given in Chevalley coordinates
(H_a, H_b, X_a, X_b, X_ab, Y_a, Y_b, Y_ab), real ones in a-coordinates.
"""

from __future__ import annotations

import re
from functools import lru_cache

from ..field import I, SQRT2, fe
from .records import (
    Assertion,
    CaseRecord,
    Equivalence,
    ParamMap,
    ParamRange,
    RealFamily,
    RealPoint,
    VectorTemplate,
)

_CH = ("Ha", "Hb", "Xa", "Xb", "Xab", "Ya", "Yb", "Yab")
ZERO8 = (0,) * 8


def ch(**coeffs) -> tuple:
    """Chevalley coordinate vector, e.g. ch(Ha=1, Hb=2, Xa=1)."""
    unknown = set(coeffs) - set(_CH)
    if unknown:
        raise KeyError(f"unknown Chevalley names {sorted(unknown)}")
    return tuple(fe(coeffs.get(n, 0)) for n in _CH)


def av(*c) -> tuple:
    """a-coordinate vector; missing trailing entries are zero."""
    return tuple(fe(x) for x in c) + (fe(0),) * (8 - len(c))


def fixed(*vectors) -> tuple[VectorTemplate, ...]:
    return tuple(VectorTemplate(v) for v in vectors)


S2 = SQRT2
REALS = ParamRange(text="real")
NONZERO = ParamRange(excluded=(fe(0),), text="real, nonzero")


# -- real tables ---------------------------------------------------------------

REAL_FAMILIES: tuple[RealFamily, ...] = (
    RealFamily("u_1_1", 1, 1, fixed(av(-1, -2, 0, -1, 0, S2, 0, S2))),
    RealFamily("u_1_2", 1, 1, fixed(av(0, 0, 1, 1, 0, 0, 1, -1))),
    RealFamily("u_1_3", 1, 1, fixed(av(3, 6, 0, -5, 0, -S2, 0, -S2))),
    RealFamily("u_1_4", 1, 1, fixed(av(1, 2, 0, 7, 0, -S2, 0, S2))),
    RealFamily(
        "u_1_5",
        1,
        1,
        (VectorTemplate(av(1), av(0, 1)),),
        REALS,
        annotation="u^l ~ u^(l/(l-1)); alternatively l in [0, 2]",
    ),
    RealFamily("u_1_6", 1, 1, fixed(av(0, 0, 0, 0, 1, 0, -1))),
    RealFamily(
        "u_1_7",
        1,
        1,
        (VectorTemplate(av(1, -1), av(0, 0, 0, 0, 1)),),
        NONZERO,
        annotation="u^l ~ u^(-l); alternatively l in (0, oo)",
    ),
    RealFamily("u_2_1", 2, 2, fixed(av(0, 0, 1, 1, 0, 0, -1, 1), av(1, 1, 0, 0, 0, 1))),
    RealFamily("u_2_2", 2, 2, fixed(av(1, 2, 0, -1, 0, S2, 0, -S2), av(1, 2, 0, 3))),
    RealFamily("u_2_3", 2, 2, fixed(av(1), av(0, 1))),
    RealFamily(
        "u_2_4",
        2,
        2,
        fixed(av(0, 0, 0, 0, 1, 0, -1), av(1, 2, 0, 3)),
        printed_vectors=fixed(av(0, 0, 0, 0, 0, 1, -1), av(1, 2, 0, 3)),
    ),
    RealFamily("u_2_5", 2, 2, fixed(av(0, 0, 1, 1, 0, 0, -1, 1), av(0, 0, 0, 0, 1))),
    RealFamily(
        "u_2_6",
        2,
        2,
        (
            VectorTemplate(av(1, 2, 0, -1, 0, S2, 0, -S2)),
            VectorTemplate(av(0, 0, 0, 0, -S2, 0, S2), av(2, 4, 0, 6)),
        ),
        REALS,
        annotation="u^l ~ u^m iff m = l",
    ),
    RealFamily("u_3_1", 3, 3, fixed(av(0, 0, 0, 1, 0, 0, 0, -1), av(0, 0, 1, 0, 0, 0, 1), av(1, 1, 0, 0, 0, -1))),
    RealFamily("u_3_2", 3, 3, fixed(av(0, 0, 1, 1, 0, 0, 1, -1), av(1, 1, 0, 0, 0, -1), av(0, 0, 0, 0, 1))),
    RealFamily("u_3_3", 3, 3, fixed(av(0, 0, 0, 4, 0, -S2, 0, S2), av(0, 0, 0, 0, 1, 0, -1), av(1, 2, 0, 3))),
    RealFamily("u_3_4", 4, 3, fixed(av(0, 0, 0, 1), av(0, 0, 0, 0, 0, 1), av(0, 0, 0, 0, 0, 0, 1))),
    RealFamily("u_3_5", 4, 3, fixed(av(1, 1), av(0, 0, 0, 0, 1), av(0, 0, 0, 0, 0, 1))),
    RealFamily("u_3_6", 4, 3, fixed(av(1), av(0, 0, 1), av(0, 0, 0, 1))),
    RealFamily(
        "u_4_1", 5, 4, fixed(av(1, 1, 0, 0, 0, 1), av(0, 0, 0, 0, 1), av(0, 0, 1, 0, 0, 0, -1), av(0, 0, 0, 1, 0, 0, 0, 1))
    ),
    RealFamily(
        "u_4_2", 5, 4, fixed(av(1, -1), av(1, 1, 0, 0, 0, 1), av(0, 0, 1, 0, 0, 0, -1), av(0, 0, 0, 1, 0, 0, 0, 1))
    ),
    RealFamily(
        "u_5_1",
        5,
        5,
        fixed(
            av(1, -1),
            av(1, 1, 0, 0, 0, 1),
            av(0, 0, 0, 0, 1),
            av(0, 0, 1, 0, 0, 0, -1),
            av(0, 0, 0, 1, 0, 0, 0, 1),
        ),
    ),
    RealFamily("u_4_3", 6, 4, fixed(av(1), av(0, 1), av(0, 0, 0, 0, 1), av(0, 0, 0, 0, 0, 1))),
    RealFamily("u_4_4", 6, 4, fixed(av(1), av(0, 1), av(0, 0, 1), av(0, 0, 0, 1))),
    # Redundant families, each reduced to a table row by a recorded equivalence.
    RealFamily(
        "v_1",
        1,
        1,
        (VectorTemplate(av(1, 2, 0, 1), av(0, 0, 0, -2)),),
        ParamRange(excluded=(fe(-1), fe(1), fe(2)), text="real, not -1, 1, 2"),
        redundant=True,
    ),
    RealFamily(
        "v_2",
        1,
        1,
        (VectorTemplate(av(1, 2, 0, -1), av(-1, -2, 0, -1)),),
        ParamRange(excluded=(fe(0), fe("1/2")), text="real, not 0, 1/2"),
        redundant=True,
    ),
    RealFamily("v_3", 1, 1, (VectorTemplate(av(1, "1/2"), av(0, 0, 0, 0, 0, 0, 0, 1)),), NONZERO, redundant=True),
    RealFamily(
        "v_4",
        1,
        1,
        (VectorTemplate(av(1, 2, 0, 3), av(0, 0, 0, 0, S2, 0, -S2)),),
        ParamRange(excluded=(fe(0),), lower=fe(-1), upper=fe(1), text="-1 < l < 1, nonzero"),
        redundant=True,
    ),
)


# -- complex cases ---------------------------------------------------------------

MOBIUS_ID = ParamMap()


def const(v) -> ParamMap:
    return ParamMap(fe(0), fe(v), fe(0), fe(1))


def cayley(a=1, b=0, c=0, d=1, center=0) -> ParamMap:
    return ParamMap(fe(a), fe(b), fe(c), fe(d), True, fe(center))


NONEXISTENCE = Assertion("nonexistence", "no element of SL3(C) maps the rep onto its tau-image")


def no_transporter(cid, table, name, rep, param_range=None) -> CaseRecord:
    return CaseRecord(
        id=cid,
        table=table,
        complex_name=name,
        complex_rep=rep,
        disposition="no_transporter",
        assertions=(NONEXISTENCE,),
        param_range=param_range,
    )


def _h_line(a_const=0, a_slope=None):
    """<H_a + a H_b> with a = a_const, or affine in the case parameter."""
    return (VectorTemplate(ch(Ha=1, Hb=a_const), ch(Hb=1) if a_slope else None),)


ODD_COMPONENTS = Assertion(
    "odd_component_group",
    "the component group has order 3 and contributes nothing to first cohomology",
    cited=True,
)

T7_ORBIT = (
    MOBIUS_ID,
    ParamMap(0, 1, 1, 0),  # 1/a
    ParamMap(-1, 1, 0, 1),  # 1 - a
    ParamMap(0, 1, -1, 1),  # 1/(1 - a)
    ParamMap(1, 0, 1, -1),  # a/(a - 1)
    ParamMap(1, -1, 1, 0),  # (a - 1)/a
)

GENERIC_EXCLUDED = ParamRange(
    excluded=(fe(0), fe(1), fe(-1), fe("1/2"), fe(2)),
    text="real, not 0, 1, -1, 1/2, 2",
)
V4_RANGE = ParamRange(excluded=(fe(0),), lower=fe(-1), upper=fe(1), text="-1 < l < 1, nonzero")

CASES: tuple[CaseRecord, ...] = (
    # ---- one-dimensional -------------------------------------------------------
    CaseRecord(
        id="T7.r1",
        table=7,
        complex_name="<X_a + X_b>",
        complex_rep=fixed(ch(Xa=1, Xb=1)),
        disposition="has_real_points",
        transporter="rot13",
        transporter_inverse=True,
        cocycle="rot13",
        real_points=(RealPoint(("g_reg",), "rot13", "u_1_2"),),
        families=(("fam_reg", 0),),
        assertions=(ODD_COMPONENTS,),
        expected_real_orbit_count=1,
    ),
    CaseRecord(
        id="T7.r2",
        table=7,
        complex_name="<X_a>",
        complex_rep=fixed(ch(Xa=1)),
        disposition="has_real_points",
        transporter="rot12",
        cocycle="h_xa",
        real_points=(RealPoint(("g_xa",), "h_xa", "u_1_1"),),
        families=(("fam_xa", 0),),
        stabilizer_members=("z_diag",),
        stabilizer_nonmembers=("rot12",),
        expected_real_orbit_count=1,
    ),
    CaseRecord(
        id="T7.r3",
        table=7,
        complex_name="<X_a + H_a + 2H_b>",
        complex_rep=fixed(ch(Xa=1, Ha=1, Hb=2)),
        disposition="has_real_points",
        transporter="h_xa",
        cocycle="h_xa",
        real_points=(
            RealPoint(("g_xa",), "h_xa", "u_1_3"),
            RealPoint(("g_xa", "g_xa"), "c_u14", "u_1_4"),
        ),
        families=(("fam_xh", 0),),
        expected_real_orbit_count=2,
    ),
    CaseRecord(
        id="T7.r4.generic",
        table=7,
        complex_name="<H_a + a H_b>, a real",
        complex_rep=_h_line(0, True),
        disposition="has_real_points",
        transporter="I",
        cocycle="I",
        real_points=(
            RealPoint((), "I", "u_1_5", MOBIUS_ID),
            RealPoint(("g1",), "T(-1,1)", "v_1", MOBIUS_ID),
            RealPoint(("g2",), "T(1,-1)", "v_2", MOBIUS_ID),
        ),
        nontrivial_classes=("T(-1,-1)",),
        equivalences=(
            Equivalence("u_1_5", "u_1_5", ParamMap(1, 0, 1, -1), conjugator="swap12"),
            Equivalence("u_1_5", "v_1", ParamMap(1, -1, 1, 0), search_depth=2),
            Equivalence("u_1_5", "v_2", ParamMap(0, -1, 1, -1), search_depth=2),
        ),
        param_family="u_1_5",
        param_range=GENERIC_EXCLUDED,
        complex_map=MOBIUS_ID,
        expected_real_orbit_count=3,
    ),
    CaseRecord(
        id="T7.r4.lambda0",
        table=7,
        complex_name="<H_a>",
        complex_rep=_h_line(0),
        disposition="has_real_points",
        transporter="I",
        cocycle="I",
        real_points=(
            RealPoint((), "I", "u_1_5", const(0)),
            RealPoint(("g1",), "T(-1,1)", "v_1", const(0)),
            RealPoint(("g3",), "swap12", "u_1_6"),
        ),
        stabilizer_members=("swap12",),
        assertions=(
            Assertion(
                "fiber",
                "the fiber of j_* over [1] is {[T(1,1)], [T(-1,1)], [T(-1,-1)]}",
                ("T(1,1)", "T(-1,1)", "T(-1,-1)"),
            ),
        ),
        expected_real_orbit_count=3,
    ),
    CaseRecord(
        id="T7.r4.lambda2",
        table=7,
        complex_name="<H_a + 2H_b>",
        complex_rep=_h_line(2),
        disposition="has_real_points",
        transporter="I",
        cocycle="I",
        real_points=(
            RealPoint((), "I", "u_1_5", const(2)),
            RealPoint(("g2",), "T(1,-1)", "v_2", const(2)),
        ),
        assertions=(
            Assertion(
                "gl2_classes",
                "the stabilizer is GL(2,C) with classes {[T(1,1)], [T(1,-1)], [T(-1,-1)]}",
                ("T(1,1)", "T(1,-1)", "T(-1,-1)"),
            ),
        ),
        expected_real_orbit_count=2,
    ),
    CaseRecord(
        id="T7.r4.unit_circle",
        table=7,
        complex_name="<H_a + a H_b>, |a| = 1",
        complex_rep=_h_line(0, True),
        disposition="has_real_points",
        transporter="rot13",
        cocycle="rot13",
        real_points=(RealPoint(("g_reg",), "rot13", "u_1_7", MOBIUS_ID),),
        families=(("fam_circle", 0),),
        equivalences=(Equivalence("u_1_7", "u_1_7", ParamMap(-1, 0, 0, 1), conjugator="T(1,-1)"),),
        param_family="u_1_7",
        param_range=NONZERO,
        complex_map=cayley(0, -1, 1, 0),
        expected_real_orbit_count=1,
    ),
    CaseRecord(
        id="T7.r4.half_line",
        table=7,
        complex_name="<H_a + a H_b>, Re a = 1/2",
        complex_rep=_h_line(0, True),
        disposition="has_real_points",
        transporter="w_half",
        cocycle="w_half",
        real_points=(RealPoint(("g_half",), "w_half", "v_3", MOBIUS_ID),),
        families=(("fam_half", 0),),
        equivalences=(Equivalence("u_1_7", "v_3", ParamMap(1, 0, 0, 2), search_depth=3),),
        param_family="v_3",
        param_range=NONZERO,
        complex_map=ParamMap(-I, fe("1/2"), 0, 1),
        expected_real_orbit_count=1,
    ),
    CaseRecord(
        id="T7.r4.circle2",
        table=7,
        complex_name="<H_a + a H_b>, |a - 1| = 1",
        complex_rep=_h_line(0, True),
        disposition="has_real_points",
        transporter="swap12",
        cocycle="swap12",
        real_points=(RealPoint(("g3",), "swap12", "v_4", MOBIUS_ID),),
        families=(("fam_circle2", 0),),
        equivalences=(Equivalence("v_4", "u_1_7", MOBIUS_ID, conjugator="c_v4"),),
        param_family="v_4",
        param_range=V4_RANGE,
        complex_map=cayley(center=1),
        expected_real_orbit_count=1,
    ),
    CaseRecord(
        id="T7.r4.other",
        table=7,
        complex_name="<H_a + a H_b>, a off the three real loci",
        complex_rep=_h_line(0, True),
        disposition="no_real_points",
        transporter="I",
        complex_samples=(fe(2) + I, fe(1) + fe(2) * I, fe(3) + fe("1/2") * I, fe(-1) + I, fe("1/3") + I),
        tau_map=MOBIUS_ID,
        orbit_maps=T7_ORBIT,
    ),
    # ---- two-dimensional -------------------------------------------------------
    CaseRecord(
        id="T8.r1",
        table=8,
        complex_name="<X_a + X_b, X_ab>",
        complex_rep=fixed(ch(Xa=1, Xb=1), ch(Xab=1)),
        disposition="has_real_points",
        transporter="rot31",
        cocycle="rot31",
        real_points=(RealPoint(("g_xab",), "rot31", "u_2_1"),),
        families=(("fam_xab", 0),),
        expected_real_orbit_count=1,
    ),
    CaseRecord(
        id="T8.r2",
        table=8,
        complex_name="<X_a, H_a + 2H_b>",
        complex_rep=fixed(ch(Xa=1), ch(Ha=1, Hb=2)),
        disposition="has_real_points",
        transporter="swap12",
        cocycle="swap12",
        real_points=(RealPoint(("g3",), "swap12", "u_2_2"),),
        families=(("fam_x_h", 0),),
        expected_real_orbit_count=1,
    ),
    no_transporter("T8.r3", 8, "<X_a, X_ab>", fixed(ch(Xa=1), ch(Xab=1))),
    no_transporter("T8.r4", 8, "<X_a, Y_b>", fixed(ch(Xa=1), ch(Yb=1))),
    CaseRecord(
        id="T8.r5",
        table=8,
        complex_name="<H_a, H_b>",
        complex_rep=fixed(ch(Ha=1), ch(Hb=1)),
        disposition="has_real_points",
        transporter="I",
        cocycle="I",
        real_points=(
            RealPoint((), "I", "u_2_3"),
            RealPoint(("g3",), "swap12", "u_2_4"),
        ),
        nontrivial_classes=("T(-1,-1)",),
        expected_real_orbit_count=2,
    ),
    CaseRecord(
        id="T8.r6",
        table=8,
        complex_name="<X_a + X_b, H_a + H_b>",
        complex_rep=fixed(ch(Xa=1, Xb=1), ch(Ha=1, Hb=1)),
        disposition="has_real_points",
        transporter="rot31",
        cocycle="rot31",
        real_points=(RealPoint(("g_xab",), "rot31", "u_2_5"),),
        families=(("fam_xab", 0),),
        expected_real_orbit_count=1,
    ),
    no_transporter("T8.r7", 8, "<X_a, -H_a + H_b + 3X_ab>", fixed(ch(Xa=1), ch(Ha=-1, Hb=1, Xab=3))),
    no_transporter("T8.r8", 8, "<X_a, -2H_a - H_b + 3Y_b>", fixed(ch(Xa=1), ch(Ha=-2, Hb=-1, Yb=3))),
    CaseRecord(
        id="T8.r9",
        table=8,
        complex_name="<X_a, a H_a + (2a + 1) H_b>, Re a = -1/2",
        complex_rep=(VectorTemplate(ch(Xa=1)), VectorTemplate(ch(Hb=1), ch(Ha=1, Hb=2))),
        disposition="has_real_points",
        transporter="swap12",
        cocycle="swap12",
        real_points=(RealPoint(("g3",), "swap12", "u_2_6", MOBIUS_ID),),
        assertions=(
            Assertion("sign_separation", "u_2_6 at l and at -l are not conjugate under SU(2,1)"),
        ),
        param_family="u_2_6",
        param_range=REALS,
        complex_map=ParamMap(I, fe("-1/2"), 0, 1),
        expected_real_orbit_count=1,
    ),
    CaseRecord(
        id="T8.r9.other",
        table=8,
        complex_name="<X_a, a H_a + (2a + 1) H_b>, Re a != -1/2",
        complex_rep=(VectorTemplate(ch(Xa=1)), VectorTemplate(ch(Hb=1), ch(Ha=1, Hb=2))),
        disposition="no_real_points",
        transporter="swap12",
        complex_samples=(fe(0), fe(1), fe(2) + I, fe("1/3") - I, fe(-3) + fe("1/2") * I),
        tau_map=ParamMap(-1, -1, 0, 1),
        orbit_maps=(MOBIUS_ID,),
    ),
    # ---- semisimple --------------------------------------------------------------
    CaseRecord(
        id="T9.r1",
        table=9,
        complex_name="<X_ab, Y_ab, H_a + H_b>",
        complex_rep=fixed(ch(Xab=1), ch(Yab=1), ch(Ha=1, Hb=1)),
        disposition="has_real_points",
        transporter="I",
        cocycle="I",
        real_points=(
            RealPoint((), "I", "u_3_5"),
            RealPoint(("g2",), "T(1,-1)", "u_3_6"),
        ),
        nontrivial_classes=("T(-1,-1)",),
        expected_real_orbit_count=2,
    ),
    CaseRecord(
        id="T9.r2",
        table=9,
        complex_name="<X_a + X_b, 2Y_a + 2Y_b, 2H_a + 2H_b>",
        complex_rep=fixed(ch(Xa=1, Xb=1), ch(Ya=2, Yb=2), ch(Ha=2, Hb=2)),
        disposition="has_real_points",
        transporter="T(1,-1)",
        cocycle="T(1,-1)",
        real_points=(RealPoint(("g2",), "T(1,-1)", "u_3_4"),),
        nontrivial_classes=("T(-1,-1)",),
        assertions=(ODD_COMPONENTS,),
        expected_real_orbit_count=1,
    ),
    # ---- three-dimensional solvable ----------------------------------------------
    no_transporter("T10.r1", 10, "<X_a, X_ab, 2H_a + H_b>", fixed(ch(Xa=1), ch(Xab=1), ch(Ha=2, Hb=1))),
    no_transporter("T10.r2", 10, "<X_a, Y_b, H_a - H_b>", fixed(ch(Xa=1), ch(Yb=1), ch(Ha=1, Hb=-1))),
    no_transporter(
        "T10.r3", 10, "<X_a, X_ab, 2H_a + H_b + X_b>", fixed(ch(Xa=1), ch(Xab=1), ch(Ha=2, Hb=1, Xb=1))
    ),
    no_transporter(
        "T10.r4", 10, "<Y_a, Y_ab, 2H_a + H_b + X_b>", fixed(ch(Ya=1), ch(Yab=1), ch(Ha=2, Hb=1, Xb=1))
    ),
    CaseRecord(
        id="T10.r5",
        table=10,
        complex_name="<X_a + X_b, X_ab, H_a + H_b>",
        complex_rep=fixed(ch(Xa=1, Xb=1), ch(Xab=1), ch(Ha=1, Hb=1)),
        disposition="has_real_points",
        transporter="rot13",
        cocycle="rot13",
        real_points=(RealPoint(("g_reg",), "rot13", "u_3_2"),),
        families=(("fam_reg", 0),),
        assertions=(ODD_COMPONENTS,),
        expected_real_orbit_count=1,
    ),
    CaseRecord(
        id="T10.r6",
        table=10,
        complex_name="<X_a, H_a, H_b>",
        complex_rep=fixed(ch(Xa=1), ch(Ha=1), ch(Hb=1)),
        disposition="has_real_points",
        transporter="swap12",
        cocycle="swap12",
        real_points=(RealPoint(("g3",), "swap12", "u_3_3"),),
        families=(("fam_x_h", 0),),
        expected_real_orbit_count=1,
    ),
    no_transporter(
        "T10.r7",
        10,
        "<X_a, X_ab, (a - 1) H_a + a H_b>",
        (VectorTemplate(ch(Xa=1)), VectorTemplate(ch(Xab=1)), VectorTemplate(ch(Ha=-1), ch(Ha=1, Hb=1))),
        ParamRange(excluded=(fe(1), fe(-1)), text="complex, not 1, -1"),
    ),
    no_transporter(
        "T10.r8",
        10,
        "<X_a, Y_b, H_a + a H_b>",
        (VectorTemplate(ch(Xa=1)), VectorTemplate(ch(Yb=1)), VectorTemplate(ch(Ha=1), ch(Hb=1))),
        ParamRange(excluded=(fe(1), fe(-1)), text="complex, not 1, -1"),
    ),
    no_transporter("T10.r9", 10, "<X_a, X_ab, H_b>", fixed(ch(Xa=1), ch(Xab=1), ch(Hb=1))),
    no_transporter("T10.r10", 10, "<X_a, Y_b, H_a + H_b>", fixed(ch(Xa=1), ch(Yb=1), ch(Ha=1, Hb=1))),
    CaseRecord(
        id="T10.r11",
        table=10,
        complex_name="<X_a, X_b, X_ab>",
        complex_rep=fixed(ch(Xa=1), ch(Xb=1), ch(Xab=1)),
        disposition="has_real_points",
        transporter="rot13",
        cocycle="rot13",
        real_points=(RealPoint(("g_reg",), "rot13", "u_3_1"),),
        families=(("fam_circle", 0),),
        expected_real_orbit_count=1,
    ),
    # ---- four- and five-dimensional solvable ---------------------------------------
    no_transporter("T11.r1", 11, "<X_a, X_ab, H_a, H_b>", fixed(ch(Xa=1), ch(Xab=1), ch(Ha=1), ch(Hb=1))),
    no_transporter("T11.r2", 11, "<X_a, Y_b, H_a, H_b>", fixed(ch(Xa=1), ch(Yb=1), ch(Ha=1), ch(Hb=1))),
    CaseRecord(
        id="T11.r3",
        table=11,
        complex_name="<X_a, X_b, X_ab, H_a + H_b>",
        complex_rep=fixed(ch(Xa=1), ch(Xb=1), ch(Xab=1), ch(Ha=1, Hb=1)),
        disposition="has_real_points",
        transporter="rot31",
        cocycle="rot31",
        real_points=(RealPoint(("g_xab",), "rot31", "u_4_1"),),
        families=(("fam_flag", 0),),
        expected_real_orbit_count=1,
    ),
    no_transporter(
        "T11.r4",
        11,
        "<X_a, X_b, X_ab, a H_a + H_b>",
        (
            VectorTemplate(ch(Xa=1)),
            VectorTemplate(ch(Xb=1)),
            VectorTemplate(ch(Xab=1)),
            VectorTemplate(ch(Hb=1), ch(Ha=1)),
        ),
        ParamRange(excluded=(fe(1), fe(-1)), text="complex, not 1, -1"),
    ),
    no_transporter("T11.r5", 11, "<X_a, X_b, X_ab, H_a>", fixed(ch(Xa=1), ch(Xb=1), ch(Xab=1), ch(Ha=1))),
    CaseRecord(
        id="T11.r6",
        table=11,
        complex_name="<X_a, X_b, X_ab, H_a - H_b>",
        complex_rep=fixed(ch(Xa=1), ch(Xb=1), ch(Xab=1), ch(Ha=1, Hb=-1)),
        disposition="has_real_points",
        transporter="rot31",
        cocycle="rot31",
        real_points=(RealPoint(("g_xab",), "rot31", "u_4_2"),),
        families=(("fam_flag", 0),),
        expected_real_orbit_count=1,
    ),
    CaseRecord(
        id="T11.r7",
        table=11,
        complex_name="<X_a, X_b, X_ab, H_a, H_b>",
        complex_rep=fixed(ch(Xa=1), ch(Xb=1), ch(Xab=1), ch(Ha=1), ch(Hb=1)),
        disposition="has_real_points",
        transporter="rot31",
        cocycle="rot31",
        real_points=(RealPoint(("g_xab",), "rot31", "u_5_1"),),
        families=(("fam_flag", 0),),
        expected_real_orbit_count=1,
    ),
    # ---- Levi decomposable ---------------------------------------------------------
    CaseRecord(
        id="T12.r1",
        table=12,
        complex_name="<X_ab, Y_ab, H_a + H_b> + <H_a - H_b>",
        complex_rep=fixed(ch(Xab=1), ch(Yab=1), ch(Ha=1, Hb=1), ch(Ha=1, Hb=-1)),
        disposition="has_real_points",
        transporter="I",
        cocycle="I",
        real_points=(
            RealPoint((), "I", "u_4_3"),
            RealPoint(("g2",), "T(1,-1)", "u_4_4"),
        ),
        nontrivial_classes=("T(-1,-1)",),
        expected_real_orbit_count=2,
    ),
    no_transporter(
        "T12.r2", 12, "<X_ab, Y_ab, H_a + H_b> + <X_a, Y_b>", fixed(ch(Xab=1), ch(Yab=1), ch(Ha=1, Hb=1), ch(Xa=1), ch(Yb=1))
    ),
    no_transporter(
        "T12.r3", 12, "<X_ab, Y_ab, H_a + H_b> + <X_b, Y_a>", fixed(ch(Xab=1), ch(Yab=1), ch(Ha=1, Hb=1), ch(Xb=1), ch(Ya=1))
    ),
    no_transporter(
        "T12.r4",
        12,
        "<X_ab, Y_ab, H_a + H_b> + <X_a, Y_b, H_a - H_b>",
        fixed(ch(Xab=1), ch(Yab=1), ch(Ha=1, Hb=1), ch(Xa=1), ch(Yb=1), ch(Ha=1, Hb=-1)),
    ),
    no_transporter(
        "T12.r5",
        12,
        "<X_ab, Y_ab, H_a + H_b> + <X_b, Y_a, H_a - H_b>",
        fixed(ch(Xab=1), ch(Yab=1), ch(Ha=1, Hb=1), ch(Xb=1), ch(Ya=1), ch(Ha=1, Hb=-1)),
    ),
)


def case_sort_key(case_id: str) -> tuple:
    """Natural order: T7.r4 before T10.r1, r2 before r10."""
    return tuple(int(p) if p.isdigit() else p for p in re.split(r"(\d+)", case_id))


def row_of(case_id: str) -> str:
    """'T7.r4.generic' -> 'T7.r4'."""
    return ".".join(case_id.split(".")[:2])


@lru_cache(maxsize=None)
def real_family_index() -> dict[str, RealFamily]:
    return {f.label: f for f in REAL_FAMILIES}
