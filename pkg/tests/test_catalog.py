import io
import json
from collections import Counter

import pytest
from hypothesis import given
from hypothesis import strategies as st

from su21.catalog import (
    SCHEMA_VERSION,
    case_witnesses,
    cases_for_family,
    cases_for_table,
    export_json,
    get_case,
    get_real_family,
    import_json,
    instantiate,
    load_catalog,
    matrix,
    product,
    real_families,
    row_of,
    target_subalgebra,
)
from su21.cohomology import check_stabilizer_membership
from su21.errors import IOFailure, OutOfRange, SchemaMismatch, UnknownCase
from su21.field import I, SQRT2, fe, to_json
from su21.liealg import A_BASIS, a_coords, conjugate_subalgebra, is_closed, is_real_span, span_equal, span_of

a = dict(enumerate(A_BASIS, start=1))
TABLE_DIMS = {1: {1}, 2: {2}, 3: {3}, 4: {3}, 5: {4, 5}, 6: {4}}


def _sample(fam):
    return fam.instantiate(fe("1/3")) if fam.parametrized else fam.instantiate()


def test_real_family_counts():
    counts = Counter(f.table for f in real_families(include_redundant=False))
    assert dict(counts) == {1: 7, 2: 6, 3: 3, 4: 3, 5: 3, 6: 2}
    assert sum(counts.values()) == 24
    assert sorted(f.label for f in real_families() if f.redundant) == ["v_1", "v_2", "v_3", "v_4"]


def test_complex_row_counts():
    rows = {row_of(c.id) for c in load_catalog()}
    counts = Counter(int(r.split(".")[0][1:]) for r in rows)
    assert dict(counts) == {7: 4, 8: 9, 9: 2, 10: 11, 11: 7, 12: 5}


def test_table5_dimensions_as_labelled():
    dims = {f.label: f.dim for f in real_families() if f.table == 5}
    assert dims == {"u_4_1": 4, "u_4_2": 4, "u_5_1": 5}


@pytest.mark.parametrize("fam", real_families(), ids=lambda f: f.label)
def test_real_family_closed_real_and_sized(fam):
    u = _sample(fam)
    assert is_closed(u)[0]
    assert is_real_span(u)
    assert u.dim == fam.dim and u.dim in TABLE_DIMS[fam.table]


@pytest.mark.parametrize("case", load_catalog(), ids=lambda c: c.id)
def test_complex_rep_closed(case):
    u = case.complex_span(fe(3)) if case.complex_rep and any(v.parametrized for v in case.complex_rep) else case.complex_span()
    assert u.scalar_domain == "complex"
    assert is_closed(u)[0]


def test_printed_rows():
    u12 = get_real_family("u_1_2").instantiate()
    assert span_equal(u12, span_of([a[3] + a[4] + a[7] - a[8]]))
    assert span_equal(get_real_family("u_4_4").instantiate(), span_of([a[1], a[2], a[3], a[4]]))
    u51 = span_of([a[1] - a[2], a[1] + a[2] + a[6], a[5], a[3] - a[7], a[4] + a[8]])
    assert span_equal(get_real_family("u_5_1").instantiate(), u51)


def test_instantiate_examples():
    assert span_equal(instantiate("u_1_5", {"lambda": 0}), span_of([a[1]]))
    with pytest.raises(OutOfRange):
        instantiate("u_1_7", {"lambda": 0})
    s2 = SQRT2
    expected = span_of(
        [
            a[1] + a[2].scale(2) - a[4] + (a[6] - a[8]).scale(s2),
            a[1].scale(2) + a[2].scale(4) + a[4].scale(6) - (a[5] - a[7]).scale(s2),
        ]
    )
    assert span_equal(instantiate(get_real_family("u_2_6"), {"lambda": 1}), expected)


def test_instantiate_cases():
    case = get_case("T7.r4.generic")
    with pytest.raises(OutOfRange):
        instantiate(case)
    with pytest.raises(OutOfRange):
        instantiate(case, {"lambda": 2})
    bound = instantiate(case, {"lambda": fe("5/2")})
    assert bound.binding == fe("5/2") and bound.complex_parameter() is not None
    assert instantiate(get_case("T7.r1")) is get_case("T7.r1")
    with pytest.raises(OutOfRange):
        instantiate(get_case("T7.r1"), {"lambda": 1})
    with pytest.raises(OutOfRange):
        instantiate("v_4", fe(1))
    with pytest.raises(OutOfRange):
        instantiate("u_1_5", fe(1) + I)


@given(st.fractions(min_value=-20, max_value=20, max_denominator=9))
def test_parametrized_instances_are_real_subalgebras(t):
    t = fe(t)
    for label in ("u_1_5", "u_2_6"):
        u = instantiate(label, t)
        assert is_real_span(u) and is_closed(u)[0]
        assert u.parameters["lambda"] == t


def test_lookup_errors():
    with pytest.raises(UnknownCase):
        get_case("nonexistent")
    with pytest.raises(UnknownCase):
        get_real_family("u_9_9")
    with pytest.raises(OutOfRange):
        cases_for_table(7)


def test_table_and_family_queries():
    assert [c.id for c in cases_for_table(4)] == ["T9.r1", "T9.r2"]
    assert {p.target for c in cases_for_table(4) for p in c.real_points} == {"u_3_4", "u_3_5", "u_3_6"}
    assert [c.id for c in cases_for_family("u_1_2")] == ["T7.r1"]


def test_no_transporter_cases_carry_no_witnesses():
    discarded = [c for c in load_catalog() if c.disposition == "no_transporter"]
    assert len(discarded) == 20
    for c in discarded:
        assert c.transporter is None and c.cocycle is None and not c.real_points
        assert case_witnesses(c) == []
        assert [x.name for x in c.assertions] == ["nonexistence"]


def test_dashed_groupings_share_a_complex_rep():
    """Both real reps of one complex orbit complexify into that orbit."""
    for case_id in ("T8.r5", "T9.r1", "T12.r1"):
        case = get_case(case_id)
        for p in case.real_points:
            g = product(p.conjugator)
            real_point = conjugate_subalgebra(g, case.complex_span())
            assert span_equal(real_point, target_subalgebra(case, p).complexify())


def test_cartan_pair_real_point():
    u = get_case("T8.r5").complex_span()
    v = conjugate_subalgebra(matrix("g3"), u)
    corrected = span_of([a[5] - a[7], a[1] + a[2].scale(2) + a[4].scale(3)])
    assert span_equal(v, corrected.complexify())
    assert span_equal(get_real_family("u_2_4").instantiate(), corrected)
    printed = get_real_family("u_2_4").printed()
    assert span_equal(printed, span_of([a[6] - a[7], a[1] + a[2].scale(2) + a[4].scale(3)]))
    assert not is_closed(printed)[0]
    assert check_stabilizer_membership(matrix("swap12"), u)


def test_export_is_byte_stable_and_round_trips(tmp_path):
    text = export_json()
    assert export_json() == text
    doc = json.loads(text)
    assert doc["schema_version"] == SCHEMA_VERSION
    ids = [c["id"] for c in doc["cases"]]
    assert ids == [c.id for c in load_catalog()]
    cases, fams = import_json(text)
    assert [c.to_json() for c in cases] == [c.to_json() for c in load_catalog()]
    assert export_json(cases=cases, families=fams) == text
    path = tmp_path / "catalog.json"
    export_json(path)
    assert path.read_text() == text
    buf = io.StringIO()
    export_json(buf)
    assert buf.getvalue() == text
    assert import_json(path)[0] == cases


def test_exported_u11_coefficients():
    doc = json.loads(export_json())
    (u11,) = [f for f in doc["real_families"] if f["label"] == "u_1_1"]
    (vec,) = u11["vectors"]
    s = SQRT2
    expected = [fe(-1), fe(-2), fe(0), fe(-1), fe(0), s, fe(0), s]
    assert vec["const"] == [to_json(x) for x in expected]


def test_field_elements_exported_as_string_pairs():
    doc = json.loads(export_json())
    entry = doc["witness_matrices"]["g_xa"][2]
    assert entry == [["0", "1"], ["1", "2"], ["0", "1"], ["-1", "2"]]


def test_import_rejects_wrong_schema(tmp_path):
    doc = json.loads(export_json())
    doc["schema_version"] = "other/0"
    with pytest.raises(SchemaMismatch):
        import_json(json.dumps(doc))
    doc = json.loads(export_json())
    doc["witness_matrices"]["rot12"] = doc["witness_matrices"]["rot13"]
    with pytest.raises(SchemaMismatch):
        import_json(json.dumps(doc))


def test_io_failures(tmp_path):
    with pytest.raises(IOFailure):
        export_json(tmp_path / "missing" / "x.json")
    with pytest.raises(IOFailure):
        import_json(tmp_path / "absent.json")


def test_case_witness_roles():
    roles = {(w.name, w.role) for w in case_witnesses(get_case("T7.r2"))}
    assert roles == {
        ("rot12", "transporter_g0"),
        ("h_xa", "cocycle_h"),
        ("g_xa", "coboundary_solution"),
        ("fam_xa", "torus_family"),
    }
