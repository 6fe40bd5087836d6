"""Acceptance criteria, one test each.

Every test prints a single ``criterion N ... PASS|FAIL`` line.  Running the
file directly prints the same lines without pytest.
"""

from __future__ import annotations

import itertools
import os
import subprocess
import sys
import time
from functools import lru_cache

import pytest

from su21.catalog import FAMILIES, get_case, get_real_family, load_catalog, matrix, product, real_families
from su21.catalog.witnesses import NEGATIVE_CONTROL
from su21.cohomology import (
    TorusSigmaType,
    check_coboundary,
    check_family_tau_action,
    default_samples,
    is_cocycle,
    sl3_class,
    torus_class,
)
from su21.field import I, ONE, SQRT2, ZERO, fe
from su21.invariants import eigenvalue_scaling_match, eta_condition_holds, fingerprint, jordan_claim_check, separate
from su21.linalg import Matrix3
from su21.liealg import (
    A_BASIS,
    CHEVALLEY,
    bracket,
    conjugate_subalgebra,
    in_su21_group,
    span_equal,
    tau_alg,
    tau_subalgebra,
)
from su21.verifier import Status, verify_all
from su21.verifier.search import search_with_word

LAMBDAS = [fe(x) for x in ("-3", "-1/2", "1/3", "5/2", "7/4")]


@lru_cache(maxsize=None)
def full_report():
    return verify_all()


def _statuses(prefix: str):
    return [r for r in full_report().results if r.check_name.startswith(prefix)]


def basis_fidelity():
    start = time.perf_counter()
    for x in A_BASIS:
        assert tau_alg(x) == x and x.trace() == ZERO
    E = Matrix3.unit
    printed = [
        Matrix3.diag(1, -1, 0),
        Matrix3.diag(0, 1, -1),
        E(1, 2),
        E(2, 3),
        -E(1, 3),
        E(2, 1),
        E(3, 2),
        -E(3, 1),
    ]
    assert list(CHEVALLEY) == printed
    n = 0
    for x, y, z in itertools.product(A_BASIS, repeat=3):
        assert (bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, bracket(x, y))).is_zero()
        n += 1
    elapsed = time.perf_counter() - start
    assert n == 512 and elapsed < 1.0
    return f"8 + 8 matrices, {n} Jacobi triples in {elapsed:.2f} s"


def witness_suite():
    def transports(g, case_id, a=None):
        u = get_case(case_id).complex_span(a)
        return span_equal(conjugate_subalgebra(g, u), tau_subalgebra(u))

    unit = (3 + 4 * I) / 5  # |a| = 1
    assert transports(matrix("rot12"), "T7.r2")
    assert transports(matrix("rot13").inverse(), "T7.r1")
    assert transports(matrix("rot13"), "T7.r1")
    assert transports(matrix("rot13"), "T7.r4.unit_circle", unit)
    assert transports(matrix("swap12"), "T8.r5")
    assert transports(matrix("swap12"), "T8.r2")
    assert transports(matrix("rot31"), "T8.r1")
    for h in ("h_xa", "rot13", "swap12"):
        assert is_cocycle(matrix(h))
    pairs = [
        ("g_xa", "h_xa"),
        ("g_reg", "rot13"),
        ("g3", "swap12"),
        ("g1", "T(-1,1)"),
        ("g2", "T(1,-1)"),
        ("g_xab", "rot31"),
    ]
    for g, h in pairs:
        assert check_coboundary(matrix(g), matrix(h)), (g, h)
    bad = [r for p in ("a.", "b.", "c.") for r in _statuses(p) if r.status is not Status.PASS]
    assert not bad, bad[:3]
    n = sum(len(_statuses(p)) for p in ("a.transporter", "b.", "c.coboundary"))
    return f"{len(pairs)} coboundary pairs, {n} report witness checks, 0 failures"


def table_reproduction():
    fams = [f for f in real_families() if not f.redundant]
    assert len(fams) == 24
    for kind in ("table.closed", "table.real", "table.dim"):
        rows = _statuses(kind)
        labels = {r.check_name[len(kind) + 1 :].split("]")[0] for r in rows}
        assert {f.label for f in fams} <= labels
        assert all(r.status is Status.PASS for r in rows)
    points = _statuses("d.real_point")
    assert points and all(r.status is Status.PASS for r in points)
    for case in load_catalog():
        if case.parametrized and case.real_points:
            got = {r.check_name.split("@")[1] for r in points if r.case_id == case.id}
            assert len(got) >= 5, case.id
    for label in ("u_1_5", "u_1_7", "u_2_6"):
        got = {r.check_name for r in _statuses(f"table.closed[{label}]")}
        assert len(got) >= 5
    return f"24 families closed/real/sized, {len(points)} real points span-equal their rows"


def stabilizer_tau_actions():
    assert len(FAMILIES) == 9
    for name, fam in FAMILIES.items():
        samples = default_samples(fam.arity)
        assert len(samples) >= 5
        assert check_family_tau_action(fam, samples), name
        assert not check_family_tau_action(fam, samples, NEGATIVE_CONTROL[fam.claimed]), name
    rows = _statuses("f.tau_action") + _statuses("f.negative_control")
    assert rows and all(r.status is Status.PASS for r in rows)
    return "9 families hold at 5 samples; 9 negative controls rejected"


def eigenvalue_claims():
    for lam in LAMBDAS:
        assert jordan_claim_check(lam)
        assert eta_condition_holds(lam)
    lines = []
    for lam in LAMBDAS:
        lines.append(("u_1_5", get_real_family("u_1_5").instantiate(lam).basis()[0]))
        lines.append(("u_1_7", get_real_family("u_1_7").instantiate(lam).basis()[0]))
    lines.append(("u_1_6", get_real_family("u_1_6").instantiate().basis()[0]))
    pairs = 0
    for (f, x), (g, y) in itertools.combinations(lines, 2):
        if f != g:
            assert not eigenvalue_scaling_match(x, y), (f, g)
            pairs += 1
    return f"Jordan and eta checks at {len(LAMBDAS)} values; {pairs} cross-family pairs unmatched"


def equivalence_reductions():
    c = matrix("c_v4")
    assert in_su21_group(c)
    for lam in (fe("1/3"), fe("-1/2"), fe("3/4")):
        src, dst = get_real_family("v_4").instantiate(lam), get_real_family("u_1_7").instantiate(lam)
        assert span_equal(conjugate_subalgebra(c, src), dst)
    found = set()
    for lam in (fe(-3), fe("1/3"), fe("5/2")):
        for src, s, dst, t in (
            ("u_1_5", lam, "v_1", (lam - 1) / lam),
            ("u_1_5", lam, "v_2", -ONE / (lam - 1)),
            ("u_1_7", lam, "v_3", lam / 2),
        ):
            a, b = get_real_family(src).instantiate(s), get_real_family(dst).instantiate(t)
            hit = search_with_word(a, b, 3)
            assert hit is not None, (src, dst, lam)
            word, g = hit
            assert in_su21_group(g) and span_equal(conjugate_subalgebra(g, a), b)
            found.add("*".join(word))
    rows = _statuses("h.equivalence")
    assert rows and all(r.status is Status.PASS for r in rows)
    return "c_v4 at 3 samples; searched witnesses " + ", ".join(sorted(found))


def cohomology_consistency():
    K = TorusSigmaType
    assert torus_class(1, K.INV).trivial and not torus_class(-1, K.INV).trivial
    assert torus_class((2, 2), K.SWAP_INV).trivial
    assert torus_class((ONE + I, ONE - I), K.SWAP_INV).trivial
    n = 0
    for case in load_catalog():
        for p in case.real_points:
            assert check_coboundary(product(p.conjugator), matrix(p.cocycle))
            assert sl3_class(matrix(p.cocycle)) == "trivial"
            n += 1
    assert sl3_class(Matrix3.diag(-1, -1, 1)) == "nontrivial"
    u23, u24 = (get_real_family(x).instantiate() for x in ("u_2_3", "u_2_4"))
    u35, u36 = (get_real_family(x).instantiate() for x in ("u_3_5", "u_3_6"))
    assert separate(u23, u24) is not None
    assert fingerprint(u35).killing_signature == (2, 1, 0)
    assert fingerprint(u36).killing_signature == (0, 3, 0)
    assert separate(u35, u36) is not None
    return f"{n} catalogued coboundaries trivial; dashed pairs separated"


def unverifiable_ledger():
    rows = full_report().by_status(Status.UNVERIFIABLE)
    by_name = {}
    for r in rows:
        by_name.setdefault(r.check_name, set()).add(r.case_id)
    discarded = {c.id for c in load_catalog() if c.disposition == "no_transporter"}
    expected = {
        "i.assertion[sign_separation]": {"T8.r9"},
        "i.assertion[fiber]": {"T7.r4.lambda0"},
        "i.assertion[gl2_classes]": {"T7.r4.lambda2"},
        "i.assertion[nonexistence]": discarded,
    }
    assert by_name == expected, by_name
    return f"{len(rows)} unverifiable items, all catalogued"


def determinism():
    cmd = [sys.executable, "-m", "su21.verifier", "verify", "--format", "json"]
    env = dict(os.environ)
    start = time.perf_counter()
    first = subprocess.run(cmd, capture_output=True, env=env, check=False)
    elapsed = time.perf_counter() - start
    second = subprocess.run(cmd, capture_output=True, env=env, check=False)
    assert first.returncode == 0 and second.returncode == 0
    assert first.stdout == second.stdout and first.stdout
    assert elapsed < 60
    return f"{len(first.stdout)} identical bytes, full run {elapsed:.1f} s"


CRITERIA = [
    (1, "basis fidelity", basis_fidelity),
    (2, "witness suite", witness_suite),
    (3, "table reproduction", table_reproduction),
    (4, "stabilizer tau-actions", stabilizer_tau_actions),
    (5, "eigenvalue claims", eigenvalue_claims),
    (6, "equivalence reductions", equivalence_reductions),
    (7, "cohomology consistency", cohomology_consistency),
    (8, "unverifiable ledger", unverifiable_ledger),
    (9, "determinism", determinism),
]


def run(fn):
    try:
        return True, fn()
    except AssertionError as exc:
        return False, f"assertion failed {exc}"


def _line(num, name, ok, detail):
    return f"criterion {num} {name:<24} {'PASS' if ok else 'FAIL'}  {detail}"


@pytest.mark.parametrize("num, name, fn", CRITERIA, ids=[f"c{n}_{name.replace(' ', '_')}" for n, name, _ in CRITERIA])
def test_criterion(num, name, fn, capsys):
    ok, detail = run(fn)
    with capsys.disabled():
        print("\n" + _line(num, name, ok, detail))
    assert ok, detail


if __name__ == "__main__":
    results = [(n, name, *run(fn)) for n, name, fn in CRITERIA]
    for r in results:
        print(_line(*r))
    sys.exit(0 if all(r[2] for r in results) else 1)
