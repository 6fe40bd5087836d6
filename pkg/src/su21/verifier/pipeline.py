"""Per-case verification and the full run.

Every check is independent: a failing or raising witness becomes a failed
CheckResult and the remaining checks still run.  Check names start with a
step letter so the report order follows the construction:

a transporter, b cocycle, c coboundary and cohomology, d real point,
e closure and realness, f torus families, g stabilizer spot checks,
h equivalences, i assertions and discarded cases, j eigenvalue claims.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Callable, Iterable, Mapping, Sequence

from ..catalog import (
    CaseRecord,
    Equivalence,
    RealFamily,
    family,
    get_real_family,
    instantiate,
    load_catalog,
    matrix,
    product,
    real_families,
    row_of,
    target_subalgebra,
)
from ..catalog.witnesses import MATRICES, NEGATIVE_CONTROL, PRINTED_CIRCLE2
from ..cohomology import (
    TorusSigmaType,
    check_coboundary,
    check_family_conjugator,
    check_family_multiplicative,
    check_family_tau_action,
    check_stabilizer_membership,
    check_transform_involution,
    default_pairs,
    default_samples,
    is_cocycle,
    sl3_class,
    torus_class,
)
from ..errors import OutOfRange
from ..field import I, FieldElement, fe
from ..invariants import (
    eta_condition_holds,
    jordan_claim_check,
    nonabelian_pair_invariant,
    separate,
)
from ..linalg import IDENTITY, Matrix3
from ..liealg import (
    A_BASIS,
    CHEVALLEY,
    CHEVALLEY_NAMES,
    Subalgebra,
    bracket,
    conjugate_subalgebra,
    in_su21_group,
    is_closed,
    is_real_span,
    span_equal,
    tau_alg,
    tau_subalgebra,
)
from .report import CheckResult, Report, Status, check
from .search import format_word, search_with_word

DEFAULT_LAMBDAS: tuple[FieldElement, ...] = tuple(fe(x) for x in ("-3", "-1/2", "1/3", "1", "5/2"))
BACKFILL_LAMBDAS: tuple[FieldElement, ...] = tuple(fe(x) for x in ("7/4", "-5", "3/4", "-1/3", "1/5", "-2/3", "2/5"))
MIN_SAMPLES = 5

Samples = Mapping[str, Sequence[FieldElement]]


def _at(name: str, t: FieldElement | None) -> str:
    return name if t is None else f"{name}@lambda={t}"


class _Recorder:
    """Collects results for one case; exceptions inside a check become failures."""

    def __init__(self, case_id: str):
        self.case_id = case_id
        self.row = row_of(case_id)
        self.results: list[CheckResult] = []

    def run(self, name: str, anchor: str, fn: Callable[[], object], detail: str = "") -> None:
        try:
            out = fn()
        except Exception as exc:  # noqa: BLE001 - isolation is the point
            self.results.append(
                CheckResult(self.case_id, name, Status.FAIL, f"{type(exc).__name__}: {exc}", f"{self.row}/{anchor}")
            )
            return
        if isinstance(out, tuple):
            ok, extra = out
        else:
            ok, extra = bool(out), ""
        text = "; ".join(s for s in (detail, extra) if s)
        self.results.append(check(self.case_id, name, ok, text, f"{self.row}/{anchor}"))

    def add(self, name: str, anchor: str, status: Status, detail: str) -> None:
        self.results.append(CheckResult(self.case_id, name, status, detail, f"{self.row}/{anchor}"))


# -- samples ---------------------------------------------------------------------------


def _valid_case_binding(case: CaseRecord, t: FieldElement) -> bool:
    try:
        bound = instantiate(case, t)
        bound.complex_parameter()
        for p in case.real_points:
            target_subalgebra(bound, p)
    except (OutOfRange, ZeroDivisionError):
        return False
    return True


def _fill(valid: Callable[[FieldElement], bool], preferred: Iterable[FieldElement] = DEFAULT_LAMBDAS) -> list:
    out = [t for t in preferred if valid(t)]
    for t in BACKFILL_LAMBDAS:
        if len(out) >= MIN_SAMPLES:
            break
        if t not in out and valid(t):
            out.append(t)
    return out


def default_case_samples(case: CaseRecord) -> list[FieldElement]:
    """Rational sample values for a parametrized case, at least five when possible."""
    if not case.parametrized:
        return []
    return _fill(lambda t: _valid_case_binding(case, t))


def family_samples(fam: RealFamily) -> list[FieldElement]:
    if not fam.parametrized:
        return []
    return _fill(fam.param_range.contains)


def equivalence_samples(case: CaseRecord, eq: Equivalence) -> list[FieldElement]:
    src, dst = get_real_family(eq.source), get_real_family(eq.target)

    def valid(t):
        if case.param_family == eq.source and not case.param_range.contains(t):
            return False
        try:
            src.instantiate(t)
            dst.instantiate(eq.param_map(t))
        except (OutOfRange, ZeroDivisionError):
            return False
        return True

    return _fill(valid)


# -- case checks -------------------------------------------------------------------------


def _effective_transporter(case: CaseRecord) -> Matrix3:
    g = matrix(case.transporter)
    return g.inverse() if case.transporter_inverse else g


def _check_complex_rep(rec: _Recorder, case: CaseRecord, a: FieldElement | None = None) -> None:
    """Closure of the complex rep; ``a`` fixes the coefficient of a parametrized template."""

    def closed():
        ok, bad = is_closed(case.complex_span(a))
        return ok, "" if ok else f"brackets leave the span at {bad}"

    name = "e.complex_closed" if a is None else f"e.complex_closed@a={a}"
    rec.run(name, "complex_rep", closed)


def _real_point_checks(rec: _Recorder, case: CaseRecord, t: FieldElement | None) -> None:
    u = case.complex_span()
    T = _effective_transporter(case)
    h = matrix(case.cocycle)
    tname = case.transporter + ("^-1" if case.transporter_inverse else "")
    tinv = case.transporter + ("" if case.transporter_inverse else "^-1")

    rec.run(
        _at("a.transporter", t),
        "transporter",
        lambda: span_equal(conjugate_subalgebra(T, u), tau_subalgebra(u)),
        f"{tname} . u = tau(u)",
    )
    rec.run(_at("b.cocycle", t), "cocycle", lambda: is_cocycle(h), f"{case.cocycle} tau({case.cocycle}) = 1")
    rec.run(
        _at("b.coset", t),
        "cocycle",
        lambda: check_stabilizer_membership(h @ T, u),
        f"{case.cocycle} lies in Z(u) {tinv}",
    )
    for p in case.real_points:
        C = product(p.conjugator)
        c = matrix(p.cocycle)
        cname = format_word(p.conjugator)
        tag = f"[{p.target}]"
        rec.run(
            _at("c.coboundary" + tag, t),
            "coboundary",
            lambda C=C, c=c: check_coboundary(C, c),
            f"{cname}^-1 tau({cname}) = {p.cocycle}",
        )
        rec.run(
            _at("c.coset" + tag, t),
            "coboundary",
            lambda c=c: check_stabilizer_membership(c @ T, u),
            f"{p.cocycle} lies in Z(u) {tinv}",
        )
        rec.run(
            _at("c.sl3_class" + tag, t),
            "coboundary",
            lambda c=c: (sl3_class(c) == "trivial", sl3_class(c)),
            f"class of {p.cocycle} in H^1(SL3)",
        )

        def real_point(C=C, p=p):
            img = conjugate_subalgebra(C, u)
            target = target_subalgebra(case, p)
            if not is_real_span(img):
                return False, "image is not tau-stable"
            return span_equal(img, target.complexify()), f"equals {target.label}"

        rec.run(_at("d.real_point" + tag, t), "real_point", real_point, f"{cname} . u")


def _nontrivial_checks(rec: _Recorder, case: CaseRecord) -> None:
    for n in case.nontrivial_classes:
        m = matrix(n)
        rec.run(
            f"c.nontrivial[{n}]",
            "cohomology",
            lambda m=m: is_cocycle(m) and sl3_class(m) == "nontrivial",
            "cocycle outside the kernel of H^1(Z) -> H^1(SL3); no real point",
        )


def _family_checks(rec: _Recorder, case: CaseRecord, bound: Sequence[CaseRecord]) -> None:
    for name, k in case.families:
        f = family(name)
        s = default_samples(f.arity)
        w = matrix(f.conjugator)
        wrong = NEGATIVE_CONTROL[f.claimed]
        rec.run(f"f.tau_action[{name}]", "torus_family", lambda f=f, s=s: check_family_tau_action(f, s), f"claim {f.claimed.value}")
        rec.run(
            f"f.negative_control[{name}]",
            "torus_family",
            lambda f=f, s=s, wrong=wrong: not check_family_tau_action(f, s[:1], wrong),
            f"claim {wrong.value} is rejected",
        )
        rec.run(
            f"f.multiplicative[{name}]",
            "torus_family",
            lambda f=f: check_family_multiplicative(f, default_pairs(f.arity)),
        )
        rec.run(
            f"f.involution[{name}]",
            "torus_family",
            lambda f=f, s=s: check_transform_involution(f.claimed, s),
        )
        rec.run(
            f"f.conjugator[{name}]",
            "torus_family",
            lambda f=f, s=s, w=w: check_family_conjugator(f, w, s),
            f"{f.conjugator} T {f.conjugator}^-1",
        )
        if name == "fam_circle2":
            rec.run(
                f"f.printed_erratum[{name}]",
                "torus_family",
                lambda s=s, w=w: not check_family_conjugator(PRINTED_CIRCLE2, w, s),
                "typeset (2,1) and (3,3) entries do not match the conjugated torus; corrected entries used",
            )
        for b in bound:
            p = b.real_points[k]

            def stabilizes(b=b, p=p, f=f, s=s):
                img = conjugate_subalgebra(product(p.conjugator), b.complex_span())
                return all(check_stabilizer_membership(f(q), img) for q in s)

            rec.run(_at(f"g.family_stabilizes[{name}]", b.binding), "stabilizer", stabilizes)


def _stabilizer_spots(rec: _Recorder, case: CaseRecord) -> None:
    if not (case.stabilizer_members or case.stabilizer_nonmembers):
        return
    u = case.complex_span()
    for n in case.stabilizer_members:
        rec.run(f"g.member[{n}]", "stabilizer", lambda n=n: check_stabilizer_membership(matrix(n), u))
    for n in case.stabilizer_nonmembers:
        rec.run(f"g.nonmember[{n}]", "stabilizer", lambda n=n: not check_stabilizer_membership(matrix(n), u))


def _equivalence_checks(rec: _Recorder, case: CaseRecord, samples: Sequence[FieldElement] | None) -> None:
    for eq in case.equivalences:
        src, dst = get_real_family(eq.source), get_real_family(eq.target)
        pts = list(samples) if samples is not None and eq.source == case.param_family else equivalence_samples(case, eq)
        tag = f"[{eq.source}->{eq.target}]"
        for t in pts:
            if eq.conjugator is not None:
                g = matrix(eq.conjugator)

                def fixed(g=g, t=t):
                    if not in_su21_group(g):
                        return False, f"{eq.conjugator} is not in SU(2,1)"
                    img = conjugate_subalgebra(g, src.instantiate(t))
                    return span_equal(img, dst.instantiate(eq.param_map(t))), f"by {eq.conjugator}"

                rec.run(_at("h.equivalence" + tag, t), "equivalence", fixed)
            else:

                def searched(t=t):
                    a, b = src.instantiate(t), dst.instantiate(eq.param_map(t))
                    found = search_with_word(a, b, eq.search_depth)
                    if found is None:
                        return False, f"no witness up to depth {eq.search_depth}"
                    word, g = found
                    ok = in_su21_group(g) and span_equal(conjugate_subalgebra(g, a), b)
                    return ok, f"found {format_word(word)}"

                rec.run(_at("h.equivalence" + tag, t), "equivalence", searched, "bounded search")


def _assertion_checks(rec: _Recorder, case: CaseRecord, samples: Sequence[FieldElement]) -> None:
    for a in case.assertions:
        if a.cited:
            rec.add(f"i.assertion[{a.name}]", "assertion", Status.SKIPPED, f"cited result: {a.detail}")
            continue
        detail = a.detail
        if a.name == "sign_separation":
            detail += "; " + _u26_sign_note(samples)
        rec.add(f"i.assertion[{a.name}]", "assertion", Status.UNVERIFIABLE, detail)
        if a.representatives:
            reps = a.representatives
            rec.run(
                f"i.representatives[{a.name}]",
                "assertion",
                lambda reps=reps: all(is_cocycle(matrix(n)) for n in reps),
                "each listed class representative is a cocycle: " + ", ".join(reps),
            )


def _u26_sign_note(samples: Sequence[FieldElement]) -> str:
    """Whether the normalized-charpoly invariant tells l and -l apart at the samples."""
    fam = get_real_family("u_2_6")
    hits = []
    for t in samples:
        if t and nonabelian_pair_invariant(fam.instantiate(t)) != nonabelian_pair_invariant(fam.instantiate(-t)):
            hits.append(str(t))
    if not hits:
        return "no invariant separates the samples"
    return "normalized charpoly invariant differs for +-l at l = " + ", ".join(hits) + " (not promoted to a certificate)"


def _u26_checks(rec: _Recorder, t: FieldElement) -> None:
    rec.run(_at("j.jordan", t), "eigenvalues", lambda: jordan_claim_check(t), "charpoly roots 2-4il, -2-4il, 8il")
    rec.run(_at("j.eta", t), "eigenvalues", lambda: eta_condition_holds(t), "matching eigenvalues forces eta = +-l")


EIGEN_CHECKS: dict[str, Callable[[_Recorder, FieldElement], None]] = {"u_2_6": _u26_checks}


def _no_real_points(rec: _Recorder, case: CaseRecord) -> None:
    T = matrix(case.transporter)
    for a in case.complex_samples:
        b = case.tau_map(a.conjugate())

        def image(a=a, b=b):
            return span_equal(conjugate_subalgebra(T, case.complex_span(b)), tau_subalgebra(case.complex_span(a)))

        rec.run(f"a.tau_image@a={a}", "tau_image", image, f"tau(u_a) = {case.transporter} . u_b with b = {b}")
        rec.run(
            f"a.not_in_orbit@a={a}",
            "tau_image",
            lambda a=a, b=b: all(m(a) != b for m in case.orbit_maps),
            "u_b is not conjugate to u_a, so the orbit has no real point",
        )


def _no_transporter(rec: _Recorder, case: CaseRecord) -> None:
    rec.add(
        "i.necessary_condition",
        "discarded",
        Status.SKIPPED,
        "disposition no_transporter: tau(u) is not conjugate to u, nothing to construct",
    )
    for a in case.assertions:
        rec.add(f"i.assertion[{a.name}]", "assertion", Status.UNVERIFIABLE, a.detail)


def verify_case(case: CaseRecord, bindings=None, samples: Sequence | None = None) -> list[CheckResult]:
    """Run every check for one case.

    A parametrized case is checked at ``bindings`` when given, otherwise at
    each of ``samples`` (default: :func:`default_case_samples`).
    """
    rec = _Recorder(case.id)
    if case.disposition == "no_transporter":
        _check_complex_rep(rec, case, fe(3) if case.param_range is not None else None)
        _no_transporter(rec, case)
        return rec.results
    if case.disposition == "no_real_points":
        for a in case.complex_samples:
            _check_complex_rep(rec, case, a)
        _no_real_points(rec, case)
        return rec.results

    if case.parametrized:
        if bindings is not None:
            pts = [instantiate(case, bindings).binding]
        else:
            pts = [fe(x) for x in samples] if samples is not None else default_case_samples(case)
        bound = [instantiate(case, t) for t in pts]
    else:
        pts, bound = [None], [case]

    for b in bound:
        if b.parametrized:
            _check_complex_rep(rec, b, b.complex_parameter())
        else:
            _check_complex_rep(rec, b)
        _real_point_checks(rec, b, b.binding)
    _nontrivial_checks(rec, case)
    _family_checks(rec, case, bound)
    _stabilizer_spots(rec, case)
    _equivalence_checks(rec, case, pts if case.parametrized else None)
    _assertion_checks(rec, case, [t for t in pts if t is not None])
    for t in pts:
        extra = EIGEN_CHECKS.get(case.param_family or "")
        if extra is not None:
            extra(rec, t)
    return rec.results


# -- catalog-wide checks -------------------------------------------------------------------


def _basis_checks() -> list[CheckResult]:
    rec = _Recorder("basis")
    for k, x in enumerate(A_BASIS, start=1):
        rec.run(f"a{k}.tau_fixed", "a_basis", lambda x=x: tau_alg(x) == x)
        rec.run(f"a{k}.traceless", "a_basis", lambda x=x: not x.trace())
    printed = {
        "H_alpha": Matrix3.diag(1, -1, 0),
        "H_beta": Matrix3.diag(0, 1, -1),
        "X_alpha": Matrix3.unit(1, 2),
        "X_beta": Matrix3.unit(2, 3),
        "X_alpha_beta": Matrix3.unit(1, 3).scale(fe(-1)),
        "Y_alpha": Matrix3.unit(2, 1),
        "Y_beta": Matrix3.unit(3, 2),
        "Y_alpha_beta": Matrix3.unit(3, 1).scale(fe(-1)),
    }
    named = dict(zip(CHEVALLEY_NAMES, CHEVALLEY))
    for name, m in printed.items():
        rec.run(f"chevalley.{name}", "chevalley_basis", lambda name=name, m=m: named[name] == m)

    def jacobi():
        n = 0
        for x, y, z in itertools.product(A_BASIS, repeat=3):
            s = bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, bracket(x, y))
            if s != Matrix3.zero():
                return False, f"fails after {n} triples"
            n += 1
        return True, f"{n} triples"

    rec.run("jacobi", "a_basis", jacobi)
    return rec.results


def _catalog_checks(cases: Sequence[CaseRecord]) -> list[CheckResult]:
    rec = _Recorder("catalog")
    fams = real_families(include_redundant=False)
    rec.run("count.real_families", "tables", lambda: (len(fams) == 24, f"{len(fams)} families"))
    expected_real = {1: 7, 2: 6, 3: 3, 4: 3, 5: 3, 6: 2}
    for tbl, n in expected_real.items():
        got = sum(1 for f in fams if f.table == tbl)
        rec.run(f"count.table{tbl}", "tables", lambda got=got, n=n: (got == n, f"{got} rows"))
    expected_complex = {7: 4, 8: 9, 9: 2, 10: 11, 11: 7, 12: 5}
    for tbl, n in expected_complex.items():
        rows = {row_of(c.id) for c in cases if c.table == tbl}
        rec.run(f"count.table{tbl}", "tables", lambda rows=rows, n=n: (len(rows) == n, f"{len(rows)} rows"))
    table_dims = {1: (1,), 2: (2,), 3: (3,), 4: (3,), 5: (4, 5), 6: (4,)}
    for f in real_families():
        for t in family_samples(f) or [None]:
            u = f.instantiate(t)
            tag = _at(f"[{f.label}]", t)
            rec.run("table.closed" + tag, "tables", lambda u=u: is_closed(u)[0])
            rec.run("table.real" + tag, "tables", lambda u=u: is_real_span(u))
            rec.run(
                "table.dim" + tag,
                "tables",
                lambda u=u, f=f: (u.dim == f.dim and u.dim in table_dims[f.table], f"dim {u.dim}"),
            )
    for f in real_families():
        if f.printed_vectors is None:
            continue

        def erratum(f=f):
            printed = f.printed()
            closed, _ = is_closed(printed)
            return not closed, "typeset span is not closed under the bracket; corrected span used"

        rec.run(f"printed_erratum[{f.label}]", "tables", erratum)
    return rec.results


def _cohomology_checks(cases: Sequence[CaseRecord]) -> list[CheckResult]:
    rec = _Recorder("cohomology")
    K = TorusSigmaType
    rec.run("torus.fix[i]", "torus_h1", lambda: torus_class((I,), K.FIX).trivial)
    rec.run("torus.inv[1]", "torus_h1", lambda: torus_class((fe(1),), K.INV).trivial)
    rec.run("torus.inv[-1]", "torus_h1", lambda: not torus_class((fe(-1),), K.INV).trivial)
    rec.run("torus.inv[3-2sqrt2]", "torus_h1", lambda: torus_class((fe("3-2*sqrt2"),), K.INV).trivial)
    rec.run("torus.swap_inv[2,2]", "torus_h1", lambda: torus_class((fe(2), fe(2)), K.SWAP_INV).trivial)
    rec.run("torus.swap_inv[1+i,1-i]", "torus_h1", lambda: torus_class((fe(1) + I, fe(1) - I), K.SWAP_INV).trivial)
    rec.run("torus.swap_inv[-1,-1]", "torus_h1", lambda: torus_class((fe(-1), fe(-1)), K.SWAP_INV).trivial)
    rec.run("sl3.identity", "sl3_h1", lambda: sl3_class(IDENTITY) == "trivial")
    rec.run("sl3.diag(-1,-1,1)", "sl3_h1", lambda: sl3_class(MATRICES["T(-1,-1)"]) == "nontrivial")

    def all_coboundaries():
        n = 0
        for c in cases:
            for p in c.real_points:
                C, h = product(p.conjugator), matrix(p.cocycle)
                if check_coboundary(C, h):
                    n += 1
                    if sl3_class(h) != "trivial":
                        return False, f"{c.id}: {p.cocycle} is a coboundary but classified nontrivial"
        return True, f"{n} recorded coboundaries classified trivial"

    rec.run("sl3.coboundaries_trivial", "sl3_h1", all_coboundaries)
    return rec.results


def _separation_population(cases: Sequence[CaseRecord], sample_bindings: Samples) -> list[Subalgebra]:
    """Table rows, parametrized ones at their samples plus the special values."""
    out: list[Subalgebra] = []
    extra: dict[str, set] = {}
    for c in cases:
        for p in c.real_points:
            fam = get_real_family(p.target)
            if not fam.redundant and fam.parametrized and not c.parametrized:
                extra.setdefault(fam.label, set()).add(p.target_map(fe(0)))
    for fam in real_families(include_redundant=False):
        if not fam.parametrized:
            out.append(fam.instantiate())
            continue
        pts = list(sample_bindings.get(fam.label, ()))
        if not pts:
            home = [c for c in cases if c.param_family == fam.label]
            pts = default_case_samples(home[0]) if home else _fill(fam.param_range.contains)
        seen = []
        for t in list(pts) + sorted(extra.get(fam.label, ()), key=lambda x: Fraction(x.coeffs[0])):
            if t not in seen:
                seen.append(t)
                out.append(fam.instantiate(t))
    return out


def _declared_equivalent(u: Subalgebra, v: Subalgebra, cases: Sequence[CaseRecord]) -> Matrix3 | None:
    lu, lv = u.label.split("^")[0], v.label.split("^")[0]
    if lu != lv:
        return None
    tu, tv = u.parameters.get("lambda"), v.parameters.get("lambda")
    for c in cases:
        for eq in c.equivalences:
            if eq.source == lu and eq.target == lu and eq.conjugator is not None:
                for a, b in ((tu, tv), (tv, tu)):
                    try:
                        if eq.param_map(a) == b:
                            return matrix(eq.conjugator) if a is tu else matrix(eq.conjugator).inverse()
                    except OutOfRange:
                        continue
    return None


def _separation_checks(cases: Sequence[CaseRecord], sample_bindings: Samples) -> list[CheckResult]:
    population = _separation_population(cases, sample_bindings)
    by_dim: dict[int, list[Subalgebra]] = {}
    for u in population:
        by_dim.setdefault(u.dim, []).append(u)
    out: list[CheckResult] = []
    for d, group in sorted(by_dim.items()):
        rec = _Recorder(f"separation.dim{d}")
        for u, v in itertools.combinations(group, 2):
            name = f"{u.label}|{v.label}"
            g = _declared_equivalent(u, v, cases)
            if g is not None:
                rec.run(
                    f"equivalent[{name}]",
                    "separation",
                    lambda g=g, u=u, v=v: span_equal(conjugate_subalgebra(g, u), v),
                    "declared equivalent; witness checked",
                )
                continue
            reason = separate(u, v)
            if reason is None:
                rec.add(f"separated[{name}]", "separation", Status.UNVERIFIABLE, "no invariant separates the pair")
            else:
                rec.add(f"separated[{name}]", "separation", Status.PASS, reason)
        out.extend(rec.results)
    return out


def verify_all(sample_bindings: Samples | None = None, cases: Sequence[CaseRecord] | None = None) -> Report:
    """Every case plus the catalog-wide checks.

    ``sample_bindings`` maps a case id or a real family label to the sample
    values used for the parametrized cases indexed by it.
    """
    sample_bindings = {k: [fe(x) for x in v] for k, v in (sample_bindings or {}).items()}
    full = cases is None
    cases = list(cases) if cases is not None else load_catalog()
    results: list[CheckResult] = []
    for c in cases:
        s = sample_bindings.get(c.id, sample_bindings.get(c.param_family or ""))
        results.extend(verify_case(c, samples=s))
    if full:
        results.extend(_basis_checks())
        results.extend(_catalog_checks(cases))
        results.extend(_cohomology_checks(cases))
        results.extend(_separation_checks(cases, sample_bindings))
    return Report(results)


__all__ = [
    "DEFAULT_LAMBDAS",
    "default_case_samples",
    "equivalence_samples",
    "family_samples",
    "verify_all",
    "verify_case",
]
