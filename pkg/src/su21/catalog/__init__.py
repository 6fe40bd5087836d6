"""Classification data: complex cases, real families, witnesses.

>>> len([f for f in real_families() if not f.redundant])
24
"""

from __future__ import annotations

from typing import Mapping, Union

from ..errors import OutOfRange, UnknownCase
from ..field import fe
from ..liealg import Subalgebra
from . import io as _io
from .data import CASES, REAL_FAMILIES, case_sort_key, real_family_index, row_of
from .io import SCHEMA_VERSION, Target
from .records import (
    Assertion,
    CaseRecord,
    Equivalence,
    ParamMap,
    ParamRange,
    RealFamily,
    RealPoint,
    VectorTemplate,
    WitnessRecord,
)
from .witnesses import FAMILIES, MATRICES, family, matrix, product


def load_catalog() -> list[CaseRecord]:
    """All complex cases, sorted by id."""
    return sorted(CASES, key=lambda c: case_sort_key(c.id))


def real_families(include_redundant: bool = True) -> list[RealFamily]:
    return [f for f in REAL_FAMILIES if include_redundant or not f.redundant]


def get_case(case_id: str) -> CaseRecord:
    for c in CASES:
        if c.id == case_id:
            return c
    raise UnknownCase(case_id)


def get_real_family(label: str) -> RealFamily:
    try:
        return real_family_index()[label]
    except KeyError:
        raise UnknownCase(label) from None


def cases_for_family(label: str) -> list[CaseRecord]:
    """Cases whose real points land in the given real family."""
    get_real_family(label)
    return [c for c in load_catalog() if any(p.target == label for p in c.real_points)]


def cases_for_table(table: int) -> list[CaseRecord]:
    """Cases contributing to one of the real tables 1..6."""
    if table not in range(1, 7):
        raise OutOfRange(f"real tables are numbered 1..6, got {table}")
    out = []
    for c in load_catalog():
        if any(get_real_family(p.target).table == table for p in c.real_points):
            out.append(c)
    return out


Binding = Union[Mapping[str, object], object, None]


def _single(bindings: Binding):
    if bindings is None:
        return None
    if isinstance(bindings, Mapping):
        if len(bindings) != 1:
            raise OutOfRange(f"expected one parameter binding, got {sorted(bindings)}")
        (value,) = bindings.values()
        return fe(value)
    return fe(bindings)


def instantiate(target: Union[CaseRecord, RealFamily, str], bindings: Binding = None):
    """Substitute a parameter value.

    A case comes back as a bound :class:`CaseRecord`; a real family (or its
    label) comes back as the real :class:`Subalgebra`.  Raises OutOfRange
    when the value violates the recorded range.
    """
    t = _single(bindings)
    if isinstance(target, str):
        target = get_real_family(target)
    if isinstance(target, RealFamily):
        return target.instantiate(t)
    if not target.parametrized:
        if t is not None:
            raise OutOfRange(f"{target.id} takes no parameter")
        return target
    if t is None:
        raise OutOfRange(f"{target.id} needs a value for {target.param_family}")
    target.param_range.check(t)
    get_real_family(target.param_family).param_range.check(t)
    return target.with_binding(t)


def target_subalgebra(case: CaseRecord, point: RealPoint) -> Subalgebra:
    """The printed table row a real point should land on, at the case's binding."""
    fam = get_real_family(point.target)
    if not fam.parametrized:
        return fam.instantiate()
    base = case.binding if case.binding is not None else fe(0)
    return fam.instantiate(point.target_map(base))


def case_witnesses(case: CaseRecord) -> list[WitnessRecord]:
    """The witness records a case refers to, one per (name, role)."""
    seen: dict[tuple[str, str], WitnessRecord] = {}

    def add(name, role, is_family=False):
        if name is None or (name, role) in seen:
            return
        if is_family:
            seen[(name, role)] = WitnessRecord(name, role, family=name)
        else:
            seen[(name, role)] = WitnessRecord(name, role, matrix=matrix(name))

    add(case.transporter, "transporter_g0")
    add(case.cocycle, "cocycle_h")
    for p in case.real_points:
        for n in p.conjugator:
            add(n, "coboundary_solution")
        add(p.cocycle, "cocycle_h")
    for e in case.equivalences:
        add(e.conjugator, "equivalence_conjugator")
    for name, _ in case.families:
        add(name, "torus_family", True)
    for n in case.nontrivial_classes:
        add(n, "component_rep")
    for a in case.assertions:
        for n in a.representatives:
            add(n, "component_rep")
    return list(seen.values())


def export_json(target: Target | None = None, cases=None, families=None) -> str:
    """Serialize the catalog; writes to ``target`` when given and returns the text."""
    text = _io.export_text(cases if cases is not None else CASES, families if families is not None else REAL_FAMILIES)
    if target is not None:
        _io.write_text(text, target)
    return text


def import_json(source: Target) -> tuple[list[CaseRecord], list[RealFamily]]:
    text = source if isinstance(source, str) and source.lstrip().startswith("{") else _io.read_text(source)
    return _io.import_text(text)


__all__ = [
    "Assertion",
    "CaseRecord",
    "Equivalence",
    "FAMILIES",
    "MATRICES",
    "ParamMap",
    "ParamRange",
    "RealFamily",
    "RealPoint",
    "SCHEMA_VERSION",
    "VectorTemplate",
    "WitnessRecord",
    "case_witnesses",
    "cases_for_family",
    "cases_for_table",
    "export_json",
    "family",
    "get_case",
    "get_real_family",
    "import_json",
    "instantiate",
    "load_catalog",
    "matrix",
    "product",
    "real_families",
    "row_of",
    "target_subalgebra",
]
