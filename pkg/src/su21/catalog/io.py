"""Deterministic JSON export and import of the catalog."""

from __future__ import annotations

import io
import json
from pathlib import Path
from typing import IO, Union

from ..cohomology import TorusSigmaType
from ..errors import IOFailure, SchemaMismatch
from ..linalg import Matrix3
from .data import case_sort_key
from .records import CaseRecord, RealFamily
from .witnesses import FAMILIES, MATRICES

SCHEMA_VERSION = "su21-catalog/1"

Target = Union[str, Path, IO[str]]


def catalog_document(cases, real_families) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "cases": [c.to_json() for c in sorted(cases, key=lambda c: case_sort_key(c.id))],
        "real_families": [f.to_json() for f in sorted(real_families, key=lambda f: case_sort_key(f.label))],
        "witness_matrices": {name: MATRICES[name].to_json() for name in sorted(MATRICES)},
        "torus_families": [
            {
                "name": f.name,
                "arity": f.arity,
                "claimed": f.claimed.value,
                "conjugator": f.conjugator,
                "constraint": f.constraint,
            }
            for f in sorted(FAMILIES.values(), key=lambda f: f.name)
        ],
    }


def dumps(doc: dict) -> str:
    return json.dumps(doc, indent=1, sort_keys=True, ensure_ascii=True) + "\n"


def write_text(text: str, target: Target) -> None:
    try:
        if isinstance(target, (str, Path)):
            Path(target).write_text(text, encoding="utf-8")
        else:
            target.write(text)
    except OSError as exc:
        raise IOFailure(str(exc)) from exc


def read_text(source: Target) -> str:
    try:
        if isinstance(source, (str, Path)):
            return Path(source).read_text(encoding="utf-8")
        return source.read()
    except OSError as exc:
        raise IOFailure(str(exc)) from exc


def parse_document(doc: dict) -> tuple[list[CaseRecord], list[RealFamily]]:
    """Rebuild records from a document; torus families are resolved by name."""
    if doc.get("schema_version") != SCHEMA_VERSION:
        raise SchemaMismatch(f"expected schema {SCHEMA_VERSION!r}, got {doc.get('schema_version')!r}")
    for name, m in doc["witness_matrices"].items():
        if name not in MATRICES or Matrix3.from_json(m) != MATRICES[name]:
            raise SchemaMismatch(f"witness matrix {name!r} does not match the built-in registry")
    for f in doc["torus_families"]:
        known = FAMILIES.get(f["name"])
        if known is None or TorusSigmaType(f["claimed"]) is not known.claimed:
            raise SchemaMismatch(f"torus family {f['name']!r} is not in the built-in registry")
    cases = [CaseRecord.from_json(c) for c in doc["cases"]]
    families = [RealFamily.from_json(f) for f in doc["real_families"]]
    return cases, families


def export_text(cases, real_families) -> str:
    return dumps(catalog_document(cases, real_families))


def import_text(text: str) -> tuple[list[CaseRecord], list[RealFamily]]:
    try:
        doc = json.load(io.StringIO(text))
    except json.JSONDecodeError as exc:
        raise SchemaMismatch(f"not a JSON document: {exc}") from exc
    return parse_document(doc)
