"""Command line: verify, list-cases, export-catalog.

Exit status: 0 when every non-skipped check passes, 1 on a failure,
2 on a usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence

from ..catalog import cases_for_family, cases_for_table, export_json, get_case, load_catalog
from ..errors import IOFailure, UnknownCase
from ..field import fe
from .pipeline import verify_all

USAGE_ERROR = 2


class UsageError(Exception):
    pass


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="su21-verify", description="Exact checks of the su(2,1) subalgebra catalog.")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run the checks and print a report")
    v.add_argument("--case", action="append", default=[], metavar="ID", help="case id or real family label; repeatable")
    v.add_argument("--table", type=int, choices=range(1, 7), action="append", default=[], help="real table 1..6")
    v.add_argument("--samples", type=Path, metavar="FILE", help="JSON object: case id or family label -> list of values")
    v.add_argument("--format", choices=("text", "json"), default="text")
    v.add_argument("--out", type=Path, metavar="PATH")

    ls = sub.add_parser("list-cases", help="list the catalog cases")
    ls.add_argument("--format", choices=("text", "json"), default="text")

    ex = sub.add_parser("export-catalog", help="write the catalog as JSON")
    ex.add_argument("--out", type=Path, required=True, metavar="PATH")
    return p


def _select(case_args: Sequence[str], tables: Sequence[int]):
    if not case_args and not tables:
        return None
    chosen = {}
    for arg in case_args:
        try:
            found = [get_case(arg)]
        except UnknownCase:
            try:
                found = cases_for_family(arg)
            except UnknownCase:
                raise UsageError(f"unknown case or family {arg!r}") from None
        for c in found:
            chosen[c.id] = c
    for t in tables:
        for c in cases_for_table(t):
            chosen[c.id] = c
    order = {c.id: k for k, c in enumerate(load_catalog())}
    return sorted(chosen.values(), key=lambda c: order[c.id])


def _load_samples(path: Path | None) -> dict:
    if path is None:
        return {}
    try:
        data = json.loads(path.read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read samples from {path}: {exc}") from None
    if not isinstance(data, dict):
        raise UsageError("the samples file must hold a JSON object")
    out = {}
    for key, values in data.items():
        if not isinstance(values, list):
            raise UsageError(f"samples for {key!r} must be a list")
        try:
            out[key] = [fe(str(v)) for v in values]
        except ValueError as exc:
            raise UsageError(f"bad sample for {key!r}: {exc}") from None
    return out


def _emit(text: str, out: Path | None) -> None:
    if out is None:
        sys.stdout.write(text)
        return
    try:
        out.write_text(text, encoding="utf-8")
    except OSError as exc:
        raise IOFailure(str(exc)) from exc


def _verify(args) -> int:
    cases = _select(args.case, args.table)
    samples = _load_samples(args.samples)
    try:
        report = verify_all(samples, cases)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    _emit(report.dumps() if args.format == "json" else report.render_text(), args.out)
    return report.exit_code()


def _list_cases(args) -> int:
    rows = [
        {
            "id": c.id,
            "table": c.table,
            "complex_rep": c.complex_name,
            "disposition": c.disposition,
            "real_targets": sorted({p.target for p in c.real_points}),
        }
        for c in load_catalog()
    ]
    if args.format == "json":
        text = json.dumps(rows, indent=1, sort_keys=True) + "\n"
    else:
        text = "".join(
            f"{r['id']:<18} {r['disposition']:<16} {r['complex_rep']}"
            + (f"  -> {', '.join(r['real_targets'])}" if r["real_targets"] else "")
            + "\n"
            for r in rows
        )
    sys.stdout.write(text)
    return 0


def main(argv: Sequence[str] | None = None) -> int:
    parser = _parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.command == "verify":
            return _verify(args)
        if args.command == "list-cases":
            return _list_cases(args)
        export_json(args.out)
        return 0
    except UsageError as exc:
        print(f"su21-verify: error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except IOFailure as exc:
        print(f"su21-verify: error: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
