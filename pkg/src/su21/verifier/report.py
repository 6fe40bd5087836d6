"""Check results and the deterministic report."""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from typing import Iterable

from ..catalog import SCHEMA_VERSION
from ..catalog.data import case_sort_key


class Status(str, Enum):
    PASS = "pass"
    FAIL = "fail"
    SKIPPED = "skipped"
    UNVERIFIABLE = "unverifiable"


@dataclass(frozen=True)
class CheckResult:
    case_id: str
    check_name: str
    status: Status
    detail: str = ""
    paper_anchor: str = ""

    def __post_init__(self):
        object.__setattr__(self, "status", Status(self.status))

    def sort_key(self) -> tuple:
        return (case_sort_key(self.case_id), case_sort_key(self.check_name))

    def to_json(self) -> dict:
        return {
            "case_id": self.case_id,
            "check_name": self.check_name,
            "status": self.status.value,
            "detail": self.detail,
            "paper_anchor": self.paper_anchor,
        }


def check(case_id: str, name: str, ok: bool, detail: str = "", anchor: str = "") -> CheckResult:
    return CheckResult(case_id, name, Status.PASS if ok else Status.FAIL, detail, anchor)


class Report:
    """Results in (case id, check name) order with per-status counts."""

    def __init__(self, results: Iterable[CheckResult], catalog_schema_version: str = SCHEMA_VERSION):
        self.results: tuple[CheckResult, ...] = tuple(sorted(results, key=CheckResult.sort_key))
        self.catalog_schema_version = catalog_schema_version

    @property
    def summary(self) -> dict[str, int]:
        counts = {s.value: 0 for s in Status}
        for r in self.results:
            counts[r.status.value] += 1
        return counts

    @property
    def ok(self) -> bool:
        return not any(r.status is Status.FAIL for r in self.results)

    def exit_code(self) -> int:
        return 0 if self.ok else 1

    def by_status(self, status: Status) -> list[CheckResult]:
        return [r for r in self.results if r.status is Status(status)]

    def to_json(self) -> dict:
        return {
            "schema_version": self.catalog_schema_version,
            "summary": self.summary,
            "results": [r.to_json() for r in self.results],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=1, sort_keys=True, ensure_ascii=True) + "\n"

    def render_text(self) -> str:
        width = max((len(r.case_id) for r in self.results), default=0)
        lines = [
            f"{r.status.value.upper():<12} {r.case_id:<{width}}  {r.check_name}" + (f"  ({r.detail})" if r.detail else "")
            for r in self.results
        ]
        s = self.summary
        lines.append(
            f"summary: {s['pass']} pass, {s['fail']} fail, {s['skipped']} skipped, {s['unverifiable']} unverifiable"
        )
        return "\n".join(lines) + "\n"
