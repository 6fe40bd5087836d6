"""Verification pipeline, report and command line."""

from .pipeline import default_case_samples, verify_all, verify_case
from .report import CheckResult, Report, Status
from .search import search_equivalence_witness

__all__ = [
    "CheckResult",
    "Report",
    "Status",
    "default_case_samples",
    "search_equivalence_witness",
    "verify_all",
    "verify_case",
]
