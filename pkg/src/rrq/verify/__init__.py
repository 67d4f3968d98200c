"""Numerical verification of the identity catalogue."""

from __future__ import annotations

from .model import AS_PRINTED, STATUSES, CaseResult, IdentityCase, Variant, VerificationReport
from .registry import build_registry
from .report import from_json, make_report, to_csv, to_json, to_table
from .runner import RunConfig, adjudicate, run_all, run_case, select

__all__ = [
    "AS_PRINTED", "STATUSES", "CaseResult", "IdentityCase", "Variant", "VerificationReport",
    "build_registry", "from_json", "make_report", "to_csv", "to_json", "to_table",
    "RunConfig", "adjudicate", "run_all", "run_case", "select",
]
