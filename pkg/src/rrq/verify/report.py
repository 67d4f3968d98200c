"""JSON, CSV and table renderings of a verification run."""

from __future__ import annotations

import csv
import datetime as _dt
import hashlib
import io
import json
import math

from .model import CaseResult, VerificationReport

PRECISION = "binary64"


def config_hash(text: str) -> str:
    return hashlib.sha256(text.encode()).hexdigest()[:16]


def make_report(results: list, config_text: str) -> VerificationReport:
    date = _dt.datetime.now(_dt.timezone.utc).isoformat(timespec="seconds")
    return VerificationReport(PRECISION, config_hash(config_text), list(results), date)


def _num(x: float):
    x = float(x)
    if math.isfinite(x):
        return x
    return "nan" if math.isnan(x) else ("inf" if x > 0 else "-inf")


def _unnum(x) -> float:
    return float(x)


def _pair(z: complex) -> list:
    return [_num(z.real), _num(z.imag)]


def _unpair(p) -> complex:
    return complex(_unnum(p[0]), _unnum(p[1]))


def case_to_dict(r: CaseResult) -> dict:
    return {
        "id": r.id,
        "anchor": r.anchor,
        "status": r.status,
        "chosen_variant": r.chosen_variant,
        "lhs": _pair(r.lhs[0]) if r.lhs else None,
        "rhs": {k: _pair(v[0]) if v else None for k, v in r.rhs.items()},
        "abs_err": {k: _num(v) for k, v in r.abs_err.items()},
        "rel_err": {k: _num(v) for k, v in r.rel_err.items()},
        "runtime_s": r.runtime_s,
        "lhs_samples": [_pair(z) for z in r.lhs],
        "rhs_samples": {k: [_pair(z) for z in v] for k, v in r.rhs.items()},
        "mixed_err": {k: _num(v) for k, v in r.mixed_err.items()},
        "tol": r.tol,
        "notes": list(r.notes),
        "reason": r.reason,
    }


def case_from_dict(d: dict) -> CaseResult:
    return CaseResult(
        d["id"], d["anchor"], d["status"], d["chosen_variant"],
        [_unpair(p) for p in d["lhs_samples"]],
        {k: [_unpair(p) for p in v] for k, v in d["rhs_samples"].items()},
        {k: _unnum(v) for k, v in d["abs_err"].items()},
        {k: _unnum(v) for k, v in d["rel_err"].items()},
        {k: _unnum(v) for k, v in d["mixed_err"].items()},
        d["tol"], d["runtime_s"], list(d["notes"]), d["reason"])


def to_json(rep: VerificationReport) -> str:
    doc = {
        "meta": {"precision": rep.precision, "config_hash": rep.config_hash, "date": rep.date},
        "cases": [case_to_dict(c) for c in rep.cases],
    }
    return json.dumps(doc, indent=2, allow_nan=False)


def from_json(text: str) -> VerificationReport:
    doc = json.loads(text)
    meta = doc["meta"]
    return VerificationReport(meta["precision"], meta["config_hash"],
                              [case_from_dict(c) for c in doc["cases"]], meta.get("date", ""))


CSV_FIELDS = ("id", "status", "chosen_variant", "variant", "lhs_re", "lhs_im", "rhs_re",
              "rhs_im", "abs_err", "rel_err", "mixed_err", "tol", "runtime_s")


def to_csv(rep: VerificationReport) -> str:
    """One row per (case, variant); skipped cases get a single row."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_FIELDS)
    for c in rep.cases:
        lhs = c.lhs[0] if c.lhs else complex(math.nan, math.nan)
        if not c.rhs:
            w.writerow([c.id, c.status, "", "", lhs.real, lhs.imag, "", "", "", "", "", c.tol,
                        f"{c.runtime_s:.3f}"])
            continue
        for label, vals in c.rhs.items():
            z = vals[0] if vals else complex(math.nan, math.nan)
            w.writerow([c.id, c.status, c.chosen_variant or "", label, repr(lhs.real),
                        repr(lhs.imag), repr(z.real), repr(z.imag), repr(c.abs_err[label]),
                        repr(c.rel_err[label]), repr(c.mixed_err[label]), c.tol,
                        f"{c.runtime_s:.3f}"])
    return buf.getvalue()


def to_table(rep: VerificationReport) -> str:
    rows = []
    for c in rep.cases:
        best = c.mixed_err.get(c.chosen_variant) if c.chosen_variant else (
            min(c.mixed_err.values()) if c.mixed_err else math.nan)
        detail = c.chosen_variant or (c.reason or "no reading within tolerance")
        rows.append(f"{c.id:<10} {c.status:<12} err={best:9.2e} tol={c.tol:7.1e} "
                    f"{c.runtime_s:6.2f}s  {detail}")
    counts = rep.counts()
    rows.append(" ".join(f"{k}={v}" for k, v in counts.items()))
    return "\n".join(rows)
