"""Run identity cases and adjudicate between their readings."""

from __future__ import annotations

import fnmatch
import logging
import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Optional

import numpy as np

from ..core import DEFAULT_TRUNCATION, RRQError, Truncation
from ..quad import DEFAULT_SPEC, QuadratureSpec
from .kit import Context
from .model import AS_PRINTED, CaseResult, IdentityCase

log = logging.getLogger(__name__)

VARIANT_MARGIN = 10.0


@dataclass(frozen=True)
class RunConfig:
    spec: QuadratureSpec = DEFAULT_SPEC
    trunc: Truncation = DEFAULT_TRUNCATION
    tol: Optional[float] = None      # overrides every case's tolerance when set

    def describe(self) -> str:
        return (f"rule={self.spec.rule} abs={self.spec.abs_tol!r} rel={self.spec.rel_tol!r} "
                f"levels={self.spec.max_levels} terms={self.trunc.max_terms} "
                f"tail={self.trunc.tail_tol!r} tol={self.tol!r}")


def _samples(vals) -> list:
    out = []
    for v in np.ravel(np.asarray(vals, dtype=complex)):
        out.append(complex(v))
    return out


def _errors(lhs: list, rhs: list) -> tuple[float, float, float]:
    if len(lhs) != len(rhs):
        return math.inf, math.inf, math.inf
    ab = rel = mixed = 0.0
    for a, b in zip(lhs, rhs):
        d = abs(a - b)
        if not math.isfinite(d):
            return math.inf, math.inf, math.inf
        ab = max(ab, d)
        rel = max(rel, d / abs(a) if a != 0 else (0.0 if d == 0 else math.inf))
        mixed = max(mixed, d / max(1.0, abs(a)))
    return ab, rel, mixed


def adjudicate(mixed: dict, tol: float) -> tuple[str, Optional[str]]:
    """PASS if the printed reading holds; PASS_VARIANT if exactly one other
    reading holds and every remaining one misses by more than 10 tol."""
    if mixed.get(AS_PRINTED, math.inf) <= tol:
        return "PASS", AS_PRINTED
    good = [k for k, e in mixed.items() if e <= tol]
    if len(good) == 1:
        rest = [e for k, e in mixed.items() if k != good[0]]
        if all(e > VARIANT_MARGIN * tol for e in rest):
            return "PASS_VARIANT", good[0]
    return "FAIL", None


def run_case(case: IdentityCase, cfg: RunConfig = RunConfig()) -> CaseResult:
    tol = cfg.tol if cfg.tol is not None else case.tol
    ctx = Context(cfg.spec, cfg.trunc)
    t0 = time.perf_counter()

    def skipped(reason: str) -> CaseResult:
        return CaseResult(case.id, case.anchor, "SKIP", None, [], {}, {}, {}, {}, tol,
                          time.perf_counter() - t0, list(ctx.notes), reason)

    if case.precheck is not None:
        try:
            case.precheck(case.domain_params)
        except RRQError as exc:
            return skipped(f"precheck: {exc}")
    p = case.domain_params
    try:
        lhs_main = _samples(case.lhs(ctx, p))
    except (RRQError, ArithmeticError, ValueError) as exc:
        return skipped(f"left-hand side: {type(exc).__name__}: {exc}")

    rhs, ab, rel, mixed = {}, {}, {}, {}
    lhs_used = {}
    for v in case.variants:
        try:
            lhs = lhs_main if v.lhs is None else _samples(v.lhs(ctx, p))
            vals = _samples(v.rhs(ctx, p))
            lhs_used[v.label] = lhs
        except (RRQError, ArithmeticError, ValueError) as exc:
            ctx.notes.append(f"variant {v.label!r}: {type(exc).__name__}: {exc}")
            vals = [complex(math.nan, math.nan)] * len(lhs_main)
            lhs = lhs_main
        rhs[v.label] = vals
        ab[v.label], rel[v.label], mixed[v.label] = _errors(lhs, vals)
        if v.lhs is not None and v.label in lhs_used:
            ctx.notes.append(f"variant {v.label!r} uses its own left-hand side "
                             f"{_fmt(lhs_used[v.label])}")

    status, chosen = adjudicate(mixed, tol)
    res = CaseResult(case.id, case.anchor, status, chosen, lhs_main, rhs, ab, rel, mixed, tol,
                     time.perf_counter() - t0, list(dict.fromkeys(ctx.notes)))
    log.info("%s %s (%s) %.2fs", case.id, status, chosen, res.runtime_s)
    return res


def _fmt(vals: list) -> str:
    return "[" + ", ".join(f"{v.real:.15g}{v.imag:+.3g}j" if v.imag else f"{v.real:.15g}"
                           for v in vals) + "]"


def select(cases: list, pattern: Optional[str]) -> list:
    """Filter by comma-separated ids or fnmatch patterns, keeping registry order."""
    if not pattern:
        return list(cases)
    pats = [s.strip() for s in pattern.split(",") if s.strip()]
    return [c for c in cases if any(fnmatch.fnmatchcase(c.id, pt) for pt in pats)]


def _worker(args) -> CaseResult:
    case_id, cfg = args
    from .registry import build_registry
    case = next(c for c in build_registry() if c.id == case_id)
    return run_case(case, cfg)


def run_all(cfg: RunConfig = RunConfig(), pattern: Optional[str] = None, jobs: int = 1,
            cases: Optional[list] = None) -> list:
    from .registry import build_registry
    chosen = select(cases if cases is not None else build_registry(), pattern)
    if jobs <= 1 or len(chosen) <= 1:
        return [run_case(c, cfg) for c in chosen]
    with ProcessPoolExecutor(max_workers=jobs) as ex:
        return list(ex.map(_worker, [(c.id, cfg) for c in chosen]))
