"""Data types for identity cases, their results and reports."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Callable, Optional

STATUSES = ("PASS", "PASS_VARIANT", "FAIL", "SKIP")
AS_PRINTED = "as printed"

# Evaluators take a Context and return a list of samples.
Evaluator = Callable[[Any], list]


@dataclass(frozen=True)
class Variant:
    """One reading of an identity.

    ``rhs`` evaluates the closed form; ``lhs`` optionally replaces the
    case's left-hand side when the reading changes that side too.
    """

    label: str
    rhs: Evaluator
    lhs: Optional[Evaluator] = None


@dataclass(frozen=True)
class IdentityCase:
    id: str
    description: str
    anchor: str
    lhs: Evaluator
    variants: tuple
    domain_params: dict = field(default_factory=dict)
    tol: float = 1e-8
    precheck: Optional[Callable[[dict], None]] = None

    def __post_init__(self) -> None:
        if not self.variants:
            raise ValueError(f"{self.id}: at least one variant required")
        if self.variants[0].label != AS_PRINTED:
            raise ValueError(f"{self.id}: first variant must be {AS_PRINTED!r}")
        labels = [v.label for v in self.variants]
        if len(set(labels)) != len(labels):
            raise ValueError(f"{self.id}: duplicate variant labels")
        if not self.anchor:
            raise ValueError(f"{self.id}: empty anchor")
        if not self.tol > 0:
            raise ValueError(f"{self.id}: tol must be positive")


@dataclass
class CaseResult:
    id: str
    anchor: str
    status: str
    chosen_variant: Optional[str]
    lhs: list
    rhs: dict
    abs_err: dict
    rel_err: dict
    mixed_err: dict
    tol: float
    runtime_s: float
    notes: list = field(default_factory=list)
    reason: Optional[str] = None

    def __post_init__(self) -> None:
        if self.status not in STATUSES:
            raise ValueError(f"unknown status {self.status!r}")


@dataclass
class VerificationReport:
    precision: str
    config_hash: str
    cases: list
    date: str = ""

    def by_id(self, case_id: str) -> CaseResult:
        for c in self.cases:
            if c.id == case_id:
                return c
        raise KeyError(case_id)

    def counts(self) -> dict:
        out = {s: 0 for s in STATUSES}
        for c in self.cases:
            out[c.status] += 1
        return out

    @property
    def ok(self) -> bool:
        return all(c.status != "FAIL" for c in self.cases)
