"""Result containers, truncation settings and the exception hierarchy."""

from __future__ import annotations

import math
from dataclasses import dataclass, field


class RRQError(Exception):
    """Base class for every error raised by this package."""


class DomainError(RRQError, ValueError):
    """An argument lies outside the domain of the function."""


class PoleError(RRQError, ValueError):
    """Evaluation at a pole (e.g. Gamma at a nonpositive integer)."""


class BranchError(RRQError):
    """Continuity tracking or a cut-crossing check failed."""


class NoValidRouteError(RRQError):
    """No evaluation route covers the requested parameters."""


class DivergenceError(RRQError):
    """An integral or iteration diverges."""


class NoSignChangeError(RRQError):
    """A bracketing solver found no sign change."""


class ConvergenceError(RRQError):
    """An iterative solver did not reach its tolerance."""


@dataclass(frozen=True)
class Truncation:
    """Series truncation budget.

    ``tail_tol`` bounds the neglected tail (relative, for products and
    series with a certified bound); ``max_terms`` caps the work.
    """

    max_terms: int = 20000
    tail_tol: float = 1e-16

    def __post_init__(self) -> None:
        if not isinstance(self.max_terms, int) or self.max_terms <= 0:
            raise ValueError("max_terms must be a positive integer")
        if not (self.tail_tol > 0 and math.isfinite(self.tail_tol)):
            raise ValueError("tail_tol must be a positive finite number")


DEFAULT_TRUNCATION = Truncation()


@dataclass(frozen=True)
class EvalResult:
    """A value with an error estimate and convergence diagnostics.

    When ``converged`` is False the estimate may be unreliable; callers
    must carry the flag forward. ``flags`` holds short machine-readable
    notes such as ``"branch"`` or ``"underflow"``.
    """

    value: complex
    err_estimate: float = 0.0
    terms_used: int = 0
    converged: bool = True
    flags: tuple[str, ...] = field(default=())

    def __post_init__(self) -> None:
        if self.err_estimate < 0 or math.isnan(self.err_estimate):
            raise ValueError("err_estimate must be nonnegative")
        # Keep numpy scalars out of results so they serialise cleanly.
        v = self.value
        v = complex(v) if isinstance(v, complex) or getattr(v, "imag", 0) else float(v)
        object.__setattr__(self, "value", v)
        object.__setattr__(self, "err_estimate", float(self.err_estimate))
        object.__setattr__(self, "terms_used", int(self.terms_used))
        object.__setattr__(self, "converged", bool(self.converged))
        object.__setattr__(self, "flags", tuple(self.flags))

    @property
    def real(self) -> float:
        return complex(self.value).real

    def combine(self, value: complex, extra_err: float = 0.0) -> EvalResult:
        """Return a result carrying this one's diagnostics but a new value."""
        return EvalResult(value, self.err_estimate + extra_err,
                          self.terms_used, self.converged, self.flags)


def as_complex(z) -> complex:
    """Parse ``z`` (number, ``Nome``-like object, or ``"re,im"`` string)."""
    if isinstance(z, str):
        parts = [p.strip() for p in z.split(",")]
        if len(parts) == 1:
            return complex(float(parts[0]), 0.0)
        if len(parts) == 2:
            return complex(float(parts[0]), float(parts[1]))
        raise ValueError(f"cannot parse complex number {z!r}")
    if hasattr(z, "value"):
        z = z.value
    return complex(z)
