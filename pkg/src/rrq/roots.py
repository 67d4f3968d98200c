"""Roots of u(q) = c and y(q) = c, on (0, 1) and in the complex disk."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from .core import (DEFAULT_TRUNCATION, ConvergenceError, DivergenceError,
                   DomainError, NoSignChangeError, Truncation, as_complex)
from .qseries import (u_derivative, u_derivative_canonical, u_of_q,
                      y_derivative_canonical, y_of_q)
from .quad import central_difference

log = logging.getLogger(__name__)

_SCAN_POINTS = 64
_DEFAULT_BRACKET = (0.01, 0.99)
_MAX_MODULUS = 0.98


@dataclass(frozen=True)
class RootSpec:
    target_fn: str
    target_value: complex = 0.0
    bracket: Optional[tuple[float, float]] = None
    seed: Optional[complex] = None
    tol: float = 1e-12
    max_iter: int = 200

    def __post_init__(self) -> None:
        if self.target_fn not in ("u", "y"):
            raise ValueError("target_fn must be 'u' or 'y'")
        if not self.tol > 0:
            raise ValueError("tol must be positive")
        object.__setattr__(self, "target_value", as_complex(self.target_value))
        if self.seed is not None:
            object.__setattr__(self, "seed", as_complex(self.seed))
        if self.bracket is not None:
            lo, hi = (float(v) for v in self.bracket)
            if not 0.0 < lo < hi < 1.0:
                raise DomainError("bracket must satisfy 0 < lo < hi < 1")
            object.__setattr__(self, "bracket", (lo, hi))


def _real_fns(spec: RootSpec, t: Truncation):
    c = spec.target_value.real
    if spec.target_fn == "u":
        return (lambda q: u_of_q(q, t).value - c), (lambda q: u_derivative_canonical(q, t))
    return (lambda q: y_of_q(q, t).value - c), (lambda q: y_derivative_canonical(q, t))


def solve_real(spec: RootSpec, t: Truncation = DEFAULT_TRUNCATION) -> float:
    """Real root in the bracket: sign-change scan, bisection, then Newton.

    Newton uses the closed-form derivatives of u and y and is kept inside
    the current bracket.
    """
    if spec.target_value.imag != 0:
        raise DomainError("real solve needs a real target value")
    g, dg = _real_fns(spec, t)
    lo, hi = spec.bracket or _DEFAULT_BRACKET
    grid = np.linspace(lo, hi, _SCAN_POINTS)
    vals = np.array([g(q) for q in grid])
    exact = np.nonzero(vals == 0)[0]
    if exact.size:
        return float(grid[exact[0]])
    changes = np.nonzero(np.sign(vals[1:]) != np.sign(vals[:-1]))[0]
    if not changes.size:
        raise NoSignChangeError(
            f"{spec.target_fn}(q) - {spec.target_value.real:g} keeps one sign on "
            f"[{lo:g}, {hi:g}] (min |value| {np.min(np.abs(vals)):.3g})")
    if changes.size > 1:
        log.info("%d sign changes found; using the first", changes.size)
    a, b = float(grid[changes[0]]), float(grid[changes[0] + 1])
    ga = vals[changes[0]]
    while b - a > 1e-4:
        m = 0.5 * (a + b)
        gm = g(m)
        if gm == 0:
            return m
        if np.sign(gm) == np.sign(ga):
            a, ga = m, gm
        else:
            b = m
    q = 0.5 * (a + b)
    # Small targets (u decays like q**-1 f^6 near q = 1) need a relative stop.
    stop = spec.tol * 1e-2 * min(1.0, abs(spec.target_value.real))
    for _ in range(spec.max_iter):
        gq = g(q)
        if abs(gq) <= stop:
            return q
        step = gq / dg(q)
        # Safeguard: stay inside the bracket, at most half its width per step.
        step = float(np.clip(step, -(b - a) / 2, (b - a) / 2))
        q_new = q - step
        if not a < q_new < b:
            q_new = 0.5 * (a + b)
        if np.sign(gq) == np.sign(ga):
            a = q
        else:
            b = q
        if q_new == q or abs(q_new - q) <= 2 * np.finfo(float).eps * q:
            q = q_new
            break
        q = q_new
    if abs(g(q)) >= spec.tol:
        raise ConvergenceError(f"residual {abs(g(q)):.3g} above tol {spec.tol:g}")
    return q


def _complex_fn(spec: RootSpec, t: Truncation) -> tuple[Callable, Callable]:
    c = spec.target_value
    if spec.target_fn == "u":
        return (lambda q: complex(u_of_q(q, t).value) - c), (lambda q: u_derivative(q, t))
    fn = lambda q: complex(y_of_q(q, t).value) - c
    return fn, (lambda q: central_difference(fn, q, 1e-4))


def _clamp(q: complex, step: complex) -> complex:
    q_new = q - step
    while abs(q_new) >= _MAX_MODULUS or q_new == 0:
        step *= 0.5
        q_new = q - step
        if abs(step) < 1e-300:
            raise DivergenceError("Newton step cannot keep |q| < 1")
    return q_new


def solve_complex(spec: RootSpec, t: Truncation = DEFAULT_TRUNCATION) -> complex:
    """Complex Newton from ``spec.seed``.

    If the derivative nearly vanishes at the converged point (the target is
    a critical value, e.g. u = -11 +/- 2i where 125 + 22u + u^2 = 0), the
    root is a double root and is refined as a zero of the derivative,
    which is well conditioned, instead of the flat residual.
    """
    if spec.seed is None:
        raise DomainError("complex mode needs a seed")
    g, dg = _complex_fn(spec, t)
    q = complex(spec.seed)
    if not 0 < abs(q) < 1:
        raise DomainError("seed must satisfy 0 < |q| < 1")
    res = g(q)
    for it in range(spec.max_iter):
        d = dg(q)
        if d == 0:
            break
        q_new = _clamp(q, res / d)
        res_new = g(q_new)
        if abs(q_new - q) <= 1e-15 * abs(q) or (abs(res_new) >= abs(res) and abs(res) < spec.tol):
            if abs(res_new) < abs(res):
                q, res = q_new, res_new
            break
        q, res = q_new, res_new
    else:
        if abs(res) >= spec.tol:
            raise DivergenceError(f"Newton did not converge from seed {spec.seed}")

    scale = max(1.0, abs(spec.target_value))
    d = dg(q)
    if abs(d) * abs(q) < 1e-4 * scale:
        q = _refine_critical(q, dg, spec)
        res = g(q)
    if abs(res) >= spec.tol:
        raise ConvergenceError(f"residual {abs(res):.3g} above tol {spec.tol:g}")
    if abs(q) >= 1:
        raise DomainError("root left the unit disk")
    return q


def _refine_critical(q: complex, dg: Callable, spec: RootSpec) -> complex:
    """Newton on the derivative, whose zero is simple at a double root."""
    for _ in range(60):
        d2 = central_difference(dg, q, 1e-4)
        if d2 == 0:
            break
        q_new = _clamp(q, dg(q) / d2)
        if abs(q_new - q) <= 4e-16 * abs(q):
            return q_new
        q = q_new
    return q
