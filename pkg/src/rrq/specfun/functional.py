"""Closed forms built on top of the special functions.

``triple_f`` is the three-factor integral
    int_0^inf (x + A)^(-lam) (x + B)^(-mu) (x + C)^(-nu) dx,
``gr_3197`` the classical two-factor Beta * 2F1 evaluation, and
``theorem1_series`` the R-power series for the Appell antiderivative.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ..core import (DEFAULT_TRUNCATION, DivergenceError, DomainError,
                    EvalResult, Truncation)
from ..quad import DEFAULT_SPEC, QuadratureSpec, integrate_semi_infinite
from .gamma import beta_fn
from .hypergeometric import HyperParams, gauss_2f1

SQRT5 = math.sqrt(5.0)
ALPHA = (11.0 + 5.0 * SQRT5) / 2.0   # 1/R(1-)^5
BETA = (11.0 - 5.0 * SQRT5) / 2.0    # 1 - 11 s - s^2 = (1 - ALPHA s)(1 - BETA s)
EPS = float(np.finfo(float).eps)


@dataclass(frozen=True)
class TripleFParams:
    A: complex
    B: complex
    C: complex
    lam: complex
    mu: complex
    nu: complex

    def __post_init__(self) -> None:
        for name in ("A", "B", "C", "lam", "mu", "nu"):
            object.__setattr__(self, name, complex(getattr(self, name)))


def _check_shift(s: complex, exponent: complex) -> None:
    if s.imag == 0 and s.real < 0:
        raise DomainError("shift on the negative real axis puts a singularity on the path")
    if s == 0 and exponent.real >= 1:
        raise DivergenceError("integrand not integrable at 0")


def triple_f(p: TripleFParams, spec: QuadratureSpec = DEFAULT_SPEC) -> EvalResult:
    """Semi-infinite quadrature with principal-branch powers."""
    if (p.lam + p.mu + p.nu).real <= 1:
        raise DivergenceError("Re(lam + mu + nu) must exceed 1")
    for s, e in ((p.A, p.lam), (p.B, p.mu), (p.C, p.nu)):
        _check_shift(s, e)

    def g(x):
        return np.exp(-p.lam * np.log(x + p.A) - p.mu * np.log(x + p.B)
                      - p.nu * np.log(x + p.C))

    r = integrate_semi_infinite(g, 0.0, spec, vectorized=True)
    return r


def gr_3197(s: complex, mu: complex, nu: complex, A: complex, B: complex,
            t: Truncation = DEFAULT_TRUNCATION) -> EvalResult:
    """int_0^inf x^(s-1) (x+A)^(-mu) (x+B)^(-nu) dx in closed form.

    Equals B^(s-nu) A^(-mu) Beta(s, mu+nu-s) 2F1(mu, s; mu+nu; 1 - B/A).
    """
    s, mu, nu, A, B = (complex(v) for v in (s, mu, nu, A, B))
    if not (0 < s.real < (mu + nu).real):
        raise DomainError("need 0 < Re s < Re(mu + nu)")
    if A == 0 or B == 0:
        raise DomainError("shifts must be nonzero")
    h = gauss_2f1(HyperParams(mu, s, mu + nu, 1.0 - B / A), t)
    pref = B ** (s - nu) / A ** mu * beta_fn(s, mu + nu - s)
    v = pref * h.value
    return EvalResult(v, abs(pref) * h.err_estimate + 16 * EPS * abs(v),
                      h.terms_used, h.converged, h.flags)


def _terminating_inner(n: int, z: float) -> float:
    """2F1(1/6, -n; 5/6 - n; z), a polynomial of degree n."""
    j = np.arange(n, dtype=float)
    ratios = (1.0 / 6.0 + j) * (-n + j) / ((5.0 / 6.0 - n + j) * (j + 1.0)) * z
    return 1.0 + float(np.sum(np.cumprod(ratios))) if n else 1.0


def theorem1_series(R_val: float, t: Truncation = DEFAULT_TRUNCATION) -> EvalResult:
    """R^(5/6) sum_n (1/6)_n^2 / ((7/6)_n n!) ALPHA^n 2F1(1/6,-n;5/6-n;BETA/ALPHA) R^(5n).

    Converges for 0 <= R < (sqrt5 - 1)/2, geometrically with ratio ALPHA R^5.
    """
    R = float(R_val)
    golden = (SQRT5 - 1.0) / 2.0
    if not 0.0 <= R < golden:
        raise DomainError("R must lie in [0, (sqrt5 - 1)/2)")
    if R == 0.0:
        return EvalResult(0.0, 0.0, 1)
    x = ALPHA * R ** 5
    z = BETA / ALPHA
    coef = 1.0          # (1/6)_n^2 / ((7/6)_n n!) x^n
    total = 0.0
    mag = 0.0
    tail = math.inf
    n = 0
    while n < t.max_terms:
        term = coef * _terminating_inner(n, z)
        total += term
        mag += abs(term)
        ratio = (1 / 6 + n) ** 2 / ((7 / 6 + n) * (n + 1)) * x
        if n > 2:
            r_tail = max(ratio, x * 0.999999)
            tail = abs(term) * r_tail / (1.0 - r_tail) if r_tail < 1 else math.inf
            if tail <= t.tail_tol * abs(total):
                break
        coef *= ratio
        n += 1
    pref = R ** (5.0 / 6.0)
    converged = n < t.max_terms
    return EvalResult(pref * total, pref * (tail + 4 * EPS * mag), n + 1, converged)
