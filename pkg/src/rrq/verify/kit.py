"""Vectorised q-functions and integration helpers shared by the cases."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable

import numpy as np

from ..core import DEFAULT_TRUNCATION, EvalResult, Truncation
from ..qseries import _quadratic_roots, qprod
from ..quad import (DEFAULT_SPEC, PathSegment, QuadratureSpec, differentiate,
                    integrate_complex_segment, integrate_finite,
                    integrate_semi_infinite)
from ..roots import RootSpec, solve_complex, solve_real

SQRT5 = math.sqrt(5.0)
GOLDEN = (SQRT5 - 1.0) / 2.0
ALPHA = (11.0 + 5.0 * SQRT5) / 2.0
BETA = (11.0 - 5.0 * SQRT5) / 2.0
Z_HALF = (-123.0 + 55.0 * SQRT5) / 2.0       # BETA / ALPHA
M_ELL = complex(117, 44) / 125.0
A_SHIFT = complex(11, 2)
B_SHIFT = complex(11, -2)
X0_PRINTED = 0.6816394360211508
RHO3_SEED = complex(-0.23, -0.17)


def F(q, t: Truncation = DEFAULT_TRUNCATION):
    """f at q, radial limit 0 at q = 1."""
    return qprod(q, t, limit_one=True)


def F5(q, t: Truncation = DEFAULT_TRUNCATION):
    return qprod(np.asarray(q) ** 5, t, limit_one=True)


def F15(q, t: Truncation = DEFAULT_TRUNCATION):
    """f at q**(1/5)."""
    return qprod(np.asarray(q) ** 0.2, t, limit_one=True)


def mono(a: float, b: float, p: complex, t: Truncation = DEFAULT_TRUNCATION) -> Callable:
    """q -> f(q)**a f(q**5)**b q**p."""
    def g(q):
        q = np.asarray(q)
        return F(q, t) ** a * F5(q, t) ** b * q ** p
    return g


def u_vec(q, t: Truncation = DEFAULT_TRUNCATION):
    q = np.asarray(q)
    return F(q, t) ** 6 / (q * F5(q, t) ** 6)


def y_vec(q, t: Truncation = DEFAULT_TRUNCATION):
    q = np.asarray(q)
    r5 = q ** 0.2
    return F15(q, t) / (r5 * F5(q, t))


def R_vec(q, t: Truncation = DEFAULT_TRUNCATION):
    return _quadratic_roots(y_vec(q, t))[0]


def P(x):
    """125 + 22 x + x**2 = (x + 11 + 2i)(x + 11 - 2i)."""
    return 125.0 + 22.0 * x + x * x


def P1(x):
    """5 + 2 x + x**2, the degree-one analogue of P."""
    return 5.0 + 2.0 * x + x * x


def eta_vec(x, t: Truncation = DEFAULT_TRUNCATION):
    """eta(i x) for real x > 0."""
    x = np.asarray(x, dtype=float)
    return np.exp(-math.pi * x / 12.0) * F(np.exp(-2.0 * math.pi * x), t)


@lru_cache(maxsize=8)
def rho_u(c: float, t: Truncation = DEFAULT_TRUNCATION) -> float:
    """Real root of u(q) = c."""
    return solve_real(RootSpec("u", c), t)


@lru_cache(maxsize=8)
def rho_u_complex(c: complex, seed: complex, t: Truncation = DEFAULT_TRUNCATION) -> complex:
    return solve_complex(RootSpec("u", c, seed=seed, tol=1e-9), t)


@dataclass
class Context:
    """Configuration plus a note sink for one case run."""

    spec: QuadratureSpec = DEFAULT_SPEC
    trunc: Truncation = DEFAULT_TRUNCATION
    notes: list = field(default_factory=list)

    def _take(self, r: EvalResult, what: str) -> complex:
        if not r.converged:
            self.notes.append(f"{what}: unconverged (estimate {r.err_estimate:.2g})")
        for flag in r.flags:
            self.notes.append(f"{what}: {flag}")
        return r.value

    def quad(self, f, a, b, what="q-integral"):
        return self._take(integrate_finite(f, a, b, self.spec, vectorized=True), what)

    def quad_gaps(self, f, a, b, what="integral"):
        return self._take(integrate_finite(f, a, b, self.spec, vectorized=True, gaps=True), what)

    def quad_inf(self, f, a, what="semi-infinite integral"):
        return self._take(integrate_semi_infinite(f, a, self.spec, vectorized=True), what)

    def quad_path(self, f, z0, z1, what="path integral"):
        return self._take(integrate_complex_segment(f, PathSegment(z0, z1), self.spec,
                                                    vectorized=True), what)

    def xint(self, h, x1: float, x2: float, what="x-integral"):
        """int_{x1}^{x2} h(x) dx for positive x1, x2 via x = exp(s)."""
        if x1 == x2:
            return 0.0
        g = lambda s: h(np.exp(s)) * np.exp(s)
        return self.quad(g, math.log(x1), math.log(x2), what)

    def xint_inf(self, h, x1: float, what="x-integral to infinity"):
        """int_{x1}^inf h(x) dx for positive x1 via x = x1 exp(s)."""
        def g(s):
            # Past s ~ 700 exp overflows; h(x) x has long since decayed there.
            s = np.asarray(s, dtype=float)
            ok = s < 700.0
            x = x1 * np.exp(np.where(ok, s, 0.0))
            with np.errstate(over="ignore", invalid="ignore"):
                v = h(x) * x
            return np.where(ok & np.isfinite(v), v, 0.0)
        return self.quad_inf(g, 0.0, what)

    def deriv(self, f, x: float, h: float, what="derivative"):
        return self._take(differentiate(f, x, h), what)
