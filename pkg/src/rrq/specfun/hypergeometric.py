"""Gauss 2F1 and Appell F1 with several independent evaluation routes."""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from ..core import (DEFAULT_TRUNCATION, DomainError,
                    EvalResult, NoValidRouteError, Truncation)
from ..quad import QuadratureSpec, integrate_finite
from .gamma import digamma, is_pole, lngamma, rgamma

EPS = float(np.finfo(float).eps)
# A transformed argument is used by the series only if its modulus is <= this.
ROUTE_RADIUS = 0.8
# c - a - b closer than this to an integer takes the logarithmic route.
_INT_TOL = 1e-9

_EULER_SPEC = QuadratureSpec(abs_tol=1e-15, rel_tol=1e-14, max_levels=12)


@dataclass(frozen=True)
class HyperParams:
    a: complex
    b: complex
    c: complex
    z: complex

    def __post_init__(self) -> None:
        for name in ("a", "b", "c", "z"):
            object.__setattr__(self, name, complex(getattr(self, name)))
        if is_pole(self.c):
            raise DomainError("c must not be a nonpositive integer")


@dataclass(frozen=True)
class F1Params:
    a: complex
    b1: complex
    b2: complex
    c: complex
    x: complex
    y: complex

    def __post_init__(self) -> None:
        for name in ("a", "b1", "b2", "c", "x", "y"):
            object.__setattr__(self, name, complex(getattr(self, name)))
        if is_pole(self.c):
            raise DomainError("c must not be a nonpositive integer")


def _nonpos_int(v: complex) -> int | None:
    if is_pole(v):
        return int(-v.real)
    return None


def _series(a, b, c, z, t: Truncation) -> EvalResult:
    """Direct hypergeometric series, terminating when a or b allows it."""
    stop = None
    for v in (a, b):
        n = _nonpos_int(v)
        if n is not None:
            stop = n if stop is None else min(stop, n)
    term = 1 + 0j
    total = 1 + 0j
    mag = 1.0
    az = abs(z)
    if stop is None and az >= 1.0:
        raise NoValidRouteError(f"series diverges at |z| = {az:.3g}")
    limit = t.max_terms if stop is None else stop
    n = 0
    tail = 0.0
    while n < limit:
        term *= (a + n) * (b + n) / ((c + n) * (n + 1)) * z
        n += 1
        total += term
        mag += abs(term)
        if stop is None:
            # Once n dominates the parameters the ratio is close to |z|.
            ratio = abs((a + n) * (b + n) / ((c + n) * (n + 1))) * az
            if n > abs(a) + abs(b) + abs(c) and ratio < 1.0:
                tail = abs(term) * ratio / (1.0 - ratio)
                if tail <= t.tail_tol * abs(total):
                    break
    converged = stop is not None or n < t.max_terms
    return EvalResult(total, tail + 4 * EPS * mag, n + 1, converged)


def _pfaff(a, b, c, z, t):
    w = z / (z - 1.0)
    r = _series(a, c - b, c, w, t)
    pref = (1.0 - z) ** (-a)
    return EvalResult(pref * r.value, abs(pref) * r.err_estimate, r.terms_used, r.converged)


def _one_minus_z_generic(a, b, c, z, t):
    w = 1.0 - z
    s1 = _series(a, b, a + b - c + 1.0, w, t)
    s2 = _series(c - a, c - b, c - a - b + 1.0, w, t)
    lg_c = lngamma(c)
    g1 = cmath.exp(lg_c + lngamma(c - a - b)) * rgamma(c - a) * rgamma(c - b)
    g2 = cmath.exp(lg_c + lngamma(a + b - c)) * rgamma(a) * rgamma(b)
    p2 = w ** (c - a - b)
    v = g1 * s1.value + g2 * p2 * s2.value
    # Cancellation between the two pieces shows up as a large magnitude ratio.
    mag = abs(g1 * s1.value) + abs(g2 * p2 * s2.value)
    err = abs(g1) * s1.err_estimate + abs(g2 * p2) * s2.err_estimate + 16 * EPS * mag
    return EvalResult(v, err, s1.terms_used + s2.terms_used, s1.converged and s2.converged)


def _one_minus_z_log(a, b, m: int, z, t):
    """Connection to 1 - z when c = a + b + m, m a nonnegative integer."""
    w = 1.0 - z
    lw = cmath.log(w)
    c = a + b + m
    lg_c = lngamma(c)
    finite = 0j
    if m > 0:
        pref = cmath.exp(lg_c + lngamma(m)) * rgamma(a + m) * rgamma(b + m)
        term = 1 + 0j
        for n in range(m):
            finite += term
            if n + 1 < m:
                term *= (a + n) * (b + n) / ((n + 1) * (1 - m + n)) * w
        finite *= pref
    # Infinite logarithmic part.
    pref2 = cmath.exp(lg_c) * rgamma(a) * rgamma(b) * (-w) ** m / math.factorial(m)
    coef = 1 + 0j     # (a+m)_n (b+m)_n / (n! (n+m)!/m!)
    psi_n1 = digamma(1.0).real
    psi_nm1 = digamma(m + 1.0).real
    psi_a = digamma(a + m)
    psi_b = digamma(b + m)
    total = 0j
    mag = 0.0
    aw = abs(w)
    n = 0
    tail = 0.0
    while n < t.max_terms:
        term = coef * (lw - psi_n1 - psi_nm1 + psi_a + psi_b)
        total += term
        mag += abs(term)
        ratio = abs((a + m + n) * (b + m + n) / ((n + 1) * (n + m + 1))) * aw
        if n > abs(a) + abs(b) + m and ratio < 1.0:
            tail = abs(term) * ratio / (1.0 - ratio) * 1.5
            if tail <= t.tail_tol * abs(total):
                break
        coef *= (a + m + n) * (b + m + n) / ((n + 1) * (n + m + 1)) * w
        psi_n1 += 1.0 / (n + 1)
        psi_nm1 += 1.0 / (n + m + 1)
        psi_a += 1.0 / (a + m + n)
        psi_b += 1.0 / (b + m + n)
        n += 1
    v = finite - pref2 * total
    err = abs(pref2) * (tail + 8 * EPS * mag) + 8 * EPS * abs(finite)
    return EvalResult(v, err, n + 1, n < t.max_terms)


def _one_minus_z(a, b, c, z, t):
    s = c - a - b
    m = round(s.real)
    if abs(s - m) < _INT_TOL:
        if m >= 0:
            return _one_minus_z_log(a, b, m, z, t)
        # Euler's transformation makes the integer difference nonnegative.
        r = _one_minus_z_log(c - a, c - b, -m, z, t)
        pref = (1.0 - z) ** s
        return EvalResult(pref * r.value, abs(pref) * r.err_estimate, r.terms_used, r.converged)
    return _one_minus_z_generic(a, b, c, z, t)


def _euler_integral(a, b, c, z, spec: QuadratureSpec = _EULER_SPEC) -> EvalResult:
    """Gamma(c)/(Gamma(b)Gamma(c-b)) int_0^1 t^(b-1) (1-t)^(c-b-1) (1-zt)^(-a) dt."""
    if not (c.real > b.real > 0):
        if c.real > a.real > 0:
            a, b = b, a
        else:
            raise NoValidRouteError("Euler integral needs Re c > Re b > 0")
    if z.imag == 0 and z.real >= 1.0:
        raise NoValidRouteError("Euler integral: z on the cut [1, inf)")

    def g(x, lo, hi):
        return np.exp((b - 1.0) * np.log(lo) + (c - b - 1.0) * np.log(hi)
                      - a * np.log(1.0 - z * x))

    r = integrate_finite(g, 0.0, 1.0, spec, vectorized=True, gaps=True)
    pref = cmath.exp(lngamma(c) - lngamma(b) - lngamma(c - b))
    v = pref * r.value
    return EvalResult(v, abs(pref) * r.err_estimate + 8 * EPS * abs(v),
                      r.terms_used, r.converged, ("euler_integral",))


ROUTES_2F1 = ("auto", "series", "pfaff", "one_minus_z", "euler_integral")


def gauss_2f1(p: HyperParams, t: Truncation = DEFAULT_TRUNCATION,
              route: str = "auto") -> EvalResult:
    """2F1(a, b; c; z) on the principal branch (cut [1, inf)).

    ``route="auto"`` tries, in order, the direct series, Pfaff's
    z/(z-1) transform and the 1 - z connection, taking the first whose
    mapped argument has modulus <= 0.8; next the Euler integral; last the
    series route with the smallest mapped modulus below 1.
    """
    a, b, c, z = p.a, p.b, p.c, p.z
    if route not in ROUTES_2F1:
        raise ValueError(f"unknown route {route!r}")
    if z == 0:
        return EvalResult(1 + 0j, 0.0, 1)
    if _nonpos_int(a) is not None or _nonpos_int(b) is not None:
        if route in ("auto", "series"):
            return _series(a, b, c, z, t)
    if z.imag == 0 and z.real > 1.0:
        raise DomainError("z lies on the branch cut (1, inf)")
    if z == 1:
        s = c - a - b
        if s.real <= 0:
            raise DomainError("2F1 diverges at z = 1 when Re(c - a - b) <= 0")
        v = cmath.exp(lngamma(c) + lngamma(s)) * rgamma(c - a) * rgamma(c - b)
        return EvalResult(v, 8 * EPS * abs(v), 1)

    mapped = {
        "series": abs(z),
        "pfaff": abs(z / (z - 1.0)),
        "one_minus_z": abs(1.0 - z),
    }
    impl = {"series": lambda: _series(a, b, c, z, t),
            "pfaff": lambda: _pfaff(a, b, c, z, t),
            "one_minus_z": lambda: _one_minus_z(a, b, c, z, t),
            "euler_integral": lambda: _euler_integral(a, b, c, z)}
    if route != "auto":
        if route != "euler_integral" and mapped[route] >= 1.0:
            raise NoValidRouteError(f"route {route} maps z outside the unit disk")
        return impl[route]()
    for name in ("series", "pfaff", "one_minus_z"):
        if mapped[name] <= ROUTE_RADIUS:
            return impl[name]()
    try:
        return impl["euler_integral"]()
    except NoValidRouteError:
        pass
    name = min(mapped, key=mapped.get)
    if mapped[name] < 1.0:
        return impl[name]()
    raise NoValidRouteError(f"no 2F1 route covers z = {z}")


def hyp2f1(a, b, c, z, t: Truncation = DEFAULT_TRUNCATION) -> complex:
    """Convenience wrapper returning the value of :func:`gauss_2f1`."""
    return gauss_2f1(HyperParams(a, b, c, z), t).value


def _check_f1_cut(p: F1Params) -> None:
    for v in (p.x, p.y):
        if v.imag == 0 and v.real >= 1.0:
            raise DomainError("F1 argument on the cut [1, inf)")


def _f1_euler(p: F1Params, spec: QuadratureSpec = _EULER_SPEC) -> EvalResult:
    a, b1, b2, c, x, y = p.a, p.b1, p.b2, p.c, p.x, p.y
    if not (c.real > a.real > 0):
        raise NoValidRouteError("F1 Euler integral needs Re c > Re a > 0")

    def g(s, lo, hi):
        return np.exp((a - 1.0) * np.log(lo) + (c - a - 1.0) * np.log(hi)
                      - b1 * np.log(1.0 - x * s) - b2 * np.log(1.0 - y * s))

    r = integrate_finite(g, 0.0, 1.0, spec, vectorized=True, gaps=True)
    pref = cmath.exp(lngamma(c) - lngamma(a) - lngamma(c - a))
    v = pref * r.value
    return EvalResult(v, abs(pref) * r.err_estimate + 8 * EPS * abs(v),
                      r.terms_used, r.converged, ("euler_integral",))


def _f1_series(p: F1Params, t: Truncation) -> EvalResult:
    """Double series summed by total degree N = m + n."""
    a, b1, b2, c, x, y = p.a, p.b1, p.b2, p.c, p.x, p.y
    r = max(abs(x), abs(y))
    if r >= 1.0:
        raise NoValidRouteError("F1 double series needs |x|, |y| < 1")
    cap = min(t.max_terms, 20000)
    A = [1 + 0j]      # (b1)_m x^m / m!
    B = [1 + 0j]      # (b2)_n y^n / n!
    P = 1 + 0j        # (a)_N / (c)_N
    total = 1 + 0j
    mag = 1.0
    small_run = 0
    tail = 0.0
    N = 0
    while N < cap:
        P *= (a + N) / (c + N)
        A.append(A[-1] * (b1 + N) / (N + 1) * x)
        B.append(B[-1] * (b2 + N) / (N + 1) * y)
        N += 1
        block = P * np.dot(np.array(A), np.array(B[::-1]))
        total += block
        mag += abs(P) * float(np.dot(np.abs(A), np.abs(B[::-1])))
        if N > abs(a) + abs(b1) + abs(b2) + abs(c):
            tail = abs(block) * r / (1.0 - r) * 2.0
            small_run = small_run + 1 if tail <= t.tail_tol * abs(total) else 0
            if small_run >= 3:
                break
    return EvalResult(complex(total), tail + 8 * EPS * mag, N + 1, N < cap)


def appell_f1(p: F1Params, t: Truncation = DEFAULT_TRUNCATION,
              route: str = "auto") -> EvalResult:
    """Appell F1(a; b1, b2; c; x, y).

    The Euler integral is the primary route; ``route="series"`` sums the
    defining double series (|x|, |y| < 1).
    """
    _check_f1_cut(p)
    if p.x == 0 and p.y == 0:
        return EvalResult(1 + 0j, 0.0, 1)
    if route == "euler_integral":
        return _f1_euler(p)
    if route == "series":
        return _f1_series(p, t)
    if route != "auto":
        raise ValueError(f"unknown route {route!r}")
    if p.c.real > p.a.real > 0:
        return _f1_euler(p)
    return _f1_series(p, t)


__all__ = ["HyperParams", "F1Params", "gauss_2f1", "hyp2f1", "appell_f1",
           "ROUTES_2F1"]
