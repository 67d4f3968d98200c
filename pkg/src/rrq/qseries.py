"""Euler products, Dedekind eta and the Rogers-Ramanujan continued fraction.

Notation follows the usual q-series shorthand: ``f(q)`` below means the
Euler product prod_{n>=1} (1 - q**n) (written f(-q) in the literature),
``R(q)`` is the Rogers-Ramanujan continued fraction,

    u(q) = 1/R**5 - 11 - R**5 = f(q)**6 / (q f(q**5)**6)
    y(q) = 1/R - 1 - R        = f(q**(1/5)) / (q**(1/5) f(q**5))

Fractional powers of a complex nome always use the principal branch.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Union

import numpy as np

from .core import (DEFAULT_TRUNCATION, BranchError, ConvergenceError,
                   DomainError, EvalResult, Truncation, as_complex)

# Products of positive reals below this are reported as underflowed; the
# true value lies in (0, partial product].
_UNDERFLOW = 1e-300
GOLDEN_CONJ = (math.sqrt(5.0) - 1.0) / 2.0   # R(1-)
EPS = np.finfo(float).eps


@dataclass(frozen=True)
class Nome:
    """A point of the open unit disk."""

    value: complex

    def __post_init__(self) -> None:
        v = as_complex(self.value)
        if not (abs(v) < 1.0) or not cmath.isfinite(v):
            raise DomainError(f"nome must satisfy |q| < 1, got {self.value!r}")
        object.__setattr__(self, "value", v)

    @property
    def is_real_unit_interval(self) -> bool:
        return self.value.imag == 0.0 and 0.0 < self.value.real < 1.0

    def scalar(self) -> Union[float, complex]:
        """``float`` for real nomes, ``complex`` otherwise."""
        return self.value.real if self.value.imag == 0.0 else self.value


NomeLike = Union[Nome, float, complex, str]


def _nome(q: NomeLike) -> Union[float, complex]:
    return (q if isinstance(q, Nome) else Nome(q)).scalar()


def _product_core(q: np.ndarray, trunc: Truncation, limit_one: bool):
    """Vectorised prod (1 - q**n) with per-element bookkeeping."""
    q = np.atleast_1d(np.asarray(q))
    cplx = np.iscomplexobj(q)
    a = np.abs(q)
    out = np.ones(q.shape, dtype=complex if cplx else float)
    err = np.zeros(q.shape)
    terms = np.zeros(q.shape, dtype=int)
    conv = np.ones(q.shape, dtype=bool)
    under = np.zeros(q.shape, dtype=bool)

    at_one = a >= 1.0
    if at_one.any():
        if not limit_one or cplx and np.any(q[at_one].imag != 0) or np.any(q[at_one].real > 1):
            raise DomainError("Euler product requires |q| < 1")
        out[at_one] = 0.0       # radial limit q -> 1-
        under[at_one] = True

    active = np.nonzero((a > 0) & ~at_one)[0]
    if not active.size:
        return out, err, terms, conv, under

    qa = q[active]
    aa = a[active]
    if cplx:
        pos = (qa.imag == 0) & (qa.real > 0)
    else:
        pos = qa > 0
    lq = np.log(np.where(pos, np.abs(qa), 0.5))
    p = np.ones(active.size, dtype=out.dtype)
    qn = qa.copy()
    an = aa.copy()
    idx = active
    n = 1
    while idx.size:
        # 1 - q**n keeps full relative accuracy for real q close to 1.
        fac = np.where(pos, -np.expm1(n * lq), 1.0 - qn)
        p = p * fac
        an1 = an * aa
        tail = an1 / ((1.0 - aa) * (1.0 - an1))
        d_tail = tail <= trunc.tail_tol
        d_under = pos & (np.abs(p) < _UNDERFLOW)
        d_cap = n >= trunc.max_terms
        done = d_tail | d_under | d_cap
        if done.any():
            j = idx[done]
            out[j] = p[done]
            terms[j] = n
            pe = np.abs(p[done])
            err[j] = np.where(d_under[done], pe, pe * np.expm1(np.minimum(tail[done], 700.0)))
            under[j] = d_under[done] & ~d_tail[done]
            conv[j] = d_tail[done] | d_under[done]
            keep = ~done
            idx, qa, aa, pos, lq, p, qn, an1 = (
                idx[keep], qa[keep], aa[keep], pos[keep], lq[keep], p[keep], qn[keep], an1[keep])
        qn = qn * qa
        an = an1
        n += 1
    return out, err, terms, conv, under


def qprod(q, trunc: Truncation = DEFAULT_TRUNCATION, *, limit_one: bool = False) -> np.ndarray:
    """Array version of :func:`euler_product_f` returning values only.

    Raises :class:`ConvergenceError` if any element is unconverged.  With
    ``limit_one`` a real q equal to 1 yields the radial limit 0, which lets
    quadrature nodes that round onto q = 1 through.
    """
    shape = np.shape(q)
    out, _, _, conv, _ = _product_core(q, trunc, limit_one)
    if not conv.all():
        raise ConvergenceError("Euler product unconverged within max_terms")
    return out.reshape(shape) if shape else out[0]


def euler_product_f(q: NomeLike, t: Truncation = DEFAULT_TRUNCATION) -> EvalResult:
    """prod_{n>=1} (1 - q**n) with a certified tail bound.

    For real q in (0, 1) whose product underflows, the partial product is
    returned together with itself as the error bound (the true value is
    smaller and positive).
    """
    v = _nome(q)
    out, err, terms, conv, under = _product_core(np.array([v]), t, False)
    value = out[0]
    return EvalResult(complex(value) if isinstance(v, complex) else float(value),
                      float(err[0]), int(terms[0]), bool(conv[0]),
                      ("underflow",) if under[0] else ())


def pentagonal_series_f(q: NomeLike, t: Truncation = DEFAULT_TRUNCATION) -> EvalResult:
    """Euler's pentagonal-number series sum_k (-1)**k q**(k(3k-1)/2).

    Independent of the product route.  The error estimate covers the
    truncated tail and rounding in the alternating sum, which dominates as
    |q| -> 1.
    """
    v = _nome(q)
    a = abs(v)
    if a == 0.0:
        return EvalResult(1.0 if isinstance(v, float) else 1 + 0j, 0.0, 1)
    total = 1.0
    abs_sum = 1.0
    k = 1
    tail = math.inf
    while k <= t.max_terms:
        e1 = k * (3 * k - 1) // 2
        e2 = k * (3 * k + 1) // 2
        term = v ** e1 + v ** e2
        sign = -1 if k % 2 else 1
        total += sign * term
        abs_sum += a ** e1 + a ** e2
        # Remaining exponents grow by at least 3k+2 per step.
        nxt = (k + 1) * (3 * k + 2) // 2
        ratio = a ** (3 * k + 2)
        tail = 2.0 * a ** nxt / (1.0 - ratio) if ratio < 1 else math.inf
        if tail <= t.tail_tol * max(abs(total), 1e-300) or tail <= 1e-300:
            break
        k += 1
    err = tail + 4 * EPS * abs_sum
    converged = k <= t.max_terms
    return EvalResult(total, float(err), k, converged)


def dedekind_eta(tau: float, t: Truncation = DEFAULT_TRUNCATION) -> EvalResult:
    """eta(i tau) = exp(-pi tau / 12) f(exp(-2 pi tau)) for real tau > 0."""
    tau = float(tau)
    if not tau > 0:
        raise DomainError("dedekind_eta needs tau > 0")
    pref = math.exp(-math.pi * tau / 12.0)
    if pref == 0.0:
        return EvalResult(0.0, 0.0, 0, True, ("underflow",))
    q = math.exp(-2.0 * math.pi * tau)
    if q >= 1.0:
        return EvalResult(0.0, 0.0, 0, True, ("underflow",))
    fr = euler_product_f(q, t)
    return EvalResult(pref * fr.value, pref * fr.err_estimate, fr.terms_used,
                      fr.converged, fr.flags)


def _quadratic_roots(y):
    """Both roots of R**2 + (1 + y) R - 1 = 0, computed without cancellation."""
    s = 1.0 + y
    w = np.sqrt(s * s + 4.0 + 0j) if np.iscomplexobj(s) else np.sqrt(s * s + 4.0)
    if np.iscomplexobj(w):
        w = np.where((np.conj(s) * w).real >= 0, w, -w)
    big = s + w
    return 2.0 / big, -big / 2.0


def _y_product(q, trunc, limit_one=False):
    t5 = q ** 0.2
    num = qprod(t5, trunc, limit_one=limit_one)
    den = t5 * qprod(q ** 5, trunc, limit_one=limit_one)
    return num / den


def R_real(q, trunc: Truncation = DEFAULT_TRUNCATION) -> np.ndarray:
    """Vectorised R(q) for real q in (0, 1)."""
    y = _y_product(np.asarray(q, dtype=float), trunc)
    return _quadratic_roots(y)[0]


def rr_value(q: NomeLike, t: Truncation = DEFAULT_TRUNCATION,
             max_modulus: float = 0.98, steps: int = 64) -> EvalResult:
    """R(q) from the quadratic satisfied by R given y(q) (product route).

    Off the positive real axis the root is chosen by continuity of
    R(q)/q**(1/5) along the ray from a small anchor, starting from the
    value 1 at q = 0.
    """
    v = _nome(q)
    if v == 0:
        return EvalResult(0.0, 0.0, 0)
    if abs(v) > max_modulus:
        raise DomainError(f"|q| = {abs(v):.6g} exceeds max_modulus {max_modulus}")
    if isinstance(v, float) and v > 0:
        ry = y_of_q(v, t)
        r = float(_quadratic_roots(np.array(ry.value))[0])
        rel = ry.err_estimate / max(abs(ry.value), 1e-300)
        # dR/dy = -R / sqrt((1+y)^2 + 4)
        dr = r * abs(ry.value) * rel / math.sqrt((1 + ry.value) ** 2 + 4)
        return EvalResult(r, dr + 2 * EPS * r, ry.terms_used, ry.converged, ry.flags)

    v = complex(v)
    radius = abs(v)
    anchor = min(radius, 1e-3)
    radii = np.geomspace(anchor, radius, steps) if radius > anchor else np.array([radius])
    direction = v / radius
    ratio = None
    ry = None
    for r_j in radii:
        qj = direction * r_j
        ry = y_of_q(qj, t)
        r1, r2 = _quadratic_roots(np.array(complex(ry.value)))
        root5 = qj ** 0.2
        c1, c2 = complex(r1) / root5, complex(r2) / root5
        ref = (1.0 - qj) if ratio is None else ratio
        d1, d2 = abs(c1 - ref), abs(c2 - ref)
        if min(d1, d2) > 0.5 * max(d1, d2):
            raise BranchError(f"cannot track the branch of R near q = {qj!r}")
        ratio = c1 if d1 < d2 else c2
    value = ratio * v ** 0.2
    rel = ry.err_estimate / max(abs(ry.value), 1e-300)
    return EvalResult(value, abs(value) * (rel + 4 * EPS), ry.terms_used, ry.converged)


def rr_cf_oracle(q: float, depth: int = 200, tol: float = 1e-13) -> EvalResult:
    """R(q) by backward recurrence of the continued fraction (real q only).

    The estimate compares depth and depth // 2.
    """
    q = float(q)
    if not 0.0 <= q < 1.0:
        raise DomainError("rr_cf_oracle needs real q in [0, 1)")
    if depth < 2:
        raise ValueError("depth must be at least 2")
    if q == 0.0:
        return EvalResult(0.0, 0.0, depth)

    def run(d: int) -> float:
        v = 1.0
        for n in range(d, 0, -1):
            v = 1.0 + q ** n / v
        return q ** 0.2 / v

    full, half = run(depth), run(depth // 2)
    err = abs(full - half)
    return EvalResult(full, err, depth, err <= tol * max(1.0, abs(full)))


def u_of_q(q: NomeLike, t: Truncation = DEFAULT_TRUNCATION, route: str = "product") -> EvalResult:
    """u(q) = 1/R**5 - 11 - R**5.

    ``route="product"`` (default) evaluates f(q)**6 / (q f(q**5)**6), which
    keeps full relative accuracy as u -> 0 and is free of branch choices;
    ``route="rr"`` goes through :func:`rr_value`.
    """
    v = _nome(q)
    if v == 0:
        raise DomainError("u(q) has a pole at q = 0")
    if route == "rr":
        rr = rr_value(v, t)
        r = rr.value
        val = 1.0 / r ** 5 - 11.0 - r ** 5
        dv = abs(5.0 / r ** 6 + 5.0 * r ** 4) * rr.err_estimate + 16 * EPS * abs(1.0 / r ** 5)
        return EvalResult(val, dv, rr.terms_used, rr.converged, rr.flags)
    if route != "product":
        raise ValueError(f"unknown route {route!r}")
    a = euler_product_f(v, t)
    b = euler_product_f(v ** 5, t)
    if b.value == 0:
        raise DomainError("f(q**5) underflowed")
    val = a.value ** 6 / (v * b.value ** 6)
    rel = 6 * a.err_estimate / max(abs(a.value), 1e-300) + 6 * b.err_estimate / abs(b.value)
    return EvalResult(val, abs(val) * (rel + 16 * EPS), a.terms_used,
                      a.converged and b.converged, a.flags)


def y_of_q(q: NomeLike, t: Truncation = DEFAULT_TRUNCATION, route: str = "product") -> EvalResult:
    """y(q) = 1/R - 1 - R; product route f(q**(1/5)) / (q**(1/5) f(q**5))."""
    v = _nome(q)
    if v == 0:
        raise DomainError("y(q) has a pole at q = 0")
    if route == "rr":
        rr = rr_value(v, t)
        r = rr.value
        val = 1.0 / r - 1.0 - r
        dv = abs(1.0 / r ** 2 + 1.0) * rr.err_estimate + 4 * EPS * abs(1.0 / r)
        return EvalResult(val, dv, rr.terms_used, rr.converged, rr.flags)
    if route != "product":
        raise ValueError(f"unknown route {route!r}")
    root5 = v ** 0.2
    a = euler_product_f(root5, t)
    b = euler_product_f(v ** 5, t)
    val = a.value / (root5 * b.value)
    rel = a.err_estimate / max(abs(a.value), 1e-300) + b.err_estimate / abs(b.value)
    return EvalResult(val, abs(val) * (rel + 8 * EPS), a.terms_used,
                      a.converged and b.converged, a.flags)


def lambert_l(q: complex, t: Truncation = DEFAULT_TRUNCATION) -> complex:
    """-f'(q)/f(q) = sum_{n>=1} n q**(n-1) / (1 - q**n)."""
    a = abs(q)
    total = 0j
    qn1 = 1.0 + 0j       # q**(n-1)
    for n in range(1, t.max_terms + 1):
        qn = qn1 * q
        term = n * qn1 / (1.0 - qn)
        total += term
        if n * a ** n / (1.0 - a) ** 2 <= t.tail_tol * max(abs(total), 1.0):
            return total
        qn1 = qn
    raise ConvergenceError("Lambert series unconverged within max_terms")


def u_derivative(q: NomeLike, t: Truncation = DEFAULT_TRUNCATION) -> complex:
    """du/dq through the logarithmic derivative of f(q)**6 / (q f(q**5)**6)."""
    v = complex(_nome(q))
    u = complex(u_of_q(v, t).value)
    return u * (-1.0 / v - 6.0 * lambert_l(v, t) + 30.0 * v ** 4 * lambert_l(v ** 5, t))


def u_derivative_canonical(q: float, t: Truncation = DEFAULT_TRUNCATION) -> float:
    """du/dq = -(f(q**5)**5 / f(q)) u sqrt(125 + 22u + u**2), real q in (0, 1)."""
    q = float(_nome(q))
    f1 = euler_product_f(q, t).value
    f5 = euler_product_f(q ** 5, t).value
    u = f1 ** 6 / (q * f5 ** 6)
    return -(f5 ** 5 / f1) * u * math.sqrt(125.0 + 22.0 * u + u * u)


def y_derivative_canonical(q: float, t: Truncation = DEFAULT_TRUNCATION) -> float:
    """dy/dq = -sqrt(y**2 + 2y + 5) f(q)**5 / (5 q f(q**5)), real q in (0, 1)."""
    q = float(_nome(q))
    y = y_of_q(q, t).value
    f1 = euler_product_f(q, t).value
    f5 = euler_product_f(q ** 5, t).value
    return -math.sqrt(y * y + 2.0 * y + 5.0) * f1 ** 5 / (5.0 * q * f5)
