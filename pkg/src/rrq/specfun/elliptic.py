"""Incomplete elliptic integrals with complex amplitude and parameter.

Parameter convention: F(phi|m) = int_0^phi (1 - m sin^2 t)^(-1/2) dt and
E(phi|m) = int_0^phi (1 - m sin^2 t)^(1/2) dt, both assembled from the
Carlson symmetric forms R_F and R_D.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from ..core import BranchError, ConvergenceError, EvalResult, PoleError

# Duplication stops once the arguments agree to this relative spread; the
# fifth-order tail then leaves an error of order spread**6.
_SPREAD = 1e-10
_MAX_ITER = 200
EPS = float(np.finfo(float).eps)


@dataclass(frozen=True)
class EllipticArgs:
    phi: complex
    m: complex

    def __post_init__(self) -> None:
        object.__setattr__(self, "phi", complex(self.phi))
        object.__setattr__(self, "m", complex(self.m))


def _check_args(*args: complex) -> None:
    zeros = 0
    for v in args:
        if v == 0:
            zeros += 1
        elif v.imag == 0 and v.real < 0:
            raise BranchError("Carlson argument on the negative real axis")
    if zeros > 1:
        raise PoleError("at most one Carlson argument may vanish")


def carlson_rf(x: complex, y: complex, z: complex) -> complex:
    x, y, z = complex(x), complex(y), complex(z)
    _check_args(x, y, z)
    for _ in range(_MAX_ITER):
        mu = (x + y + z) / 3.0
        spread = max(abs(mu - x), abs(mu - y), abs(mu - z))
        if spread <= _SPREAD * abs(mu):
            break
        sx, sy, sz = cmath.sqrt(x), cmath.sqrt(y), cmath.sqrt(z)
        lam = sx * sy + sx * sz + sy * sz
        x, y, z = (x + lam) / 4.0, (y + lam) / 4.0, (z + lam) / 4.0
    else:
        raise ConvergenceError("R_F duplication did not converge")
    X = 1.0 - x / mu
    Y = 1.0 - y / mu
    Z = -(X + Y)
    e2 = X * Y - Z * Z
    e3 = X * Y * Z
    return (1.0 - e2 / 10.0 + e3 / 14.0 + e2 * e2 / 24.0 - 3.0 * e2 * e3 / 44.0) / cmath.sqrt(mu)


_C1, _C2, _C3, _C4 = 3.0 / 14.0, 1.0 / 6.0, 9.0 / 22.0, 3.0 / 26.0
_C5, _C6 = 0.25 * _C3, 1.5 * _C4


def carlson_rd(x: complex, y: complex, z: complex) -> complex:
    x, y, z = complex(x), complex(y), complex(z)
    _check_args(x, y)
    if z == 0:
        raise PoleError("R_D needs z != 0")
    _check_args(z)
    total = 0j
    fac = 1.0
    for _ in range(_MAX_ITER):
        mu = (x + y + 3.0 * z) / 5.0
        spread = max(abs(mu - x), abs(mu - y), abs(mu - z))
        if spread <= _SPREAD * abs(mu):
            break
        sx, sy, sz = cmath.sqrt(x), cmath.sqrt(y), cmath.sqrt(z)
        lam = sx * sy + sx * sz + sy * sz
        total += fac / (sz * (z + lam))
        fac *= 0.25
        x, y, z = (x + lam) / 4.0, (y + lam) / 4.0, (z + lam) / 4.0
    else:
        raise ConvergenceError("R_D duplication did not converge")
    X = (mu - x) / mu
    Y = (mu - y) / mu
    Z = (mu - z) / mu
    ea = X * Y
    eb = Z * Z
    ec = ea - eb
    ed = ea - 6.0 * eb
    ee = ed + ec + ec
    series = 1.0 + ed * (-_C1 + _C5 * ed - _C6 * Z * ee) + Z * (_C2 * ee + Z * (-_C3 * ec + Z * _C4 * ea))
    return 3.0 * total + fac * series / (mu * cmath.sqrt(mu))


def crosses_cut(phi: complex, m: complex, samples: int = 257) -> bool:
    """True if cos^2 t or 1 - m sin^2 t meets the negative real axis for t on [0, phi]."""
    t = np.linspace(0.0, 1.0, samples) * phi
    s2 = np.sin(t) ** 2
    for w in (1.0 - s2, 1.0 - m * s2):
        neg = w.real < 0
        on_axis = neg & (np.abs(w.imag) <= 1e-14 * np.abs(w))
        flips = neg[1:] & neg[:-1] & (np.sign(w.imag[1:]) != np.sign(w.imag[:-1]))
        if on_axis.any() or flips.any():
            return True
    return False


def _pieces(args: EllipticArgs):
    phi, m = args.phi, args.m
    s = cmath.sin(phi)
    c2 = cmath.cos(phi) ** 2
    d = 1.0 - m * s * s
    flags = ("branch",) if crosses_cut(phi, m) else ()
    return s, c2, d, flags


def elliptic_f(args: EllipticArgs) -> EvalResult:
    """F(phi|m) = sin(phi) R_F(cos^2 phi, 1 - m sin^2 phi, 1).

    Principal square roots are used throughout; when the straight contour
    from 0 to phi meets a cut the value is the principal-branch one and
    the result carries the ``"branch"`` flag.
    """
    if args.phi == 0:
        return EvalResult(0j)
    s, c2, d, flags = _pieces(args)
    v = s * carlson_rf(c2, d, 1.0)
    return EvalResult(v, 16 * EPS * abs(v), 0, True, flags)


def elliptic_e(args: EllipticArgs) -> EvalResult:
    """E(phi|m) = sin(phi) R_F(...) - (m/3) sin^3(phi) R_D(cos^2 phi, 1 - m sin^2 phi, 1)."""
    if args.phi == 0:
        return EvalResult(0j)
    s, c2, d, flags = _pieces(args)
    v = s * carlson_rf(c2, d, 1.0) - args.m / 3.0 * s ** 3 * carlson_rd(c2, d, 1.0)
    return EvalResult(v, 32 * EPS * max(abs(v), abs(s)), 0, True, flags)


def elliptic_k(m: complex) -> EvalResult:
    """Complete integral K(m) = R_F(0, 1 - m, 1)."""
    m = complex(m)
    if m == 1:
        raise PoleError("K(m) has a logarithmic singularity at m = 1")
    if m.imag == 0 and m.real > 1:
        raise BranchError("K(m) is on its branch cut for real m > 1")
    v = carlson_rf(0.0, 1.0 - m, 1.0)
    return EvalResult(v, 16 * EPS * abs(v))


def agm(a: float, b: float) -> float:
    """Arithmetic-geometric mean of two positive reals."""
    a, b = float(a), float(b)
    if not (a > 0 and b > 0):
        raise ValueError("agm needs positive arguments")
    for _ in range(100):
        a1, b1 = 0.5 * (a + b), math.sqrt(a * b)
        if a1 == a and b1 == b or a1 == b1:
            return a1
        if abs(a1 - b1) <= EPS * a1:
            return 0.5 * (a1 + b1)
        a, b = a1, b1
    return a


def elliptic_k_agm(m: float) -> float:
    """K(m) = pi / (2 agm(1, sqrt(1 - m))) for real m < 1."""
    m = float(m)
    if not m < 1:
        raise ValueError("AGM route needs real m < 1")
    return math.pi / (2.0 * agm(1.0, math.sqrt(1.0 - m)))
