"""Log-gamma, Beta and digamma for complex arguments."""

from __future__ import annotations

import cmath
import math

from ..core import PoleError

# Lanczos approximation, g = 7, nine coefficients.
_G = 7.0
_LANCZOS = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)
_HALF_LOG_2PI = 0.5 * math.log(2.0 * math.pi)
_LOG_PI = math.log(math.pi)


def is_pole(z: complex) -> bool:
    z = complex(z)
    return z.imag == 0.0 and z.real <= 0.0 and z.real == math.floor(z.real)


_MAX_SHIFT = 100000


def lngamma(z: complex) -> complex:
    """Principal log Gamma(z), analytic off the negative real axis.

    For Re z < 1/2 the argument is shifted right with
    log Gamma(z) = log Gamma(z + n) - sum_k log(z + k), which keeps the
    branch of the analytic continuation (the convention of scipy's and
    mpmath's loggamma).  Beyond ``_MAX_SHIFT`` reflection is used and the
    imaginary part is only correct modulo 2 pi.
    """
    z = complex(z)
    if is_pole(z):
        raise PoleError(f"Gamma has a pole at {z.real:g}")
    if z.real < 0.5:
        n = math.ceil(0.5 - z.real)
        if n > _MAX_SHIFT:
            return _LOG_PI - cmath.log(cmath.sin(math.pi * z)) - lngamma(1.0 - z)
        acc = 0j
        for k in range(n):
            acc += cmath.log(z + k)
        return _lanczos(z + n) - acc
    return _lanczos(z)


def _lanczos(z: complex) -> complex:
    z -= 1.0
    x = _LANCZOS[0]
    for k in range(1, len(_LANCZOS)):
        x += _LANCZOS[k] / (z + k)
    t = z + _G + 0.5
    return _HALF_LOG_2PI + (z + 0.5) * cmath.log(t) - t + cmath.log(x)


def gamma(z: complex) -> complex:
    return cmath.exp(lngamma(z))


def rgamma(z: complex) -> complex:
    """1/Gamma(z), zero at the poles of Gamma."""
    if is_pole(z):
        return 0j
    return cmath.exp(-lngamma(z))


def beta_fn(a: complex, b: complex) -> complex:
    """B(a, b) = Gamma(a) Gamma(b) / Gamma(a + b)."""
    a, b = complex(a), complex(b)
    for v in (a, b, a + b):
        if is_pole(v):
            raise PoleError(f"Beta({a}, {b}) hits a Gamma pole")
    return cmath.exp(lngamma(a) + lngamma(b) - lngamma(a + b))


# B_{2k} / (2k) for the asymptotic digamma series.
_DIGAMMA_ASY = (1 / 12, -1 / 120, 1 / 252, -1 / 240, 1 / 132, -691 / 32760, 1 / 12)


def digamma(z: complex) -> complex:
    """psi(z) = Gamma'(z)/Gamma(z)."""
    z = complex(z)
    if is_pole(z):
        raise PoleError(f"digamma has a pole at {z.real:g}")
    if z.real < 0.5:
        return digamma(1.0 - z) - math.pi / cmath.tan(math.pi * z)
    acc = 0j
    while abs(z) < 15.0:
        acc -= 1.0 / z
        z += 1.0
    w = 1.0 / (z * z)
    s = 0j
    p = w
    for c in _DIGAMMA_ASY:
        s += c * p
        p *= w
    return acc + cmath.log(z) - 0.5 / z - s
