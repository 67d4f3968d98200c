from __future__ import annotations

import cmath
import math

import mpmath
import pytest

from rrq.core import BranchError, PoleError
from rrq.quad import differentiate
from rrq.specfun import (EllipticArgs, agm, carlson_rd, carlson_rf, crosses_cut, elliptic_e,
                         elliptic_f, elliptic_k, elliptic_k_agm)

M_ELL = complex(117, 44) / 125
K_PARAM = 0.5 - 11 / (10 * math.sqrt(5))


def test_carlson_against_mpmath():
    for x, y, z in ((1.0, 2.0, 3.0), (0.5j, 1 + 1j, 2.0), (0.0, 0.3 - 0.2j, 1.0)):
        assert abs(carlson_rf(x, y, z) - complex(mpmath.elliprf(x, y, z))) < 1e-14
        assert abs(carlson_rd(x, y, z) - complex(mpmath.elliprd(x, y, z))) < 1e-13


def test_zero_amplitude():
    for m in (0.3, M_ELL):
        assert elliptic_f(EllipticArgs(0, m)).value == 0
        assert elliptic_e(EllipticArgs(0, m)).value == 0


def test_zero_parameter():
    phi = complex(0.3, 0.1)
    assert abs(elliptic_f(EllipticArgs(phi, 0)).value - phi) < 1e-15
    assert abs(elliptic_e(EllipticArgs(phi, 0)).value - phi) < 1e-15


@pytest.mark.parametrize("phi,m", [(0.7, 0.4), (complex(0.3, 0.2), M_ELL), (0.2j, M_ELL),
                                   (complex(1.1, -0.4), complex(0.5, 0.5))])
def test_against_mpmath(phi, m):
    assert abs(elliptic_f(EllipticArgs(phi, m)).value - complex(mpmath.ellipf(phi, m))) < 1e-13
    assert abs(elliptic_e(EllipticArgs(phi, m)).value - complex(mpmath.ellipe(phi, m))) < 1e-13


def test_derivatives_match_integrands():
    phi, m = 0.2j, M_ELL
    d = lambda t: 1 - m * cmath.sin(t) ** 2
    df = differentiate(lambda t: elliptic_f(EllipticArgs(phi + t, m)).value, 0.0, 1e-3).value
    de = differentiate(lambda t: elliptic_e(EllipticArgs(phi + t, m)).value, 0.0, 1e-3).value
    assert abs(df - d(phi) ** -0.5) < 1e-8 * abs(d(phi) ** -0.5)
    assert abs(de - d(phi) ** 0.5) < 1e-8 * abs(d(phi) ** 0.5)


def test_k_values():
    assert abs(elliptic_k(0).value - math.pi / 2) < 1e-15
    # The parameter 1/2 - 11/(10 sqrt5) is 0.0080650..., not 0.008198.
    assert K_PARAM == pytest.approx(0.00806504, abs=1e-8)
    for m in (K_PARAM, 0.5, 0.3):
        assert abs(elliptic_k(m).value - elliptic_k_agm(m)) < 1e-13


def test_k_singularities():
    with pytest.raises(PoleError):
        elliptic_k(1)
    with pytest.raises(BranchError):
        elliptic_k(2.0)


def test_agm():
    assert agm(1, 1) == 1
    a, b = 1.0, 0.3
    assert agm(a, b) == pytest.approx(agm((a + b) / 2, math.sqrt(a * b)), rel=1e-15)
    assert math.pi / (2 * agm(1, math.sqrt(0.7))) == pytest.approx(float(mpmath.ellipk(0.3)),
                                                                    abs=1e-13)
    with pytest.raises(ValueError):
        agm(-1, 1)


def test_cut_detection():
    assert not crosses_cut(0.5, 0.3)
    assert crosses_cut(complex(2.5, 0.2), 3.0)
    assert "branch" in elliptic_f(EllipticArgs(complex(2.5, 0.2), 3.0)).flags
    assert not elliptic_f(EllipticArgs(complex(0.3, 0.2), M_ELL)).flags
