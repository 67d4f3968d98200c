from __future__ import annotations


import mpmath
import pytest

from rrq.core import DivergenceError, DomainError
from rrq.qseries import rr_value
from rrq.specfun import (ALPHA, BETA, F1Params, TripleFParams, appell_f1, beta_fn, gr_3197,
                         theorem1_series, triple_f)


def test_triple_f_trivial():
    r = triple_f(TripleFParams(1, 1, 1, 0.5, 0.5, 1))
    assert abs(r.value - 1) < 1e-12


def test_triple_f_divergence_and_domain():
    with pytest.raises(DivergenceError):
        triple_f(TripleFParams(1, 1, 1, 0.5, 0.5, 0))
    with pytest.raises(DomainError):
        triple_f(TripleFParams(-1, 1, 1, 0.5, 0.5, 1))


def test_triple_f_conjugate_symmetry():
    u = 1.0
    r = triple_f(TripleFParams(complex(11, 2) + u, complex(11, -2) + u, u, 0.5, 0.5, 1))
    assert abs(r.value.imag) < 1e-12 * abs(r.value)
    direct = mpmath.quad(lambda x: ((x + 12) ** 2 + 4) ** -0.5 / (x + 1), [0, 10, mpmath.inf])
    assert abs(r.value.real - float(direct)) < 1e-10


def test_gr_3197_against_quadrature():
    g = gr_3197(0.5, 0.5, 1, 2, 3).value
    direct = mpmath.quad(lambda x: x ** -0.5 * (x + 2) ** -0.5 / (x + 3), [0, 1, mpmath.inf])
    assert abs(g - float(direct)) < 1e-11
    assert g == pytest.approx(0.7603459963009451, abs=1e-15)


def test_gr_3197_equal_shifts():
    s, mu, nu, A = 0.4, 0.7, 0.9, 2.5
    g = gr_3197(s, mu, nu, A, A).value
    assert abs(g - beta_fn(s, mu + nu - s) * A ** (s - mu - nu)) < 1e-13


def test_gr_3197_equals_triple_f_with_zero_shift():
    # x^(s-1) is (x + 0)^(-(1-s)): the three-factor integral with C = 0.
    s, mu, nu, A, B = 0.5, 0.5, 1.0, 2.0, 3.0
    t = triple_f(TripleFParams(A, B, 0, mu, nu, 1 - s)).value
    assert abs(t - gr_3197(s, mu, nu, A, B).value) < 1e-11


def test_gr_3197_constraints():
    with pytest.raises(DomainError):
        gr_3197(2.0, 0.5, 1.0, 2, 3)


def test_theorem1_series_leading_term():
    r = 1e-4
    assert theorem1_series(r).value / r ** (5 / 6) == pytest.approx(1.0, abs=1e-15)
    assert theorem1_series(0.0).value == 0.0
    with pytest.raises(DomainError):
        theorem1_series(0.7)


def test_theorem1_series_equals_appell_form():
    r = rr_value(0.2).value
    f1 = appell_f1(F1Params(1 / 6, 1 / 6, 1 / 6, 7 / 6, BETA * r ** 5, ALPHA * r ** 5)).value
    assert abs(theorem1_series(r).value - r ** (5 / 6) * f1) < 1e-10


def test_theorem1_series_flags_slow_convergence_near_golden():
    r = rr_value(0.6).value
    assert not theorem1_series(r).converged
