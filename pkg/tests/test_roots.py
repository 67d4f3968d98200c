from __future__ import annotations

import pytest

from rrq.core import DomainError, NoSignChangeError
from rrq.qseries import u_derivative, u_of_q, y_of_q
from rrq.roots import RootSpec, solve_complex, solve_real

RHO3_PRINTED = complex(-0.2302539558379255, -0.1672892791313823)


def test_rootspec_validation():
    with pytest.raises(ValueError):
        RootSpec("w", 0)
    with pytest.raises(DomainError):
        RootSpec("u", 1, bracket=(0.5, 0.2))
    with pytest.raises(DomainError):
        RootSpec("u", 1, bracket=(0.0, 0.5))
    assert RootSpec("u", "1,2").target_value == 1 + 2j


@pytest.mark.parametrize("c,expected", [(0.5, 0.2407687486883669), (1.0, 0.1979506224840334)])
def test_real_roots_of_u(c, expected):
    q = solve_real(RootSpec("u", c))
    assert abs(u_of_q(q).value - c) < 1e-12
    assert q == pytest.approx(expected, abs=1e-13)


def test_y_has_no_real_zero():
    # y(q) = f(q^(1/5)) / (q^(1/5) f(q^5)) is a ratio of positive products on (0, 1).
    with pytest.raises(NoSignChangeError):
        solve_real(RootSpec("y", 0.0))
    assert all(y_of_q(q / 100).value > 0 for q in range(1, 100))


def test_y_level_sets_are_solvable():
    q = solve_real(RootSpec("y", 0.5))
    assert abs(y_of_q(q).value - 0.5) < 1e-12


@pytest.mark.parametrize("q0", [0.05, 0.2, 0.35, 0.5, 0.6, 0.7])
def test_round_trip(q0):
    c = u_of_q(q0).value
    assert solve_real(RootSpec("u", c)) == pytest.approx(q0, abs=1e-9)


def test_complex_round_trip():
    c = u_of_q(0.5).value
    q = solve_complex(RootSpec("u", c, seed=0.4))
    assert abs(q - 0.5) < 1e-10


def test_complex_root_of_critical_value():
    rho3 = solve_complex(RootSpec("u", complex(-11, 2), seed=complex(-0.23, -0.17), tol=1e-9))
    assert abs(u_of_q(rho3).value - complex(-11, 2)) < 1e-9
    # -11 + 2i is a critical value of u, so the root is double: u' vanishes there.
    assert abs(u_derivative(rho3)) < 1e-6
    # The printed digits agree only to about 1e-8.
    assert abs(rho3 - RHO3_PRINTED) < 2e-8
    assert abs(u_of_q(RHO3_PRINTED).value - complex(-11, 2)) < 1e-9


def test_complex_needs_seed():
    with pytest.raises(DomainError):
        solve_complex(RootSpec("u", 1.0))


def test_complex_root_against_high_precision_oracle():
    import mpmath

    with mpmath.workdps(40):
        def f(q):
            p = mpmath.mpf(1)
            for n in range(1, 200):
                p *= 1 - q ** n
            return p

        u = lambda q: f(q) ** 6 / (q * f(q ** 5) ** 6)
        exact = complex(mpmath.findroot(lambda q: mpmath.diff(u, q),
                                        mpmath.mpc(-0.2302539, -0.1672893)))
    rho3 = solve_complex(RootSpec("u", complex(-11, 2), seed=complex(-0.23, -0.17), tol=1e-9))
    assert abs(rho3 - exact) < 1e-13


@pytest.mark.parametrize("q", [0.75, 0.9])
def test_real_root_small_target_is_relative(q):
    # u(0.75) ~ 1.5e-10: an absolute 1e-12 stop would leave q off by 1e-8.
    assert abs(solve_real(RootSpec("u", u_of_q(q).value)) - q) < 1e-12
