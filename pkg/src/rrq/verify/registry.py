"""The identity cases.

Each case evaluates a left-hand side (usually a quadrature in q) and one
or more readings of the closed form.  Evaluators receive the run context
and the case's ``domain_params`` and return a list of samples.
"""

from __future__ import annotations

import cmath
import math

import numpy as np

from ..core import DomainError
from ..qseries import rr_cf_oracle, rr_value, u_of_q, y_of_q
from ..specfun import (EllipticArgs, F1Params, HyperParams, TripleFParams,
                       appell_f1, beta_fn, elliptic_e, elliptic_f, elliptic_k,
                       gauss_2f1, theorem1_series, triple_f)
from .kit import (A_SHIFT, ALPHA, B_SHIFT, BETA, GOLDEN, M_ELL, RHO3_SEED,
                  SQRT5, X0_PRINTED, Z_HALF, F, F5, F15, P, P1, R_vec, eta_vec,
                  mono, rho_u, rho_u_complex, u_vec, y_vec)
from .model import AS_PRINTED, IdentityCase, Variant

QUAD_TOL = 1e-8
CLOSED_TOL = 1e-10
PATH_TOL = 1e-6
FD_TOL = 1e-7
TIGHT_TOL = 1e-9

GRID = tuple(round(0.05 * i, 2) for i in range(1, 20))
FD_POINTS = (0.1, 0.3, 0.5, 0.7)
AB = (0.2, 0.6)

# Keys whose values are real nomes and must lie in (0, 1).
_NOME_KEYS = ("a", "b", "q", "x", "qs", "xs", "grid", "points", "intervals", "a_values")


def check_domain(p: dict) -> None:
    for key in _NOME_KEYS:
        if key not in p:
            continue
        vals = np.ravel(np.asarray(p[key], dtype=float))
        bad = vals[~((vals > 0) & (vals < 1))]
        if bad.size:
            raise DomainError(f"parameter {key!r} = {bad[0]:g} is outside 0 < q < 1")
    for key in ("taus",):
        if key in p and not all(v > 0 for v in p[key]):
            raise DomainError(f"parameter {key!r} must be positive")


def V(label, rhs, lhs=None) -> Variant:
    return Variant(label, rhs, lhs)


def _case(cid, description, anchor, lhs, variants, tol=QUAD_TOL, **params):
    return IdentityCase(cid, description, anchor, lhs, tuple(variants), params, tol, check_domain)


def _u(q, ctx):
    return u_of_q(q, ctx.trunc).value


def _y(q, ctx):
    return y_of_q(q, ctx.trunc).value


def _R(q, ctx):
    return rr_value(q, ctx.trunc).value


def _cf_depth(q: float) -> int:
    return max(200, int(60.0 / (1.0 - q)))


# --- pointwise relations ---------------------------------------------------

def _ram_cases():
    def cf(q):
        return rr_cf_oracle(q, _cf_depth(q)).value

    ram1 = _case(
        "RAM-1", "1/R - 1 - R equals f(q^(1/5)) / (q^(1/5) f(q^5)); R from the continued fraction",
        "Ramanujan's relation for 1/R - 1 - R as an eta quotient",
        lambda ctx, p: [1 / cf(q) - 1 - cf(q) for q in p["grid"]],
        [V(AS_PRINTED, lambda ctx, p: list(y_vec(np.array(p["grid"]), ctx.trunc)))],
        tol=CLOSED_TOL, grid=GRID)
    ram2 = _case(
        "RAM-2", "1/R^5 - 11 - R^5 equals f(q)^6 / (q f(q^5)^6); R from the continued fraction",
        "Ramanujan's relation for 1/R^5 - 11 - R^5 as an eta quotient",
        lambda ctx, p: [cf(q) ** -5 - 11 - cf(q) ** 5 for q in p["grid"]],
        [V(AS_PRINTED, lambda ctx, p: list(u_vec(np.array(p["grid"]), ctx.trunc)))],
        tol=CLOSED_TOL, grid=GRID)
    return [ram1, ram2]


def _logr_case():
    def dlogr(ctx, p):
        return [ctx.deriv(lambda x: math.log(float(R_vec(x, ctx.trunc))), q, 1e-3 * q)
                for q in p["points"]]

    def closed(scale):
        return lambda ctx, p: [scale * F(q) ** 5 / (q * F5(q)) for q in p["points"]]

    return _case(
        "LOGR", "d/dq log R(q) equals f(q)^5 / (5 q f(q^5)) (finite-difference check)",
        "exponential integral representation of R(q) from its logarithmic derivative",
        dlogr,
        [V(AS_PRINTED, closed(0.2)), V("without the factor 1/5", closed(1.0))],
        tol=FD_TOL, points=FD_POINTS)


def _ode4_case():
    def lhs(scale):
        def ev(ctx, p):
            out = []
            for q in p["points"]:
                r = float(R_vec(q, ctx.trunc))
                dr = ctx.deriv(lambda x: float(R_vec(x, ctx.trunc)), q, 1e-3 * q)
                out.append(scale * dr / (r * (r ** -5 - 11 - r ** 5) ** (1 / 6)))
            return out
        return ev

    rhs = lambda ctx, p: [F(q) ** 4 * q ** (-5 / 6) for q in p["points"]]
    return _case(
        "ODE-4", "5 R'/(R (1/R^5 - 11 - R^5)^(1/6)) equals f(q)^4 q^(-5/6) pointwise",
        "first-order differential equation linking R(q) and f(q)",
        lhs(5.0),
        [V(AS_PRINTED, rhs), V("without the factor 5", rhs, lhs(1.0))],
        tol=FD_TOL, points=FD_POINTS)


# --- Appell antiderivative, full-interval integrals, eta --------------------

def _appell_S(q, ctx):
    r = _R(q, ctx)
    f1 = appell_f1(F1Params(1 / 6, 1 / 6, 1 / 6, 7 / 6, BETA * r ** 5, ALPHA * r ** 5), ctx.trunc)
    return r ** (5 / 6) * ctx._take(f1, "Appell F1")


def _appell5_case():
    def lhs(ctx, p):
        return [-ctx.quad(mono(4, 0, -5 / 6, ctx.trunc), p["a"], p["b"])]

    def rhs(sign):
        return lambda ctx, p: [sign * 6 * (_appell_S(p["b"], ctx) - _appell_S(p["a"], ctx))]

    return _case(
        "APPELL-5", "definite differences of -6 R^(5/6) F1(...) against -int f(q)^4 q^(-5/6) dq",
        "Appell F1 antiderivative of f(q)^4 q^(-5/6)",
        lhs, [V(AS_PRINTED, rhs(-1.0)), V("opposite sign", rhs(1.0))], a=0.1, b=0.3)


def _h(a, b, c, z, ctx):
    return ctx._take(gauss_2f1(HyperParams(a, b, c, z), ctx.trunc), "2F1")


def _def_cases():
    def6 = _case(
        "DEF-6", "int_0^1 f(q)^4 q^(-5/6) dq in closed form",
        "full-interval integral of f(q)^4 q^(-5/6) via 2F1(1/6,1/6;1;z)",
        lambda ctx, p: [ctx.quad(mono(4, 0, -5 / 6, ctx.trunc), 0.0, 1.0)],
        [V(AS_PRINTED, lambda ctx, p: [math.pi * 2 ** (1 / 6) * (SQRT5 - 1) ** (5 / 6)
                                       * _h(1 / 6, 1 / 6, 1, Z_HALF, ctx)])])
    def7 = _case(
        "DEF-7", "int_0^1 f(q^5)^4 q^(-1/6) dq in closed form",
        "full-interval integral of f(q^5)^4 q^(-1/6) via 2F1(5/6,5/6;1;z)",
        lambda ctx, p: [ctx.quad(mono(0, 4, -1 / 6, ctx.trunc), 0.0, 1.0)],
        [V(AS_PRINTED, lambda ctx, p: [math.pi * (SQRT5 - 1) ** (25 / 6) / (8 * 2 ** (1 / 6))
                                       * _h(5 / 6, 5 / 6, 1, Z_HALF, ctx)])])
    eta4 = lambda x: eta_vec(x) ** 4
    eta8 = _case(
        "ETA-8", "int eta(ix)^4 dx in closed form; upper limit 1 versus infinity",
        "integral of eta(ix)^4 from the substitution a = 1/R(1)^5",
        lambda ctx, p: [ctx.quad(eta4, 0.0, 1.0)],
        [V(AS_PRINTED, lambda ctx, p: [0.5 * GOLDEN ** (5 / 6) * _h(1 / 6, 1 / 6, 1, Z_HALF, ctx)]),
         V("upper limit infinity",
           lambda ctx, p: [0.5 * GOLDEN ** (5 / 6) * _h(1 / 6, 1 / 6, 1, Z_HALF, ctx)],
           lambda ctx, p: [ctx.quad_inf(eta4, 0.0)])])
    return [def6, def7, eta8]


def _thm1_case():
    def S(tau, ctx):
        r = _R(math.exp(-2 * math.pi * tau), ctx)
        return ctx._take(theorem1_series(r, ctx.trunc), "R-power series")

    def lhs(ctx, p):
        t1, t2 = p["taus"]
        return [math.pi / 3 * ctx.quad(lambda x: eta_vec(x) ** 4, t1, t2)]

    def rhs(scale):
        return lambda ctx, p: [scale * (S(p["taus"][1], ctx) - S(p["taus"][0], ctx))]

    return _case(
        "THM1", "(pi/3) int eta(i tau)^4 d tau against differences of the R-power series",
        "R-power series with terminating 2F1 coefficients for the eta^4 antiderivative",
        lhs, [V(AS_PRINTED, rhs(1.0)), V("negated", rhs(-1.0)), V("negated, times 6", rhs(-6.0))],
        taus=(0.4, 1.0))


def _prop2_case():
    c = 2j / (5 * SQRT5) * cmath.sqrt(A_SHIFT)

    def G(q, form, m, sign, ctx):
        if form == "arcsinh":
            w = F5(q) ** 3 * cmath.sqrt(A_SHIFT * q) / F(q) ** 3
            phi = 1j * cmath.asinh(w)
        else:
            w = cmath.sqrt(A_SHIFT) / cmath.sqrt(_u(q, ctx))
            phi = 1j * cmath.asinh(1 / w)
        return sign * c * ctx._take(elliptic_f(EllipticArgs(phi, m)), "elliptic F")

    integrand = mono(2, 2, -0.5)

    def lhs(ctx, p):
        out = [ctx.quad(integrand, a, b) for a, b in p["intervals"]]
        return out + [complex(integrand(q)) for q in p["points"]]

    def rhs(form, m, sign):
        def ev(ctx, p):
            g = lambda q: G(q, form, m, sign, ctx)
            out = [g(b) - g(a) for a, b in p["intervals"]]
            return out + [ctx.deriv(g, q, 1e-3 * q) for q in p["points"]]
        return ev

    return _case(
        "PROP2", "int f(q^5)^2 f(q)^2 q^(-1/2) dq as an incomplete elliptic F with complex parameter",
        "elliptic F antiderivative with parameter 117/125 + 44i/125",
        lhs,
        [V(AS_PRINTED, rhs("arcsinh", M_ELL, 1.0)),
         V("arccsch (proof form)", rhs("arccsch", M_ELL, 1.0)),
         V("arccsch, proof sign", rhs("arccsch", M_ELL, -1.0)),
         V("arcsinh, modulus reading", rhs("arcsinh", M_ELL ** 2, 1.0)),
         V("arccsch, modulus reading", rhs("arccsch", M_ELL ** 2, 1.0))],
        intervals=((0.2, 0.3), (0.3, 0.5)), points=(0.25, 0.4))


# --- substitution engine ----------------------------------------------------

_K_IDS = {-1: "m1", 0: "0", 0.5: "1/2", 1: "1", 1.5: "3/2", 2: "2"}


def _thm2_cases():
    out = []
    for k in (-1, 0, 0.5, 1, 1.5):
        def lhs(ctx, p, k=k):
            return [ctx.quad(mono(6 * k - 1, 5 - 6 * k, -k, ctx.trunc), p["a"], p["b"])]

        def rhs(power, ctx, p):
            ua, ub = _u(p["a"], ctx), _u(p["b"], ctx)
            return [-ctx.xint(lambda x: x ** power / np.sqrt(P(x)), ua, ub)]

        variants = [V(AS_PRINTED, lambda ctx, p, k=k: rhs(k - 1, ctx, p))]
        if k != 0:
            variants.append(V("pairing 6k+5, q^k, x^(-k-1)",
                              lambda ctx, p, k=k: rhs(-k - 1, ctx, p)))
        out.append(_case(
            f"THM2-{_K_IDS[k]}",
            f"int (f5/f)^(5-6k) f^4 q^(-k) dq against -int_u(a)^u(b) x^(k-1)/sqrt(125+22x+x^2) dx, k = {k}",
            "substitution x = u(q) turning the q-integral into an algebraic one",
            lhs, variants, tol=TIGHT_TOL, a=AB[0], b=AB[1], k=k))
    return out


def _thm3_cases():
    out = []
    for k in (0, 1, 2):
        def lhs(ctx, p, k=k):
            return [ctx.quad(mono(-6 * k - 1, 6 * k + 5, k, ctx.trunc), 0.0, p["a"])]

        def rhs(nu, ctx, p):
            u = _u(p["a"], ctx)
            r = triple_f(TripleFParams(A_SHIFT + u, B_SHIFT + u, u, 0.5, 0.5, nu), ctx.spec)
            return [ctx._take(r, "three-factor integral")]

        out.append(_case(
            f"THM3-{_K_IDS[k]}",
            f"int_0^a (f5/f)^(6k+5) f^4 q^k dq as the three-factor integral at u(a), k = {k}",
            "three-factor integral with shifts 11+2i+u, 11-2i+u, u",
            lhs,
            [V(AS_PRINTED, lambda ctx, p, k=k: rhs(k, ctx, p)),
             V("third exponent k+1", lambda ctx, p, k=k: rhs(k + 1, ctx, p))],
            a=0.3, k=k))
    return out


G_U = (("x", lambda x: x), ("x^2", lambda x: x ** 2), ("x+x^3", lambda x: x + x ** 3))


def _thm4_case():
    def lhs(ctx, p):
        base = mono(-1, 5, 0, ctx.trunc)
        return [ctx.quad(lambda q, g=g: g(u_vec(q, ctx.trunc)) * base(q), p["a"], p["b"])
                for _, g in G_U]

    def rhs(sign):
        def ev(ctx, p):
            ua, ub = _u(p["a"], ctx), _u(p["b"], ctx)
            return [sign * ctx.xint(lambda x, g=g: g(x) / (x * np.sqrt(P(x))), ua, ub)
                    for _, g in G_U]
        return ev

    return _case(
        "THM4", "int G(u) f5^5/f dq against -int G(x)/(x sqrt(125+22x+x^2)) dx for G in {x, x^2, x+x^3}",
        "power-series G version of the u-substitution",
        lhs, [V(AS_PRINTED, rhs(-1.0)), V("opposite sign", rhs(1.0))], a=AB[0], b=AB[1])


def _ex1_case():
    def rhs(sign):
        def ev(ctx, p):
            ua, ub = _u(p["a"], ctx), _u(p["b"], ctx)
            return [sign * (math.asinh((11 + ub) / 2) - math.asinh((11 + ua) / 2))]
        return ev

    return _case(
        "EX1", "int f^5/(f5 q) dq equals -arcsinh((11+x)/2) between u(a) and u(b)",
        "arcsinh antiderivative of the k = 1 substitution",
        lambda ctx, p: [ctx.quad(mono(5, -1, -1, ctx.trunc), p["a"], p["b"])],
        [V(AS_PRINTED, rhs(-1.0)), V("opposite sign", rhs(1.0))],
        tol=TIGHT_TOL, a=AB[0], b=AB[1])


def B_anti(x: float) -> float:
    """Antiderivative of x^(-2) / sqrt(125 + 22x + x^2)."""
    s = math.sqrt(P(x))
    k = 11.0 / (625.0 * SQRT5)
    return -s / (125.0 * x) - k * math.log(x) + k * math.log(125.0 + 11.0 * x + 5.0 * SQRT5 * s)


B_INF = -1.0 / 125.0 + 11.0 / (625.0 * SQRT5) * math.log(11.0 + 5.0 * SQRT5)


def _ex2_case():
    def rhs(sign):
        def ev(ctx, p):
            return [sign * (B_anti(_u(p["b"], ctx)) - B_anti(_u(p["a"], ctx)))]
        return ev

    lhs11 = lambda ctx, p: [ctx.quad(mono(-7, 11, 1, ctx.trunc), p["a"], p["b"])]
    return _case(
        "EX2", "int f5 f^-3 q dq (as printed) against the closed antiderivative B(x) at u(a), u(b)",
        "closed antiderivative B(x) for the k = -1 substitution",
        lambda ctx, p: [ctx.quad(mono(-3, 1, 1, ctx.trunc), p["a"], p["b"])],
        [V(AS_PRINTED, rhs(1.0)),
         V("f5^11/f^7 integrand", rhs(1.0), lhs11),
         V("f5^11/f^7 integrand, negated", rhs(-1.0), lhs11)],
        tol=TIGHT_TOL, a=AB[0], b=AB[1])


def _ex3_ex4_thm5():
    m3 = 0.5 - 11.0 / (10.0 * SQRT5)

    def K(m, ctx):
        return ctx._take(elliptic_k(m), "elliptic K")

    ex3 = _case(
        "EX3", "int_0^1 f5^2 f^2 q^(-1/2) dq as a complete elliptic integral K",
        "complete elliptic K at 1/2 - 11/(10 sqrt5)",
        lambda ctx, p: [ctx.quad(mono(2, 2, -0.5, ctx.trunc), 0.0, 1.0)],
        [V(AS_PRINTED, lambda ctx, p: [2 / 5 ** 0.75 * K(m3, ctx)]),
         V("modulus reading", lambda ctx, p: [2 / 5 ** 0.75 * K(m3 ** 2, ctx)])])
    ex4 = _case(
        "EX4", "int_0^1 f5^3 f q^(-1/3) dq as 2F1(1/3,5/6;1;-4/121)",
        "2F1(1/3,5/6;1;-4/121) evaluation",
        lambda ctx, p: [ctx.quad(mono(1, 3, -1 / 3, ctx.trunc), 0.0, 1.0)],
        [V(AS_PRINTED, lambda ctx, p: [2 * math.pi / (11 ** (2 / 3) * math.sqrt(3))
                                       * _h(1 / 3, 5 / 6, 1, -4 / 121, ctx)])])
    out = [ex3, ex4]
    for k, tag in ((1 / 3, "1/3"), (0.5, "1/2"), (2 / 3, "2/3")):
        out.append(_case(
            f"THM5-{tag}", f"int_0^1 (f5/f)^(5-6k) f^4 q^(-k) dq in closed form, k = {tag}",
            "full-interval integral for 0 < k < 1 via 2F1((1-k)/2, 1-k/2; 1; -4/121)",
            lambda ctx, p, k=k: [ctx.quad(mono(6 * k - 1, 5 - 6 * k, -k, ctx.trunc), 0.0, 1.0)],
            [V(AS_PRINTED, lambda ctx, p, k=k: [
                11 ** (k - 1) * math.pi / math.sin(k * math.pi)
                * _h((1 - k) / 2, 1 - k / 2, 1, -4 / 121, ctx)])],
            k=k))
    return out


def thm5_closed(k: float) -> float:
    return (11 ** (k - 1) * math.pi / math.sin(k * math.pi)
            * gauss_2f1(HyperParams((1 - k) / 2, 1 - k / 2, 1, -4 / 121)).value.real)


def ex3_closed() -> float:
    return 2 / 5 ** 0.75 * elliptic_k(0.5 - 11.0 / (10.0 * SQRT5)).value.real


def ex4_closed() -> float:
    return (2 * math.pi / (11 ** (2 / 3) * math.sqrt(3))
            * gauss_2f1(HyperParams(1 / 3, 5 / 6, 1, -4 / 121)).value.real)


# --- roots and complex paths ------------------------------------------------

def _prop3_cases():
    rho1 = lambda ctx: rho_u(0.5, ctx.trunc)
    printed1 = math.log((7 + 3 * SQRT5) / 2) / SQRT5
    p31 = _case(
        "PROP3-1", "int_0^rho1 f5^5/f dq with u(rho1) = 1/2 against its printed logarithm",
        "integral up to the root of u = 1/2, logarithmic evaluation",
        lambda ctx, p: [ctx.quad(mono(-1, 5, 0, ctx.trunc), 0.0, rho1(ctx))],
        [V(AS_PRINTED, lambda ctx, p: [printed1]),
         V("f5/f integrand (exponent 1)", lambda ctx, p: [printed1],
           lambda ctx, p: [ctx.quad(mono(-1, 1, 0, ctx.trunc), 0.0, rho1(ctx))]),
         V("algebraic integral int_1/2^inf dx/(x sqrt(125+22x+x^2))",
           lambda ctx, p: [ctx.xint_inf(lambda x: 1 / (x * np.sqrt(P(x))), 0.5)])],
        u_target=0.5)

    phi = 1j * cmath.asinh(cmath.sqrt(complex(22, -4)))
    sq = cmath.sqrt(B_SHIFT)

    def closed32(se, sf):
        def ev(ctx, p):
            e = ctx._take(elliptic_e(EllipticArgs(phi, M_ELL)), "elliptic E")
            f = ctx._take(elliptic_f(EllipticArgs(phi, M_ELL)), "elliptic F")
            return [(250 * math.sqrt(1090) + se * 88j * sq * e + sf * complex(4, 66) * sq * f) / 46875]
        return ev

    p32 = _case(
        "PROP3-2", "int_0^rho1 f^13 f5^-9 q^(3/2) dq against the printed E/F combination",
        "elliptic E and F combination at amplitude i arcsinh(sqrt(22-4i))",
        lambda ctx, p: [ctx.quad(mono(13, -9, 1.5, ctx.trunc), 0.0, rho1(ctx))],
        [V(AS_PRINTED, closed32(1, -1)),
         V("(f5/f)^14 f^4 q^(3/2) integrand", closed32(1, -1),
           lambda ctx, p: [ctx.quad(mono(-10, 14, 1.5, ctx.trunc), 0.0, rho1(ctx))]),
         V("E term sign flipped", closed32(-1, -1)),
         V("F term sign flipped", closed32(1, 1))],
        u_target=0.5)

    def closed33(m):
        def ev(ctx, p):
            ph = 1j * cmath.asinh(5 * SQRT5 / cmath.sqrt(A_SHIFT))
            f = ctx._take(elliptic_f(EllipticArgs(ph, m)), "elliptic F")
            return [-2j * cmath.sqrt(A_SHIFT) / (5 * SQRT5) * f]
        return ev

    p33 = _case(
        "PROP3-3", "int_0^rho2 f5^2 f^2 q^(-1/2) dq with u(rho2) = 1 as an elliptic F",
        "integral up to the root of u = 1, elliptic F evaluation",
        lambda ctx, p: [ctx.quad(mono(2, 2, -0.5, ctx.trunc), 0.0, rho_u(1.0, ctx.trunc))],
        [V(AS_PRINTED, closed33(M_ELL)), V("modulus reading", closed33(M_ELL ** 2))],
        u_target=1.0)
    return [p31, p32, p33]


def _thm6_cases():
    out = []
    base = complex(-11, -2) / 125

    def closed(e, ctx):
        # (base)^e B(1/2, e) 2F1(1/2, e; 1/2 + e; m)
        return base ** e * beta_fn(0.5, e) * _h(0.5, e, 0.5 + e, M_ELL, ctx)

    for k, tag in ((0, "0"), (0.5, "1/2")):
        def lhs(ctx, p, k=k):
            rho3 = rho_u_complex(complex(-11, 2), RHO3_SEED, ctx.trunc)
            g = lambda q: F(q, ctx.trunc) ** (-6 * k - 1) * F5(q, ctx.trunc) ** (6 * k + 5) * q ** k
            return [ctx.quad_path(g, 0j, rho3)]

        variants = [V(AS_PRINTED, lambda ctx, p, k=k: [closed(1 + k, ctx)])]
        if k != 0:
            variants.append(V("proof form (-6k+5, q^-k, 1-k)",
                              lambda ctx, p, k=k: [closed(1 - k, ctx)]))
        out.append(_case(
            f"THM6-{tag}", f"int_0^rho3 (f5/f)^(6k+5) f^4 q^k dq along the segment to the complex root, k = {tag}",
            "integral to the complex root of u = -11+2i via Beta and 2F1",
            lhs, variants, tol=PATH_TOL, k=k))
    return out


# --- further identities ---------------------------------------------------

def _oth_cases():
    def expo(beta_exp):
        return lambda ctx, p: [cmath.exp(5 * SQRT5 * ctx.quad(mono(-1, beta_exp, 0, ctx.trunc), 0.0, a))
                               for a in p["a_values"]]

    def closed1(ctx, p):
        out = []
        for a in p["a_values"]:
            u = _u(a, ctx)
            out.append((125 + 11 * u + 5 * SQRT5 * math.sqrt(P(u))) / ((11 + 5 * SQRT5) * u))
        return out

    oth1 = _case(
        "OTH1", "exp(5 sqrt5 int_0^a f5/f dq) against an algebraic function of u(a)",
        "exponential of the integral as an algebraic function of u",
        expo(1), [V(AS_PRINTED, closed1), V("f5^5/f integrand", closed1, expo(5))],
        a_values=(0.2, 0.5))

    def closed2(sign):
        return lambda ctx, p: [sign * (B_INF - B_anti(_u(a, ctx))) for a in p["a_values"]]

    oth2 = _case(
        "OTH2", "int_0^a f5^11 f^-7 q dq as B(inf) - B(u(a))",
        "integral from 0 as a closed function of u(a)",
        lambda ctx, p: [ctx.quad(mono(-7, 11, 1, ctx.trunc), 0.0, a) for a in p["a_values"]],
        [V(AS_PRINTED, closed2(1.0)), V("negated", closed2(-1.0))],
        tol=TIGHT_TOL, a_values=(0.3, 0.6))
    return [oth1, oth2]


def _g_fifth(t):
    """f(t)^5 / (f(t^(1/5)) t^(4/5))."""
    t = np.asarray(t)
    return F(t) ** 5 / (F15(t) * t ** 0.8)


def _eq11_case():
    def lhs(ctx, p):
        return [math.exp(SQRT5 * ctx.quad(_g_fifth, 0.0, q)) for q in p["qs"]]

    def closed(ctx, p):
        out = []
        for q in p["qs"]:
            w = _u(q ** 0.2, ctx)
            out.append((125 + 11 * w + 5 * SQRT5 * math.sqrt(P(w))) / ((11 + 5 * SQRT5) * w))
        return out

    def intermediate(ctx, p):
        return [math.exp(-ctx.xint_inf(lambda x: 1 / (x * np.sqrt(P(x))), _u(q ** 0.2, ctx)))
                for q in p["qs"]]

    return _case(
        "EQ11", "exp(sqrt5 int_0^q f(t)^5/(f(t^(1/5)) t^(4/5)) dt) against an algebraic function of u(q^(1/5))",
        "exponential identity in w = u(q^(1/5))",
        lhs, [V(AS_PRINTED, closed), V("intermediate line", intermediate)], qs=(0.3, 0.6))


def _thm7_case():
    def lhs(ctx, p):
        return [ctx.deriv(lambda x: _u(x, ctx), q, 1e-3 * q) for q in p["points"]]

    def printed(ctx, p):
        return [F(q) / F5(q) ** 5 * _u(q, ctx) * math.sqrt(P(_u(q, ctx))) for q in p["points"]]

    def canonical(ctx, p):
        return [-F5(q) ** 5 / F(q) * _u(q, ctx) * math.sqrt(P(_u(q, ctx))) for q in p["points"]]

    return _case(
        "THM7", "u'(q) against the first-order differential equation for u",
        "differential equation for u equivalent to the u-substitution",
        lhs, [V(AS_PRINTED, printed), V("canonical -(f5^5/f) u sqrt(...)", canonical)],
        tol=FD_TOL, points=FD_POINTS)


G_R = (("x", lambda x: x),
       ("(1/x^5-11-x^5)^(1/6)", lambda x: (x ** -5.0 - 11.0 - x ** 5) ** (1 / 6)))


def _eq13_case():
    def lhs(power):
        def ev(ctx, p):
            return [ctx.quad(lambda q, g=g: F(q) ** 4 * q ** power * g(R_vec(q, ctx.trunc)),
                             p["a"], p["b"]) for _, g in G_R]
        return ev

    def rhs(scale):
        def ev(ctx, p):
            ra, rb = _R(p["a"], ctx), _R(p["b"], ctx)
            s = lambda x: (x ** -5.0 - 11.0 - x ** 5) ** (1 / 6)
            return [scale * ctx.quad(lambda x, g=g: g(x) / (x * s(x)), ra, rb) for _, g in G_R]
        return ev

    return _case(
        "EQ13", "int f^4 G(R(q)) dq against int G(x)/(x (1/x^5-11-x^5)^(1/6)) dx over [R(a), R(b)]",
        "substitution x = R(q) for functions G of R",
        lhs(0.0),
        [V(AS_PRINTED, rhs(1.0)),
         V("q^(-5/6) restored", rhs(1.0), lhs(-5 / 6)),
         V("q^(-5/6) restored, RHS x5", rhs(5.0), lhs(-5 / 6))],
        a=AB[0], b=AB[1])


def _logr_ab_case():
    def rhs(scale):
        return lambda ctx, p: [scale * (math.log(_R(p["b"], ctx)) - math.log(_R(p["a"], ctx)))]

    return _case(
        "LOGR-AB", "int f^5/(f5 q) dq against multiples of log R(q) between a and b",
        "Ramanujan's formula for log R(q) as a q-integral",
        lambda ctx, p: [ctx.quad(mono(5, -1, -1, ctx.trunc), p["a"], p["b"])],
        [V(AS_PRINTED, rhs(1.0)), V("factor 1/5", rhs(0.2)), V("factor 5", rhs(5.0))],
        tol=TIGHT_TOL, a=AB[0], b=AB[1])


def _yint(ctx, p, h):
    ya, yb = _y(p["a"], ctx), _y(p["b"], ctx)
    return ctx.xint(lambda x: h(x) / np.sqrt(P1(x)), ya, yb)


def _thm8_case():
    ks = (0.0, 0.5, 1.0)

    def lhs(scale):
        def ev(ctx, p):
            return [scale * ctx.quad(lambda q, k=k: y_vec(q, ctx.trunc) ** k * _g_fifth(q),
                                     p["a"], p["b"]) for k in p["ks"]]
        return ev

    def rhs(scale):
        return lambda ctx, p: [-scale * _yint(ctx, p, lambda x, k=k: x ** (k - 1)) for k in p["ks"]]

    return _case(
        "THM8", "int y^k q^(-4/5) f^5/f(q^(1/5)) dq against -int x^(k-1)/sqrt(5+2x+x^2) dx over [y(a), y(b)]",
        "substitution x = y(q) with the factor in front of the q-integral",
        lhs(2.0),
        [V(AS_PRINTED, rhs(1.0)),
         V("LHS factor 1", rhs(1.0), lhs(1.0)),
         V("LHS factor 5", rhs(1.0), lhs(5.0)),
         V("RHS factor 5", rhs(5.0), lhs(1.0))],
        a=AB[0], b=AB[1], ks=ks)


def _son_case():
    def rhs(scale):
        def ev(ctx, p):
            out = []
            for q in p["qs"]:
                e = math.exp(scale * ctx.quad(_g_fifth, 0.0, q))
                out.append(GOLDEN - SQRT5 / (1 + (3 + SQRT5) / 2 * e))
            return out
        return ev

    return _case(
        "SON", "R(q) from the exponential of the integral of f(t)^5/(f(t^(1/5)) t^(4/5))",
        "closed formula for R(q) through an exponential of a q-integral",
        lambda ctx, p: [_R(q, ctx) for q in p["qs"]],
        [V(AS_PRINTED, rhs(1 / SQRT5)), V("exponent factor sqrt5", rhs(SQRT5))],
        tol=TIGHT_TOL, qs=(0.2, 0.5, 0.8))


def _thm9_case():
    def lhs(ctx, p):
        return [ctx.quad(lambda q, g=g: g(y_vec(q, ctx.trunc)) * _g_fifth(q), p["a"], p["b"])
                for _, g in G_U]

    def rhs(scale):
        return lambda ctx, p: [-scale * _yint(ctx, p, lambda x, g=g: g(x) / x) for _, g in G_U]

    return _case(
        "THM9", "int G(y) q^(-4/5) f^5/f(q^(1/5)) dq against -5 int G(x)/(x sqrt(5+2x+x^2)) dx",
        "power-series G version of the y-substitution",
        lhs, [V(AS_PRINTED, rhs(5.0)), V("factor 1", rhs(1.0))], a=AB[0], b=AB[1])


def _app_cases():
    def lhs(scale):
        return lambda ctx, p: [scale * ctx.quad(mono(5, -1, -1, ctx.trunc), X0_PRINTED, x)
                               for x in p["xs"]]

    def rhs(ctx, p):
        return [math.asinh(0.5) - math.asinh((1 + _y(x, ctx)) / 2) for x in p["xs"]]

    app1 = _case(
        "APP1", "(1/5) int_x0^x f^5/(f5 q) dq against arcsinh(1/2) - arcsinh((1+y(x))/2)",
        "integral from the printed zero x0 of y",
        lhs(0.2), [V(AS_PRINTED, rhs), V("without the factor 1/5", rhs, lhs(1.0))],
        xs=(0.75, 0.9), x0=X0_PRINTED)

    def lhs2(ctx, p):
        x = p["x"]
        return [ctx.quad(lambda q, k=k: y_vec(q, ctx.trunc) ** k * _g_fifth(q), 0.0, x)
                for k in p["ks"]]

    def rhs2(scale):
        def ev(ctx, p):
            y = _y(p["x"], ctx)
            out = []
            for k in p["ks"]:
                r = triple_f(TripleFParams(complex(1, 2) + y, complex(1, -2) + y, y, 0.5, 0.5, 1 - k),
                             ctx.spec)
                out.append(scale * ctx._take(r, "three-factor integral"))
            return out
        return ev

    app2 = _case(
        "APP2", "int_0^x y^k q^(-4/5) f^5/f(q^(1/5)) dq as 5 times a three-factor integral at y(x)",
        "three-factor integral with shifts 1+2i+y, 1-2i+y, y",
        lhs2, [V(AS_PRINTED, rhs2(5.0)), V("factor 1", rhs2(1.0))], x=0.5, ks=(0.0, 0.5))
    return [app1, app2]


def build_registry() -> list:
    """All identity cases in a fixed order."""
    cases = []
    cases += _ram_cases()
    cases += [_logr_case(), _ode4_case(), _appell5_case()]
    cases += _def_cases()
    cases += [_thm1_case(), _prop2_case()]
    cases += _thm2_cases()
    cases += _thm3_cases()
    cases += [_thm4_case(), _ex1_case(), _ex2_case()]
    cases += _ex3_ex4_thm5()
    cases += _prop3_cases()
    cases += _thm6_cases()
    cases += _oth_cases()
    cases += [_eq11_case(), _thm7_case(), _eq13_case(), _logr_ab_case(), _thm8_case(),
              _son_case(), _thm9_case()]
    cases += _app_cases()
    return cases
