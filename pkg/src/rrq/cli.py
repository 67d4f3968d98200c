"""Command-line front end: ``rrq eval | root | verify | integrate | plotdata``.

Exit codes: 0 success, 1 usage or I/O error, 2 unconverged, 3 solver
divergence (including a missing sign change), 4 verification failures.
"""

from __future__ import annotations

import argparse
import logging
import math
import os
import sys

import numpy as np

from .core import (ConvergenceError, DivergenceError, EvalResult, NoSignChangeError,
                   RRQError, as_complex)

EXIT_OK, EXIT_USAGE, EXIT_UNCONVERGED, EXIT_DIVERGED, EXIT_FAILED = 0, 1, 2, 3, 4
FUNCTIONS = ("f", "eta", "R", "u", "y")
_LOG_LEVELS = {"quiet": logging.ERROR, "info": logging.INFO, "debug": logging.DEBUG}

log = logging.getLogger("rrq")


class UsageError(Exception):
    pass


def fmt(z) -> str:
    """Full-precision rendering; complex values as "re,im"."""
    z = complex(z) if isinstance(z, complex) or np.iscomplexobj(z) else float(z)
    if isinstance(z, complex):
        return f"{z.real!r},{z.imag!r}"
    return repr(z)


def _number(text: str) -> complex:
    try:
        z = as_complex(text)
    except (TypeError, ValueError) as exc:
        raise UsageError(f"cannot parse number {text!r}") from exc
    return z


def _nome(text: str):
    z = _number(text)
    return z.real if z.imag == 0 else z


def _pair(text: str) -> tuple[float, float]:
    parts = text.split(",")
    if len(parts) != 2:
        raise UsageError(f"expected 'lo,hi', got {text!r}")
    try:
        return float(parts[0]), float(parts[1])
    except ValueError as exc:
        raise UsageError(f"cannot parse {text!r}") from exc


def _print_result(name: str, r: EvalResult, out) -> int:
    print(f"{name} = {fmt(r.value)}", file=out)
    print(f"err_estimate = {r.err_estimate!r}", file=out)
    print(f"terms_used = {r.terms_used}", file=out)
    if r.flags:
        print(f"flags = {','.join(r.flags)}", file=out)
    if not r.converged:
        print("unconverged", file=sys.stderr)
        return EXIT_UNCONVERGED
    return EXIT_OK


def evaluate(fn: str, q=None, tau=None) -> EvalResult:
    """The library call behind ``eval``."""
    from .qseries import dedekind_eta, euler_product_f, rr_value, u_of_q, y_of_q

    if fn == "eta":
        if tau is None:
            if q is None or isinstance(q, complex) or not 0 < q < 1:
                raise UsageError("eta needs --tau, or a real --q in (0, 1)")
            tau = -math.log(q) / (2 * math.pi)
        return dedekind_eta(tau)
    if q is None:
        raise UsageError(f"{fn} needs --q")
    if fn == "f":
        return euler_product_f(q)
    if fn == "R":
        return rr_value(q)
    if fn == "u":
        return u_of_q(q)
    return y_of_q(q)


def cmd_eval(args, out) -> int:
    q = _nome(args.q) if args.q is not None else None
    if args.tau is not None and args.fn != "eta":
        raise UsageError("--tau only applies to --fn eta")
    r = evaluate(args.fn, q, args.tau)
    return _print_result(args.fn, r, out)


def _parse_target(text: str):
    if "=" not in text:
        raise UsageError("target must look like y=0, u=C or u-complex=RE,IM")
    key, val = text.split("=", 1)
    if key in ("u", "y"):
        return key, float(_number(val).real), False
    if key in ("u-complex", "y-complex"):
        return key[0], _number(val), True
    raise UsageError(f"unknown target {key!r}")


def cmd_root(args, out) -> int:
    from .qseries import u_of_q, y_of_q
    from .roots import RootSpec, solve_complex, solve_real

    fn, value, cplx = _parse_target(args.target)
    bracket = _pair(args.bracket) if args.bracket else None
    seed = _number(args.seed) if args.seed else None
    if cplx and seed is None:
        raise UsageError("complex targets need --seed RE,IM")
    spec = RootSpec(fn, value, bracket=bracket, seed=seed, tol=args.tol)
    root = solve_complex(spec) if cplx else solve_real(spec)
    g = u_of_q if fn == "u" else y_of_q
    residual = abs(g(root).value - value)
    print(f"root = {fmt(root)}", file=out)
    print(f"residual = {residual!r}", file=out)
    return EXIT_OK if residual < args.tol else EXIT_UNCONVERGED


def cmd_verify(args, out) -> int:
    from .verify import RunConfig, build_registry, make_report, run_all, select
    from .verify.report import to_csv, to_json, to_table

    registry = build_registry()
    pattern = None if args.case in (None, "all") else args.case
    if pattern is not None:
        known = {c.id for c in select(registry, pattern)}
        missing = [p for p in pattern.split(",") if p.strip()
                   and not select(registry, p.strip())]
        if not known or missing:
            print(f"unknown case id: {', '.join(missing) or pattern}", file=sys.stderr)
            return EXIT_USAGE
    cfg = RunConfig(tol=args.tol)
    results = run_all(cfg, pattern, jobs=args.jobs, cases=registry)
    rep = make_report(results, cfg.describe())
    text = {"json": to_json, "csv": to_csv, "table": to_table}[args.format](rep)
    if args.out:
        try:
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(text if text.endswith("\n") else text + "\n")
        except OSError as exc:
            print(f"cannot write {args.out}: {exc}", file=sys.stderr)
            return EXIT_USAGE
        print(to_table(rep), file=out)
    else:
        print(text, file=out)
    return EXIT_FAILED if not rep.ok else EXIT_OK


def integrate_both_sides(k: float, a: float, b: float):
    """Both sides of the u-substitution for exponent k on [a, b]."""
    from .qseries import u_of_q
    from .verify.kit import Context, P, mono

    if not 0 < a < b < 1:
        raise UsageError("need 0 < a < b < 1")
    ctx = Context()
    lhs = ctx.quad(mono(6 * k - 1, 5 - 6 * k, -k), a, b)
    ua, ub = u_of_q(a).value, u_of_q(b).value
    rhs = -ctx.xint(lambda x: x ** (k - 1) / np.sqrt(P(x)), ua, ub)
    return lhs, rhs, ctx.notes


def cmd_integrate(args, out) -> int:
    lhs, rhs, notes = integrate_both_sides(args.k, args.a, args.b)
    print(f"q_integral = {fmt(lhs)}", file=out)
    print(f"x_integral = {fmt(rhs)}", file=out)
    print(f"difference = {abs(lhs - rhs)!r}", file=out)
    for n in notes:
        print(f"note: {n}", file=sys.stderr)
    return EXIT_UNCONVERGED if any("unconverged" in n for n in notes) else EXIT_OK


def plot_rows(a: float, b: float, n: int) -> list:
    from .qseries import rr_value, u_of_q, y_of_q

    if n < 1 or not 0 < a <= b < 1 or (n > 1 and a == b):
        raise UsageError("grid needs n >= 1 and 0 < a < b < 1")
    rows = []
    for q in np.linspace(a, b, n):
        q = round(float(q), 12)
        rows.append((q, rr_value(q).value, u_of_q(q).value, y_of_q(q).value))
    return rows


def cmd_plotdata(args, out) -> int:
    rows = plot_rows(args.a, args.b, args.n)
    print("q,R,u,y", file=out)
    for row in rows:
        print(",".join(repr(float(v)) for v in row), file=out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="rrq", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    e = sub.add_parser("eval", help="evaluate f, eta, R, u or y")
    e.add_argument("--fn", choices=FUNCTIONS, required=True)
    e.add_argument("--q", help='nome, real or "re,im"')
    e.add_argument("--tau", type=float, help="eta(i tau) argument")
    e.set_defaults(run=cmd_eval)

    r = sub.add_parser("root", help="solve u(q) = c or y(q) = c")
    r.add_argument("--target", required=True, help="y=0, u=C or u-complex=RE,IM")
    r.add_argument("--seed", help='complex Newton seed "re,im"')
    r.add_argument("--bracket", help='real bracket "lo,hi"')
    r.add_argument("--tol", type=float, default=1e-12)
    r.set_defaults(run=cmd_root)

    v = sub.add_parser("verify", help="run the identity cases")
    v.add_argument("--case", default="all", help="all, an id, a glob, or a comma list")
    v.add_argument("--tol", type=float, help="override every case tolerance")
    v.add_argument("--out", help="write the report here")
    v.add_argument("--format", choices=("table", "json", "csv"), default="table")
    v.add_argument("--jobs", type=int, default=1)
    v.set_defaults(run=cmd_verify)

    i = sub.add_parser("integrate", help="both sides of the u-substitution for exponent k")
    i.add_argument("--k", type=float, required=True)
    i.add_argument("--a", type=float, required=True)
    i.add_argument("--b", type=float, required=True)
    i.set_defaults(run=cmd_integrate)

    g = sub.add_parser("plotdata", help="CSV rows q,R,u,y over a grid")
    g.add_argument("--a", type=float, default=0.05)
    g.add_argument("--b", type=float, default=0.95)
    g.add_argument("--n", type=int, default=64)
    g.set_defaults(run=cmd_plotdata)
    return p


def _setup_logging() -> None:
    level = _LOG_LEVELS.get(os.environ.get("RRQ_LOG", "quiet").lower(), logging.ERROR)
    logging.basicConfig(level=level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")


_VALUE_FLAGS = ("--q", "--seed", "--bracket", "--target", "--a", "--b", "--k", "--tau", "--tol")


def _glue_negative_values(argv: list) -> list:
    """Turn "--q -0.3,0.2" into "--q=-0.3,0.2" so argparse keeps the value."""
    out = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        nxt = argv[i + 1] if i + 1 < len(argv) else None
        if tok in _VALUE_FLAGS and nxt is not None and nxt.startswith("-") and nxt[1:2].isdigit() \
                or tok in _VALUE_FLAGS and nxt is not None and nxt.startswith("-."):
            out.append(f"{tok}={nxt}")
            i += 2
            continue
        out.append(tok)
        i += 1
    return out


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    _setup_logging()
    parser = build_parser()
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        args = parser.parse_args(_glue_negative_values(argv))
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        with np.errstate(all="ignore"):
            return args.run(args, out)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ConvergenceError as exc:
        print(f"unconverged: {exc}", file=sys.stderr)
        return EXIT_UNCONVERGED
    except (DivergenceError, NoSignChangeError) as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_DIVERGED
    except (RRQError, ValueError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
