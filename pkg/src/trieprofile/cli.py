"""Command-line front end.

    trieprofile simulate --p 0.7 --n 256 --trials 1000 --seed 1
    trieprofile profile --p 0.7 --n 50 --second
    trieprofile cseries --p 0.6 --u 1 --v 0.6 --grad
    trieprofile tables --table sample
    trieprofile verify --suite all

Output is JSON ({"meta": ..., "data": [rows]}) or CSV with '#' header
lines.  Exit codes: 0 ok, 2 usage, 3 numerical/truncation failure,
4 verification failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from typing import Callable, Dict, List, Optional

from gmpy2 import mpfr

from . import __version__
from .numerics import Bias, default_precision, to_decimal, working_precision

EXIT_OK, EXIT_USAGE, EXIT_NUMERIC, EXIT_VERIFY = 0, 2, 3, 4
DIGITS = 15


class UsageError(Exception):
    pass


def _fmt(x):
    if isinstance(x, (bool, str)) or x is None:
        return x
    if isinstance(x, int):
        return x
    return to_decimal(mpfr(x), DIGITS)


def render(meta: Dict, rows: List[Dict], fmt: str) -> str:
    rows = [{k: _fmt(v) for k, v in r.items()} for r in rows]
    if fmt == "json":
        return json.dumps({"meta": meta, "data": rows}, indent=2, sort_keys=False) + "\n"
    buf = io.StringIO()
    for key, val in meta.items():
        buf.write(f"# {key}={json.dumps(val, sort_keys=True)}\n")
    if rows:
        cols: List[str] = []
        for r in rows:
            cols.extend(c for c in r if c not in cols)
        w = csv.DictWriter(buf, fieldnames=cols, lineterminator="\n", restval="")
        w.writeheader()
        w.writerows(rows)
    return buf.getvalue()


def _emit(args, meta: Dict, rows: List[Dict]) -> None:
    text = render(meta, rows, args.format)
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _meta(args, **extra) -> Dict:
    flags = {k: v for k, v in sorted(vars(args).items())
             if k not in ("func", "out", "format") and v is not None}
    meta = {"tool": "trieprofile", "version": __version__, "subcommand": args.cmd,
            "precision_bits": args.precision or default_precision(), "flags": flags}
    meta.update(extra)
    return meta


def _bias(text: str) -> Bias:
    try:
        return Bias.of(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(str(exc))


def _trunc(args):
    from .cseries import CTruncation, DEFAULT_TRUNCATION
    if not args.trunc:
        return DEFAULT_TRUNCATION
    try:
        vals = [int(t) for t in args.trunc.split(",")]
        if len(vals) != 4:
            raise ValueError(f"got {len(vals)} values")
        return CTruncation(*vals)
    except (ValueError, TypeError) as exc:
        raise UsageError(f"--trunc expects J0,L0,K0,R0: {exc}")


# --- subcommands ------------------------------------------------------------------

def cmd_simulate(args) -> int:
    from .simulator import run_trials
    bias = _bias(args.p)
    if args.n < 1 or args.trials < 1:
        raise UsageError("--n and --trials must be positive")
    s = run_trials(args.n, bias, args.trials, args.seed, batch=args.batch)
    rows = []
    mean, var = s.mean_profile(), s.var_profile()
    for k in range(len(mean)):
        if s.profile_sum[k] or k <= max(s.height_hist):
            rows.append({"kind": "profile", "k": k, "mean": float(mean[k]), "var": float(var[k]),
                         "stderr": float(math.sqrt(var[k] / s.trials))})
    for kind, hist in (("height", s.height_hist), ("fillup", s.fillup_hist), ("depth", s.depth_hist)):
        for k, c in hist.items():
            rows.append({"kind": kind, "k": k, "count": c})
    _emit(args, _meta(args, seed=args.seed, p=args.p, trials=args.trials,
                      ordering_violations=s.ordering_violations), rows)
    return EXIT_OK


def cmd_profile(args) -> int:
    from .profile_exact import mean_profile, second_moment_profile
    bias = _bias(args.p)
    if args.n < 1:
        raise UsageError("--n must be positive")
    build = second_moment_profile if args.second else mean_profile
    t = build(args.n, bias, args.precision, k_max=args.k_max)
    rows = []
    for n in ([args.n] if args.row_only else range(1, args.n + 1)):
        for k, m in enumerate(t.row(n)):
            r = {"n": n, "k": k, "mu": m}
            if args.second:
                r["var"] = t.var(n, k)
            rows.append(r)
    _emit(args, _meta(args), rows)
    return EXIT_OK


def cmd_xi(args) -> int:
    from .xi_engine import xi_asymptotic, xi_gf_coefficients, xi_limits
    bias = _bias(args.p)
    if args.l_max < 1:
        raise UsageError("--l-max must be positive")
    xi = xi_limits(args.l_max, bias, args.precision)
    gf = xi_gf_coefficients(args.l_max, bias, args.precision)
    rows = [{"ell": l, "xi": xi[l], "gf_coefficient": gf[l - 1],
             "xi_asymptotic": xi_asymptotic(l, bias, args.precision)}
            for l in range(1, args.l_max + 1)]
    _emit(args, _meta(args), rows)
    return EXIT_OK


def cmd_identity(args) -> int:
    from .xi_engine import d_identity_witness, d_of_p
    bias = _bias(args.p)
    d = d_of_p(bias, 80, 80, args.precision)
    rows = [{"N": w.N, "Q": w.Q, "F": w.F, "F_from_xi": w.F_from_xi, "residual": w.residual}
            for w in d_identity_witness(bias, args.n, args.precision)]
    _emit(args, _meta(args, D_of_p=_fmt(d)), rows)
    return EXIT_OK


def cmd_cseries(args) -> int:
    from .cseries import c_components, grad_c
    trunc = _trunc(args)
    res = c_components(args.p, args.u, args.v, trunc, args.precision)
    row = {"p": args.p, "u": args.u, "v": args.v, "C": res.value}
    if args.grad:
        dp, du, dv = grad_c(args.p, args.u, args.v, trunc, precision=args.precision)
        row.update({"dC/dp": dp, "dC/du": du, "dC/dv": dv})
    if args.components:
        row.update(res.components)
    _emit(args, _meta(args, truncation=trunc.as_dict(), warnings=res.warnings), [row])
    return EXIT_OK


def _rel(a, b):
    a, b = mpfr(a), mpfr(b)
    return abs(a - b) / abs(b) if b != 0 else abs(a - b)


def table_rows(name: str, trunc=None, precision: Optional[int] = None,
               limit: Optional[int] = None) -> List[Dict]:
    """Recomputed reference table with golden values and relative diffs."""
    from . import golden
    from .cseries import DEFAULT_TRUNCATION, c_components, grad_c, h1
    trunc = trunc or DEFAULT_TRUNCATION
    rows: List[Dict] = []
    if name in ("sample", "grid"):
        src = golden.C_SAMPLE if name == "sample" else golden.C_GRID
        for p, u, v, ref in src[:limit]:
            res = c_components(p, u, v, trunc, precision)
            rows.append({"p": p, "u": u, "v": v, "C": res.value, "golden": ref,
                         "rel_diff": _rel(res.value, ref), "warnings": ";".join(res.warnings)})
    elif name == "h1":
        for _, ut, ref in golden.H1_VALUES[:limit]:
            val = h1(ut, trunc, precision)
            # the two printed tables disagree at u~ = 0, so that row is informational
            note = "printed values disagree; not a target" if mpfr(ut) == 0 else ""
            rows.append({"u_tilde": ut, "h1": val, "golden": ref, "rel_diff": _rel(val, ref),
                         "note": note})
    elif name == "gradient":
        # the fourth printed column is C / |grad C|_1
        for p, u, v, ref, gp, gu, gv in golden.C_GRADIENT[:limit]:
            val = c_components(p, u, v, trunc, precision).value
            dp, du, dv = grad_c(p, u, v, trunc, precision=precision)
            ratio = val / (abs(dp) + abs(du) + abs(dv))
            rows.append({"p": p, "u": u, "v": v, "C": val, "C/|grad|": ratio, "golden": ref,
                         "rel_diff": _rel(ratio, ref),
                         "dC/dp": dp, "dC/dp_golden": gp, "dC/du": du, "dC/du_golden": gu,
                         "dC/dv": dv, "dC/dv_golden": gv})
    else:
        raise UsageError(f"unknown table {name!r}")
    return rows


def cmd_tables(args) -> int:
    rows = table_rows(args.table, _trunc(args), args.precision, args.limit)
    _emit(args, _meta(args, truncation=_trunc(args).as_dict()), rows)
    return EXIT_OK


def cmd_asymptotics(args) -> int:
    from .asymptotics import depth_limits, entropy, predict_fillup, predict_height
    bias = _bias(args.p)
    if args.n < 3:
        raise UsageError("--n must be at least 3")
    row = {"n": args.n, "p": args.p, "entropy": entropy(bias)}
    h = predict_height(args.n, bias, args.epsilon)
    row.update({"height": h.point_estimate, "height_kL": h.window_low, "height_kU": h.window_high})
    if args.n >= 16:
        f = predict_fillup(args.n, bias, args.epsilon)
        row.update({"fillup": f.point_estimate, "fillup_kL": f.window_low, "fillup_kU": f.window_high})
    d = depth_limits(bias)
    row.update({"depth_liminf": d.liminf, "depth_typical": d.typical, "depth_limsup": d.limsup,
                "degenerate": d.degenerate})
    args.format = "json" if args.format is None else args.format
    _emit(args, _meta(args, branch=h.branch), [row])
    return EXIT_OK


# --- verification suites ----------------------------------------------------------

def _suite_conservation(bias: Bias, fault: bool) -> Dict:
    from .profile_exact import mean_profile
    t = mean_profile(60, bias)
    if fault:
        t.mu[10, 3] = t.mu[10, 3] * (1 + mpfr("1e-20"))
    with working_precision(t.precision):
        worst = max(abs(sum(t.row(n), mpfr(0)) - n) / n for n in range(1, 61))
    return {"check": "sum_k mu[n][k] = n, n <= 60", "value": float(worst), "limit": 1e-40,
            "passed": worst < 1e-40}


def _suite_coupling(bias: Bias, fault: bool) -> Dict:
    from .simulator import build_patricia, draw_streams, run_renyi, stats, trial_seed
    bad = 0
    for n in (8, 64):
        for t in range(100):
            st = draw_streams(n, bias, trial_seed(5, t))
            a, b = build_patricia(st), run_renyi(st)
            if a.shape() != b.shape() or stats(a) != stats(b):
                bad += 1
    return {"check": "renyi tree isomorphic to patricia (200 trials)", "value": bad, "limit": 0,
            "passed": bad == 0}


def _suite_dual_route(bias: Bias, fault: bool) -> Dict:
    from .poisson_mellin import make_context, poisson_G, residue_G
    ctx = make_context(bias, 10, 4, second=False)
    worst = 0.0
    for n in (5, 10):
        for k in range(1, 5):
            g = poisson_G(k, n, ctx)
            for rho in (0.5, -1.5):
                worst = max(worst, float(abs(residue_G(k, n, rho, ctx) - g) / g))
    return {"check": "residue sum vs Poisson sum", "value": worst, "limit": 1e-8,
            "passed": worst < 1e-8}


def _suite_identity(bias: Bias, fault: bool) -> Dict:
    from .xi_engine import d_identity_witness, d_of_p
    if bias.symmetric:
        bias = Bias.of("0.75")
    d = abs(d_of_p(bias, 80, 80))
    wit = max(abs(w.residual) for w in d_identity_witness(bias, 100))
    ok = d < 1e-12 and wit < mpfr(2) ** -(default_precision() // 2)
    return {"check": f"D(p) = 0 at p = {bias.label()}", "value": float(d),
            "witness_residual": float(wit), "limit": 1e-12, "passed": bool(ok)}


def _suite_depoisson(bias: Bias, fault: bool) -> Dict:
    from .asymptotics import entropy
    from .poisson_mellin import depoisson_mu, make_context
    if bias.symmetric:
        bias = Bias.of("0.7")
    ns = (25, 50, 100)
    h = float(entropy(bias))
    kcs = [max(3, round(math.log(n) / h)) for n in ns]
    ctx = make_context(bias, max(ns), max(kcs) + 3, second=False)
    errs = []
    for n, kc in zip(ns, kcs):
        e = 0.0
        for k in range(kc - 2, kc + 3):
            exact = ctx.profile.mean(n, k)
            e = max(e, float(abs(depoisson_mu(n, k, ctx) - exact) / exact))
        errs.append(e)
    ok = all(a > b for a, b in zip(errs, errs[1:]))
    return {"check": "depoissonized mean error shrinks (window around central k)",
            "value": errs, "passed": ok}


def _suite_bounds(bias: Bias, fault: bool) -> Dict:
    from .profile_exact import mean_profile, tail_bounds
    from .simulator import run_trials
    n, trials = 64, 2000
    t = mean_profile(n, bias)
    s = run_trials(n, bias, trials, 11)
    worst = -1.0
    for k in range(n):
        emp = s.prob_height_above(k)
        se = math.sqrt(emp * (1 - emp) / trials)
        worst = max(worst, emp - float(tail_bounds(t, n, k).height_tail) - 3 * se)
    return {"check": "P[H_n > k] <= sum_{j>k} mu[n][j] (+3 s.e.), n = 64", "value": worst,
            "passed": worst <= 0}


SUITES: Dict[str, Callable[[Bias, bool], Dict]] = {
    "conservation": _suite_conservation,
    "coupling": _suite_coupling,
    "dual-route": _suite_dual_route,
    "identity": _suite_identity,
    "depoisson": _suite_depoisson,
    "bounds": _suite_bounds,
}


def cmd_verify(args) -> int:
    bias = _bias(args.p)
    names = list(SUITES) if args.suite == "all" else [args.suite]
    rows = []
    for name in names:
        try:
            r = SUITES[name](bias, args.inject_fault)
        except ArithmeticError as exc:
            r = {"check": name, "passed": False, "error": str(exc)}
        r = {"suite": name, **r}
        if isinstance(r.get("value"), list):
            r["value"] = json.dumps(r["value"])
        rows.append(r)
    ok = all(r["passed"] for r in rows)
    args.format = args.format or "json"
    _emit(args, _meta(args, all_passed=ok), rows)
    return EXIT_OK if ok else EXIT_VERIFY


# --- parser -------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="trieprofile", description=__doc__.splitlines()[0])
    ap.add_argument("--version", action="version", version=__version__)
    sub = ap.add_subparsers(dest="cmd", required=True)

    def add(name, func, help_, default_format="csv"):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("--format", choices=("csv", "json"), default=default_format)
        sp.add_argument("--out", help="write to this path instead of stdout")
        sp.add_argument("--precision", type=int, help="working precision in bits")
        sp.set_defaults(func=func)
        return sp

    sp = add("simulate", cmd_simulate, "Monte Carlo profile, height, fillup and depth")
    sp.add_argument("--p", required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--trials", type=int, default=1000)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--batch", type=int, help="trials per vectorized batch (does not change results)")

    sp = add("profile", cmd_profile, "exact profile moments")
    sp.add_argument("--p", required=True)
    sp.add_argument("--n", type=int, required=True, help="N_max")
    sp.add_argument("--k-max", type=int)
    sp.add_argument("--second", action="store_true", help="include Var[B_{n,k}]")
    sp.add_argument("--row-only", action="store_true", help="only the row n = N_max")

    sp = add("xi", cmd_xi, "near-diagonal limit coefficients")
    sp.add_argument("--p", required=True)
    sp.add_argument("--l-max", type=int, default=12)

    sp = add("identity", cmd_identity, "D(p) and the telescoping witness")
    sp.add_argument("--p", required=True)
    sp.add_argument("--n", type=int, default=100, help="witness length")

    sp = add("cseries", cmd_cseries, "the height constant C(p,u,v)")
    sp.add_argument("--p", required=True)
    sp.add_argument("--u", required=True)
    sp.add_argument("--v", required=True)
    sp.add_argument("--trunc", help="J0,L0,K0,R0 (default 35,70,80,95)")
    sp.add_argument("--grad", action="store_true")
    sp.add_argument("--components", action="store_true")

    sp = add("tables", cmd_tables, "reference tables with diffs against printed values")
    sp.add_argument("--table", choices=("sample", "h1", "gradient", "grid"), default="sample")
    sp.add_argument("--trunc")
    sp.add_argument("--limit", type=int, help="first rows only")

    sp = add("asymptotics", cmd_asymptotics, "height/fillup/depth predictions", "json")
    sp.add_argument("--p", required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--epsilon", type=float, default=0.5)

    sp = add("verify", cmd_verify, "invariant suites; exit 4 on failure", "json")
    sp.add_argument("--suite", choices=("all",) + tuple(SUITES), default="all")
    sp.add_argument("--p", default="0.7")
    sp.add_argument("--inject-fault", action="store_true", help="perturb one mu entry (mutation test)")
    return ap


def main(argv: Optional[List[str]] = None) -> int:
    from .cseries import GeometryError
    from .simulator import GuardExceeded
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0) and EXIT_USAGE
    try:
        if args.precision is not None:
            if args.precision < 64:
                raise UsageError("--precision must be at least 64 bits")
            with working_precision(args.precision):
                return args.func(args)
        return args.func(args)
    except (UsageError, GeometryError) as exc:
        print(f"trieprofile: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ArithmeticError, GuardExceeded) as exc:
        print(f"trieprofile: numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except ValueError as exc:
        print(f"trieprofile: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
