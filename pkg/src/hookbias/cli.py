"""Command-line interface.

Every subcommand writes CSV (default) or JSON to stdout. Exit codes: 0 on
success, 1 when a verification suite fails (the counterexample is printed),
2 on usage errors.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import asymptotics, constants, limits, partitions, qseries, verify

DIGITS = 10


class UsageError(Exception):
    pass


def _dec(x: float) -> str:
    return f"{x:.{DIGITS}f}"


def int_list(text: str) -> list[int]:
    """Parse `7`, `2,3,5` or `2..20` (inclusive) into a sorted, de-duplicated list."""
    out: set[int] = set()
    try:
        for chunk in text.split(","):
            chunk = chunk.strip()
            if ".." in chunk:
                lo, hi = chunk.split("..")
                lo, hi = int(lo), int(hi)
                if lo > hi:
                    raise argparse.ArgumentTypeError(f"empty range {chunk!r}")
                out.update(range(lo, hi + 1))
            else:
                out.add(int(chunk))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, list or range, got {text!r}") from None
    return sorted(out)


def float_list(text: str) -> list[float]:
    try:
        return [float(c) for c in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated reals, got {text!r}") from None


def _positive(values: list[int], name: str, minimum: int = 1) -> list[int]:
    if any(v < minimum for v in values):
        raise UsageError(f"--{name} values must be >= {minimum}")
    return values


def _emit(rows: list[dict], fmt: str, out) -> None:
    if fmt == "json":
        json.dump(rows, out, indent=2)
        out.write("\n")
        return
    if not rows:
        return
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
    w.writeheader()
    for row in rows:
        w.writerow({k: (json.dumps(v, sort_keys=True) if isinstance(v, dict) else v) for k, v in row.items()})
    out.write(buf.getvalue())


def cmd_enumerate(a) -> tuple[list[dict], int]:
    rows = []
    for n in _positive(a.n, "n", 0):
        parts = partitions.enumerate_class(a.cls, n)
        if a.list:
            rows += [{"class": a.cls, "n": n, "parts": " ".join(map(str, p.parts))} for p in parts]
        else:
            rows.append({"class": a.cls, "n": n, "count": len(parts)})
    return rows, 0


def cmd_hooks(a) -> tuple[list[dict], int]:
    rows = []
    ts, ns = _positive(a.t, "t"), _positive(a.n, "n", 0)
    for t in ts:
        if a.method == "series":
            gen = qseries.gen_A if a.cls == "sc" else qseries.gen_B
            series = gen(t, max(ns))
            counts = {n: series[n] for n in ns}
        else:
            brute = partitions.a_star_brute if a.cls == "sc" else partitions.b_star_brute
            counts = {n: brute(t, n) for n in ns}
        rows += [{"class": a.cls, "t": t, "n": n, "count": counts[n], "method": a.method} for n in ns]
    return rows, 0


def cmd_series(a) -> tuple[list[dict], int]:
    if a.t < 1 or a.order < 0:
        raise UsageError("need --t >= 1 and --order >= 0")
    if a.gen == "A":
        if a.variant != "derived":
            raise UsageError("--variant applies to --gen B only")
        s = qseries.gen_A(a.t, a.order)
    else:
        s = qseries.gen_B(a.t, a.order, a.variant)
    return [{"exponent": n, "coefficient": c} for n, c in enumerate(s.to_list())], 0


def cmd_beta(a) -> tuple[list[dict], int]:
    if a.exact and a.method == "quadrature":
        raise UsageError("--exact needs --method closed")
    rows = []
    for t in _positive(a.t, "t"):
        if a.method == "closed":
            b = constants.beta_closed(t)
            row = {"t": t, "method": "closed", "beta": _dec(float(b))}
            if a.exact:
                row.update({"exact": str(b), "r": str(b.r), "s": str(b.s)})
        else:
            row = {"t": t, "method": "quadrature", "beta": _dec(constants.beta_quadrature(t))}
        rows.append(row)
    return rows, 0


def cmd_gamma(a) -> tuple[list[dict], int]:
    rows = []
    for t in _positive(a.t, "t"):
        b = constants.beta_closed(t)
        rows.append({"t": t, "gamma": _dec(1 / (2 * float(b))), "beta": _dec(float(b))})
    return rows, 0


def cmd_limit(a) -> tuple[list[dict], int]:
    closed = limits.limit_gamma()
    series = 1 / (limits.G(0) + limits.G(1))
    return [{"gamma_limit": _dec(closed), "from_series": _dec(series)}], 0


def cmd_asymptotics(a) -> tuple[list[dict], int]:
    rows = []
    ts = [1] if a.family == "size" else _positive(a.t, "t")
    for t in ts:
        for n in _positive(a.n, "n"):
            r = asymptotics.ratio_report(a.family, t, n, a.max_order)
            rows.append({
                "family": a.family, "t": t, "n": n, "exact": r.exact,
                "main_term": f"{r.main_term:.{DIGITS}e}", "ratio": _dec(r.ratio),
            })
    return rows, 0


def _run_suite(name: str, a) -> verify.SuiteResult:
    if name == "genfun":
        return verify.genfun(a.t_max or 8, a.n_max or 60, a.variant)
    if name == "identities":
        return verify.identities(a.n_max or 300)
    if name == "recurrence":
        return verify.recurrence(a.t_max or 300, a.form)
    if name == "rationality":
        return verify.rationality(a.t_max or 300)
    if name == "bound":
        return verify.bound(a.t_max or 1000)
    if name == "laurent":
        return verify.laurent(a.t_max or 10, a.laurent_table)
    if name == "xi":
        return verify.xi(tuple(a.z) if a.z else verify.XI_POINTS, a.psi)
    return verify.limit()


def cmd_verify(a) -> tuple[list[dict], int]:
    names = verify.SUITES if a.suite == "all" else (a.suite,)
    results = [_run_suite(name, a) for name in names]
    return [r.record() for r in results], 0 if all(r.passed for r in results) else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hookbias", allow_abbrev=False, description=__doc__.splitlines()[0])
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, help_text):
        sp = sub.add_parser(name, help=help_text, description=help_text, allow_abbrev=False)
        sp.set_defaults(func=fn)
        return sp

    sp = add("enumerate", cmd_enumerate, "count or list SC(n) / DO(n). CSV: class,n,count (or class,n,parts with --list)")
    sp.add_argument("--class", dest="cls", choices=("sc", "do"), required=True)
    sp.add_argument("--n", type=int_list, required=True)
    sp.add_argument("--list", action="store_true")

    sp = add("hooks", cmd_hooks, "total t-hook counts over SC(n) or DO(n). CSV: class,t,n,count,method")
    sp.add_argument("--class", dest="cls", choices=("sc", "do"), required=True)
    sp.add_argument("--t", type=int_list, required=True)
    sp.add_argument("--n", type=int_list, required=True)
    sp.add_argument("--method", choices=("brute", "series"), default="brute")

    sp = add("series", cmd_series, "coefficients of A*_t or B*_t. CSV: exponent,coefficient")
    sp.add_argument("--gen", choices=("A", "B"), required=True)
    sp.add_argument("--t", type=int, required=True)
    sp.add_argument("--order", type=int, required=True)
    sp.add_argument("--variant", choices=qseries.B_VARIANTS, default="derived",
                    help="inner Pochhammer arguments for B (default: derived)")

    sp = add("beta", cmd_beta, "beta*_t. CSV: t,method,beta[,exact,r,s]")
    sp.add_argument("--t", type=int_list, required=True)
    sp.add_argument("--method", choices=("closed", "quadrature"), default="closed")
    sp.add_argument("--exact", action="store_true", help="also print r + s*log(2)")

    sp = add("gamma", cmd_gamma, "gamma*_t = 1/(2 beta*_t). CSV: t,gamma,beta")
    sp.add_argument("--t", type=int_list, required=True)

    add("limit", cmd_limit, "limit of gamma*_t as t grows. CSV: gamma_limit,from_series")

    sp = add("asymptotics", cmd_asymptotics, "exact counts against main terms. CSV: family,t,n,exact,main_term,ratio")
    sp.add_argument("--family", choices=("a", "b", "size"), required=True)
    sp.add_argument("--t", type=int_list, default=[1])
    sp.add_argument("--n", type=int_list, required=True)
    sp.add_argument("--max-order", type=int, default=10_000)

    sp = add("verify", cmd_verify, "run verification suites. CSV: suite,status,checked,counterexample")
    sp.add_argument("--suite", choices=verify.SUITES + ("all",), required=True)
    sp.add_argument("--t-max", type=int)
    sp.add_argument("--n-max", type=int)
    sp.add_argument("--variant", choices=qseries.B_VARIANTS, default="derived", help="genfun: B variant")
    sp.add_argument("--form", choices=("printed", "corrected"), default="printed", help="recurrence form")
    sp.add_argument("--laurent-table", choices=("printed", "derived"), default="printed")
    sp.add_argument("--psi", choices=tuple(asymptotics.PSI_FORMS), default="printed", help="xi main term")
    sp.add_argument("--z", type=float_list, help="xi: comma-separated real points")
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        rows, code = args.func(args)
    except (UsageError, ValueError, asymptotics.OrderBudgetExceeded) as e:
        print(f"hookbias {args.command}: {e}", file=sys.stderr)
        parser.print_usage(sys.stderr)
        return 2
    _emit(rows, args.format, sys.stdout)
    return code


if __name__ == "__main__":
    sys.exit(main())
