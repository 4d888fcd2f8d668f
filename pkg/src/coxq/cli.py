"""Command line front end: ``coxq compute | verify | table``."""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from coxq import assembly, chebyshev, universal, verify
from coxq.assembly import GroupDescriptor
from coxq.series import BivarSeries, Series, SeriesError, TrivarPoly

DEFAULT_ORDER = 24
FAMILIES = {"sym": "symmetric", "affine-sym": "affine_symmetric", "universal": "universal"}
KINDS = ("P", "F", "L", "LJ", "T", "sigma", "limit", "cigler", "chebyshev")
TABLE_KINDS = ("P", "F", "L", "LJ", "T", "sigma")


class UsageError(Exception):
    pass


class ChebyshevPoly(tuple):
    """Ascending integer coefficients in x."""

    def __str__(self):
        parts = []
        for d, c in reversed([(d, c) for d, c in enumerate(self) if c]):
            mono = "" if d == 0 else ("x" if d == 1 else f"x^{d}")
            mag = abs(c)
            body = mono if (mag == 1 and mono) else (f"{mag}*{mono}" if mono else str(mag))
            if not parts:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append((" - " if c < 0 else " + ") + body)
        return "".join(parts) if parts else "0"


# -- computing ----------------------------------------------------------------


def _need(value, flag: str, why: str):
    if value is None:
        raise UsageError(f"{flag} is required {why}")
    return value


def compute_object(family: str, kind: str, n: int | None, order: int, f=None, j=None, k=None,
                   aut: str = "id", s_degree: int = 4, brute: bool = False):
    """Return the series / polynomial object requested on the command line."""
    if kind == "cigler":
        return chebyshev.cigler_T(_need(n, "--n", "for --kind cigler"))
    if kind == "chebyshev":
        return ChebyshevPoly(chebyshev.classical_T(_need(n, "--n", "for --kind chebyshev")))
    if kind == "limit":
        return assembly.limit_product(order, s_degree)
    n = _need(n, "--n", f"for --kind {kind}")
    if n < 1:
        raise UsageError("--n must be positive")
    fam = FAMILIES[family]

    if fam == "universal":
        if kind == "T":
            j = _need(j, "--j", "for the universal T^J series")
            if brute:
                return universal.uc_brute(n, None, "TJ", order, j=j)
            return universal.uc_closed(n, j, "TJ", order)
        if kind == "P":
            if brute:
                return universal.uc_brute(n, None, "P", order)
            return universal.uc_closed(n, 0, "P", order)
        if kind in ("F", "L"):
            f = _need(f, "--f", f"for universal --kind {kind}")
            if brute:
                return universal.uc_brute(n, universal.standard_automorphism(n, f), kind, order)
            return universal.uc_closed(n, f, kind, order)
        raise UsageError(f"--kind {kind} is not available for the universal family")

    g = GroupDescriptor(fam, n)
    if kind == "P":
        return assembly.poincare_brute(g, order) if brute else assembly.poincare_closed(g, order)
    if kind == "F":
        return assembly.F_brute(g, aut, order)
    if kind == "L":
        if brute or aut != "id":
            return assembly.L_brute(g, aut, order)
        return assembly.L_closed(g, order)
    if kind == "LJ":
        if fam != "symmetric":
            raise UsageError("--kind LJ is only defined for --family sym")
        return assembly.LJ_finite_example(n, order)
    if fam != "affine_symmetric":
        raise UsageError(f"--kind {kind} needs --family affine-sym")
    if kind == "T":
        if brute:
            return assembly.T_brute(n, order)
        return assembly.T_closed(n)
    if kind == "sigma":
        k = _need(k, "--k", "for --kind sigma")
        if not 0 <= k <= n // 2:
            raise UsageError("--k must lie in 0..n//2")
        return (assembly.sigma_brute if brute else assembly.sigma_closed)(n, k, order)
    raise UsageError(f"unknown kind {kind!r}")


# -- rendering ----------------------------------------------------------------


def render_text(obj) -> str:
    return str(obj)


def render_json(obj) -> str:
    if isinstance(obj, ChebyshevPoly):
        data = {"var": "x", "coeffs": list(obj)}
    else:
        data = obj.to_json()
    return json.dumps(data, sort_keys=True)


def grid(obj) -> tuple[list[str], list[list[int]]]:
    """Coefficient grid: rows are q-degree, columns are s-degree."""
    if isinstance(obj, Series):
        return ["q_degree", "s^0"], [[d, c] for d, c in enumerate(obj.coeffs)]
    if isinstance(obj, BivarSeries):
        cols = len(obj.coeffs)
        rows = max(len(c.coeffs) for c in obj.coeffs)
        header = ["q_degree"] + [f"s^{k}" for k in range(cols)]
        body = [[d] + [obj[k][d] if d < len(obj[k].coeffs) else 0 for k in range(cols)]
                for d in range(rows)]
        return header, body
    if isinstance(obj, TrivarPoly):
        at_one = obj.at_x_one()
        cols = max(at_one, default=0) + 1
        rows = max((len(v) for v in at_one.values()), default=1)
        header = ["q_degree"] + [f"s^{k}" for k in range(cols)]
        body = [[d] + [at_one.get(k, ())[d] if d < len(at_one.get(k, ())) else 0 for k in range(cols)]
                for d in range(rows)]
        return header, body
    if isinstance(obj, ChebyshevPoly):
        return ["x_degree", "coeff"], [[d, c] for d, c in enumerate(obj)]
    raise TypeError(f"cannot tabulate {type(obj).__name__}")


def render_csv(obj) -> str:
    header, body = grid(obj)
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(body)
    return buf.getvalue().rstrip("\n")


RENDER = {"text": render_text, "json": render_json, "csv": render_csv}


def _compute_rendered(params: dict, fmt: str) -> str:
    obj = compute_object(**params)
    exact_poly = params["kind"] == "T" and params["family"] == "affine-sym" and not params["brute"]
    if fmt == "text" and exact_poly:
        # the closed T is a genuine polynomial: no truncation tail
        return obj.polynomial_str()
    return RENDER[fmt](obj)


# -- argument parsing ---------------------------------------------------------


def _add_common(p: argparse.ArgumentParser, table: bool = False):
    p.add_argument("--family", choices=list(FAMILIES), default="affine-sym")
    p.add_argument("--kind", choices=TABLE_KINDS if table else KINDS, required=True)
    if not table:
        p.add_argument("--n", type=int)
    p.add_argument("--f", type=int, help="generators fixed by the automorphism (universal)")
    p.add_argument("--j", type=int, help="size of the parabolic J (universal T)")
    p.add_argument("--k", type=int, help="block count for --kind sigma")
    p.add_argument("--aut", choices=("id", "flip"), default="id",
                   help="diagram automorphism for F and L (sym / affine-sym)")
    p.add_argument("--order", type=int, default=DEFAULT_ORDER)
    p.add_argument("--s-degree", type=int, default=4)
    p.add_argument("--brute", action="store_true", help="enumerate instead of using closed forms")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="coxq", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    pc = sub.add_parser("compute", help="print one series or polynomial")
    _add_common(pc)
    pc.add_argument("--format", choices=list(RENDER), default="text")

    pv = sub.add_parser("verify", help="run a verification suite and print a JSON report")
    pv.add_argument("suite", nargs="?", default="all", choices=("all",) + verify.SUITES)
    pv.add_argument("--n-max", type=int, default=4)
    pv.add_argument("--order", type=int, default=DEFAULT_ORDER)
    pv.add_argument("--jobs", type=int, default=1)
    pv.add_argument("--format", choices=("json", "text"), default="json")

    pt = sub.add_parser("table", help="sweep n and emit coefficient tables (CSV)")
    _add_common(pt, table=True)
    pt.add_argument("--n-min", type=int, default=1)
    pt.add_argument("--n-max", type=int, required=True)
    pt.add_argument("--out-dir", type=Path, help="write one CSV file per n instead of stdout")
    pt.add_argument("--jobs", type=int, default=1)
    return parser


def _params(args, n: int | None) -> dict:
    return {
        "family": args.family, "kind": args.kind, "n": n, "order": args.order,
        "f": args.f, "j": args.j, "k": args.k, "aut": args.aut,
        "s_degree": args.s_degree, "brute": args.brute,
    }


def _check_order(args, parser):
    if args.order < 0:
        parser.error("--order must be nonnegative")


def _table_one(params: dict) -> str:
    return render_csv(compute_object(**params))


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    out = sys.stdout

    if args.command == "verify":
        _check_order(args, parser)
        if args.n_max < 1 or args.jobs < 1:
            parser.error("--n-max and --jobs must be positive")
        report = verify.run_checks(verify.build_checks(args.suite, args.n_max, args.order), args.jobs)
        if args.format == "json":
            out.write(json.dumps(report, indent=1) + "\n")
        else:
            for rec in report:
                out.write(f"{rec['status'].upper():5} {rec['check']} {json.dumps(rec['params'], sort_keys=True)}\n")
        return 0 if all(r["status"] == "pass" for r in report) else 1

    _check_order(args, parser)
    try:
        if args.command == "compute":
            out.write(_compute_rendered(_params(args, args.n), args.format) + "\n")
            return 0
        if args.n_min < 1 or args.n_max < args.n_min:
            parser.error("need 1 <= --n-min <= --n-max")
        ns = list(range(args.n_min, args.n_max + 1))
        # validate the flag combination once, up front
        compute_object(**_params(args, ns[0]))
        plist = [_params(args, n) for n in ns]
        if args.jobs > 1:
            with ProcessPoolExecutor(max_workers=args.jobs) as pool:
                tables = list(pool.map(_table_one, plist))
        else:
            tables = [_table_one(p) for p in plist]
    except (UsageError, universal.UniversalError, SeriesError, ValueError) as exc:
        parser.error(str(exc))

    if args.out_dir is not None:
        args.out_dir.mkdir(parents=True, exist_ok=True)
        for n, text in zip(ns, tables):
            (args.out_dir / f"{args.kind}_{args.family}_n{n}.csv").write_text(text + "\n")
    else:
        for n, text in zip(ns, tables):
            out.write(f"# n={n}\n{text}\n")
    return 0


if __name__ == "__main__":
    sys.exit(main())
