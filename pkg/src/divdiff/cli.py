"""Command-line front end.

Data files hold one ``t y`` record per line (``#`` starts a comment); a
repeated ``t`` carries the next derivative, so repeats must be adjacent and
the nodes ascending. Newton form files have two lines, ``centers: ...`` and
``coeffs: ...``. Numbers are printed with 17 significant digits.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import analysis, identities, newton, opitz, verify
from .core import HermiteDataset, NewtonPoly, NodeSequence, PowerPoly, cluster_nodes
from .ddtable import build_table, dd, hermite_interpolant
from .functions import by_name


def fmt(x: float) -> str:
    return format(float(x), ".17g")


def parse_floats(text: str) -> list[float]:
    if text is None or not text.strip():
        raise ValueError("empty number list")
    return [float(s) for s in text.replace(",", " ").split()]


def parse_dataset(text: str, tol: float = 0.0) -> HermiteDataset:
    ts, ys = [], []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if len(fields) != 2:
            raise ValueError(f"line {lineno}: expected 't y', got {line!r}")
        ts.append(float(fields[0]))
        ys.append(float(fields[1]))
    if not ts:
        raise ValueError("empty node sequence")
    t = NodeSequence(tuple(ts))  # raises "nodes not clustered"
    if any(b < a for a, b in zip(ts, ts[1:])):
        raise ValueError("nodes not ascending")
    if tol > 0:
        t = cluster_nodes(ts, tol)
    return HermiteDataset(t, tuple(ys))


def format_dataset(data: HermiteDataset) -> str:
    return "".join(f"{fmt(t)} {fmt(y)}\n" for t, y in zip(data.nodes, data.values))


def parse_newton_form(text: str) -> NewtonPoly:
    fields = {}
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        key, _, rest = line.partition(":")
        if key.strip() not in ("centers", "coeffs"):
            raise ValueError(f"unexpected line {line!r}")
        fields[key.strip()] = [float(s) for s in rest.split()]
    if "coeffs" not in fields or "centers" not in fields:
        raise ValueError("Newton form needs 'centers:' and 'coeffs:' lines")
    return NewtonPoly(tuple(fields["centers"]), tuple(fields["coeffs"]))


def format_newton_form(p: NewtonPoly) -> str:
    centers = " ".join(fmt(c) for c in p.centers)
    coeffs = " ".join(fmt(c) for c in p.coeffs)
    return f"centers: {centers}".rstrip() + "\n" + f"coeffs: {coeffs}\n"


def _read(path: str) -> str:
    with open(path) as fh:
        return fh.read()


def _write_or_print(text: str, path: str | None) -> None:
    if path:
        with open(path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_table(args) -> int:
    table = build_table(parse_dataset(_read(args.data), args.tol))
    for row in table.rows():
        print(" ".join(fmt(v) for v in row))
    return 0


def cmd_interp(args) -> int:
    r = hermite_interpolant(parse_dataset(_read(args.data), args.tol))
    _write_or_print(format_newton_form(r), args.out)
    return 0


def cmd_eval(args) -> int:
    p = parse_newton_form(_read(args.form))
    for z in parse_floats(args.at):
        value, _ = newton.horner_eval(p, z)
        print(f"{fmt(z)} {fmt(value)}")
    return 0


def cmd_rebase(args) -> int:
    p = parse_newton_form(_read(args.form))
    centers = parse_floats(args.centers) if args.centers.strip() else []
    _write_or_print(format_newton_form(newton.change_basis(p, centers)), args.out)
    return 0


def cmd_opitz(args) -> int:
    a = opitz.opitz_matrix(parse_floats(args.nodes))
    m = opitz.matrix_polynomial(PowerPoly(tuple(parse_floats(args.power_coeffs))), a)
    for row in m:
        print(" ".join(fmt(v) for v in row))
    return 0


def cmd_bspline(args) -> int:
    knots = NodeSequence(tuple(parse_floats(args.knots)))
    if len(knots) < 2 or not knots[0] < knots[-1]:
        raise ValueError("B-spline needs at least two knots with first < last")
    if args.at:
        for x in parse_floats(args.at):
            print(f"{fmt(x)} {fmt(analysis.bspline_eval(x, knots))}")
    if args.integrate:
        print(f"integral {fmt(analysis.bspline_integral(knots, args.gauss_order))}")
    return 0


METHODS = ("table", "chakalov", "genocchi", "contour", "determinant", "peano")


def cmd_dd(args) -> int:
    f = by_name(args.fn)
    t = cluster_nodes(parse_floats(args.nodes), args.tol)
    cfg = analysis.QuadratureConfig(gauss_order=args.gauss_order, contour_points=args.contour_points)
    methods = METHODS if args.method == "all" else (args.method,)
    if "genocchi" in methods and len(t) > 6:
        raise ValueError("genocchi quadrature is limited to at most 6 nodes")
    for method in methods:
        if method == "table":
            value = dd(f, t.nodes)
        elif method == "chakalov":
            value = identities.apply_functional(identities.chakalov_weights(t), f)
        elif method == "genocchi":
            value = analysis.genocchi_dd(f, t, cfg)
        elif method == "contour":
            value = analysis.contour_dd(f, t, cfg)
        elif method == "determinant":
            if max(t.mult_index) > 0:
                if args.method == "all":
                    continue
                raise ValueError("determinant ratio needs distinct nodes")
            value = analysis.determinant_dd(t, [f(x) for x in t])
        else:
            if t[0] == t[-1]:
                if args.method == "all":
                    continue
                raise ValueError("Peano kernel needs first node < last node")
            value = analysis.peano_dd(f, t, cfg)
        print(f"{method} {fmt(value)}")
    return 0


def cmd_verify(args) -> int:
    results = verify.run_suite(seed=args.seed, trials=args.trials)
    print(verify.format_report(results))
    return 0 if all(r.passed for r in results) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="divdiff", description="Divided differences and Hermite interpolation.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("table", help="print the divided difference table, one order per row")
    p.add_argument("--data", required=True)
    p.add_argument("--tol", type=float, default=0.0)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("interp", help="Newton form of the Hermite interpolant")
    p.add_argument("--data", required=True)
    p.add_argument("--out")
    p.add_argument("--tol", type=float, default=0.0)
    p.set_defaults(func=cmd_interp)

    p = sub.add_parser("eval", help="evaluate a Newton form by nested multiplication")
    p.add_argument("--form", required=True)
    p.add_argument("--at", required=True)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("rebase", help="change the centers of a Newton form")
    p.add_argument("--form", required=True)
    p.add_argument("--centers", required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_rebase)

    p = sub.add_parser("opitz", help="p(A) for the bidiagonal node matrix A")
    p.add_argument("--nodes", required=True)
    p.add_argument("--power-coeffs", required=True)
    p.set_defaults(func=cmd_opitz)

    p = sub.add_parser("bspline", help="B-spline values 'x M(x)'")
    p.add_argument("--knots", required=True)
    p.add_argument("--at")
    p.add_argument("--integrate", action="store_true")
    p.add_argument("--gauss-order", type=int, default=16)
    p.set_defaults(func=cmd_bspline)

    p = sub.add_parser("dd", help="divided difference of a built-in function by several methods")
    p.add_argument("--nodes", required=True)
    p.add_argument("--fn", required=True, help="exp, sin, recip or power:k")
    p.add_argument("--method", choices=METHODS + ("all",), default="all")
    p.add_argument("--tol", type=float, default=0.0)
    p.add_argument("--gauss-order", type=int, default=16)
    p.add_argument("--contour-points", type=int, default=256)
    p.set_defaults(func=cmd_dd)

    p = sub.add_parser("verify", help="run the randomized identity suite")
    p.add_argument("--seed", type=int, default=int(os.environ.get("DIVDIFF_SEED", 1)))
    p.add_argument("--trials", type=int, default=20)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError, ZeroDivisionError, IndexError) as exc:
        print(f"divdiff: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
