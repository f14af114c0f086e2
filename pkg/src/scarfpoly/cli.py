"""``scarfpoly`` command line: tables and curve data as CSV or JSON.

CSV output starts with a single ``#`` line of ``key=value`` parameters, then a
column header row, then data. JSON output is one object with ``params``,
``columns`` and ``rows``. Every failure exits with status 2 and prints one
line ``error: <kind>: <reason>`` on stderr.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from fractions import Fraction

import numpy as np

from .fdoracle import FDGrid, compare_spectrum
from .hypergeq import HypergeqParams, classify
from .noncentral import STRATEGIES, angular_function, solve_params, su11_labels
from .polycore import as_fraction
from .quadrature import gram
from .romanovski import RomanovskiParams, romanovski
from .scarf import ScarfParams, spectrum_I, spectrum_II, wavefunction_II

MAX_DEGREE = 32


class CLIError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise CLIError(f"usage: {message}")


def _rational(text: str) -> Fraction:
    try:
        return as_fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from exc


def _cell(v, precision: int):
    """Render one value; exact rationals stay exact, floats get fixed significant digits."""
    if isinstance(v, str):
        return v
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    if isinstance(v, Fraction):
        return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"
    if v is None:
        return "nan"
    f = float(v)
    if math.isnan(f):
        return "nan"
    out = f"{f:.{precision}g}"
    return "0" if out == "-0" else out


def _json_cell(v, precision: int):
    if isinstance(v, (bool, str)):
        return v
    if isinstance(v, (int, np.integer)):
        return int(v)
    if isinstance(v, Fraction):
        return _cell(v, precision) if v.denominator != 1 else v.numerator
    if v is None or (isinstance(v, float) and math.isnan(v)):
        return None
    # round-trip through the fixed-precision text so CSV and JSON agree
    return float(_cell(v, precision))


def emit(params: dict, columns: list[str], rows: list[list], fmt: str, precision: int) -> str:
    if fmt == "json":
        obj = {
            "params": {k: _json_cell(v, precision) for k, v in params.items()},
            "columns": columns,
            "rows": [[_json_cell(v, precision) for v in row] for row in rows],
        }
        return json.dumps(obj, sort_keys=False) + "\n"
    buf = io.StringIO()
    head = " ".join(f"{k}={_cell(v, precision).replace(' ', '_')}" for k, v in params.items())
    buf.write(f"# {head}\n")
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(columns)
    for row in rows:
        w.writerow([_cell(v, precision) for v in row])
    return buf.getvalue()


def cmd_spectrum(args):
    sp = ScarfParams(args.a, args.b, args.alpha)
    params = {"command": "spectrum", "potential": args.potential, "a": sp.a, "b": sp.b, "alpha": sp.alpha}
    if args.potential == "scarf1":
        if args.oracle:
            raise ValueError("the finite-difference oracle is only wired for scarf2")
        params["n_max"] = args.n_max
        rows = [[lv.n, lv.epsilon, lv.e] for lv in spectrum_I(sp, args.n_max)]
        return params, ["n", "epsilon", "e"], rows
    levels = spectrum_II(sp)
    if args.n_max is not None:
        levels = levels[: args.n_max + 1]
    if not args.oracle:
        return params, ["n", "epsilon", "e"], [[lv.n, lv.epsilon, lv.e] for lv in levels]
    params.update(L=args.L, N=args.N)
    rep = compare_spectrum(sp, FDGrid(args.L, args.N), k=len(levels))
    rows = [[lv.n, lv.epsilon, lv.e, float(num), float(dev)]
            for lv, num, dev in zip(levels, rep.numeric, rep.deviations)]
    return params, ["n", "epsilon", "e", "numeric", "deviation"], rows


def _check_degree(n: int, name: str = "n"):
    if n < 0:
        raise ValueError(f"{name} must be nonnegative")
    if n > MAX_DEGREE:
        raise ValueError(f"{name} = {n} exceeds the CLI limit of {MAX_DEGREE}")


def cmd_poly(args):
    _check_degree(args.n)
    rp = RomanovskiParams(args.p, args.q)
    R = romanovski(rp, args.n)
    params = {"command": "poly", "p": rp.p, "q": rp.q, "n": args.n,
              "degree": R.poly.degree, "degree_deficient": R.degree_deficient}
    rows = [[k, c] for k, c in enumerate(R.poly.coeffs)]
    return params, ["power", "coefficient"], rows


def cmd_wavefunction(args):
    sp = ScarfParams(args.a, args.b, args.alpha)
    zmin, zmax, points = args.grid
    points = int(points)
    if points < 2 or not zmax > zmin:
        raise ValueError("grid needs zmin < zmax and at least 2 points")
    wf = wavefunction_II(sp, args.n)
    z = np.linspace(zmin, zmax, points)
    psi = wf(z)
    params = {"command": "wavefunction", "a": sp.a, "b": sp.b, "alpha": sp.alpha, "n": args.n,
              "e": wf.level.e}
    return params, ["z", "psi"], [[float(zi), float(pi)] for zi, pi in zip(z, psi)]


def cmd_gram(args):
    _check_degree(args.max_n, "max-n")
    rp = RomanovskiParams(args.p, args.q)
    g = gram(rp, args.max_n)
    rows = []
    for m in range(args.max_n + 1):
        for k in range(args.max_n + 1):
            conv = bool(g.convergent_mask[m, k])
            rows.append([m, k, float(g.entries[m, k]) if conv else None, conv])
    params = {"command": "gram", "p": rp.p, "q": rp.q, "max_n": args.max_n}
    return params, ["m", "k", "value", "convergent"], rows


def cmd_angular(args):
    if args.spherical:
        # a = b = 0 side of the problem: c = 0, n = l - m
        prob = solve_params("set_1", l=args.l, c=Fraction(0), n=int(args.l - args.m))
        if prob.m != args.m:
            raise ValueError("spherical mode needs integers 0 <= m <= l")
    elif args.strategy == "parmts_2":
        prob = solve_params("parmts_2", l=args.l, m=args.m)
    elif args.strategy == "set_1":
        if args.c is None:
            raise ValueError("set_1 needs --c")
        prob = solve_params("set_1", l=args.l, c=args.c, n=args.n)
    else:
        if args.c is None or args.n is None:
            raise ValueError("set_2 needs --c and --n")
        prob = solve_params("set_2", m=args.m, n=args.n, c=args.c)
    labels = su11_labels(prob)
    af = angular_function(prob)
    points = int(args.grid)
    if points < 2:
        raise ValueError("grid needs at least 2 points")
    margin = args.margin
    theta = np.linspace(margin, math.pi - margin, points)
    absz = af.abs_z(theta)
    params = {"command": "angular", "strategy": "spherical" if args.spherical else prob.strategy,
              "l": prob.l, "m": prob.m, "c": prob.c, "a": prob.a, "b": prob.b, "n": prob.n,
              "j": labels.j, "mprime": labels.mprime}
    return params, ["theta", "absZ"], [[float(t), float(v)] for t, v in zip(theta, absz)]


def cmd_classify(args):
    hp = HypergeqParams(args.a, args.b, args.c, args.d, args.e)
    fam = classify(hp)
    params = {"command": "classify", "a": hp.a, "b": hp.b, "c": hp.c, "d": hp.d, "e": hp.e,
              "family": fam.tag, "alpha": fam.alpha, "beta": fam.beta, "scale": fam.scale}
    if fam.note:
        params["note"] = fam.note
    rows = [[k, v] for k, v in fam.params.items()]
    return params, ["parameter", "value"], rows


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("csv", "json"), default="csv")
    common.add_argument("--precision", type=int, default=12, help="significant digits for floats")
    common.add_argument("--output", "-o", default=None, help="file path (default stdout)")
    p = _Parser(prog="scarfpoly", description="Romanovski polynomials and Scarf II tables.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("spectrum", parents=[common], help="bound-state energies")
    s.add_argument("--potential", choices=("scarf1", "scarf2"), default="scarf2")
    s.add_argument("--a", type=_rational, required=True)
    s.add_argument("--b", type=_rational, default=Fraction(0))
    s.add_argument("--alpha", type=_rational, default=Fraction(1))
    s.add_argument("--n-max", type=int, default=None, help="scarf1: last level (default 3)")
    s.add_argument("--oracle", action="store_true", help="add finite-difference columns (scarf2)")
    s.add_argument("--L", type=float, default=20.0)
    s.add_argument("--N", type=int, default=4000)
    s.set_defaults(func=cmd_spectrum)

    s = sub.add_parser("poly", parents=[common], help="exact coefficients of R_n^(p,q)")
    s.add_argument("--p", type=_rational, required=True)
    s.add_argument("--q", type=_rational, default=Fraction(0))
    s.add_argument("--n", type=int, required=True)
    s.set_defaults(func=cmd_poly)

    s = sub.add_parser("wavefunction", parents=[common], help="normalized Scarf II bound state on a z grid")
    s.add_argument("--a", type=_rational, required=True)
    s.add_argument("--b", type=_rational, default=Fraction(0))
    s.add_argument("--alpha", type=_rational, default=Fraction(1))
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--grid", type=float, nargs=3, metavar=("ZMIN", "ZMAX", "POINTS"), default=(-10.0, 10.0, 201))
    s.set_defaults(func=cmd_wavefunction)

    s = sub.add_parser("gram", parents=[common], help="Gram matrix with convergence mask")
    s.add_argument("--p", type=_rational, required=True)
    s.add_argument("--q", type=_rational, default=Fraction(0))
    s.add_argument("--max-n", type=int, required=True)
    s.set_defaults(func=cmd_gram)

    s = sub.add_parser("angular", parents=[common], help="|Z_l^m(theta)| polar curve")
    s.add_argument("--l", type=_rational, required=True)
    s.add_argument("--m", type=_rational, default=None)
    s.add_argument("--c", type=_rational, default=None)
    s.add_argument("--n", type=int, default=None)
    s.add_argument("--strategy", choices=STRATEGIES, default="parmts_2")
    s.add_argument("--spherical", action="store_true", help="c = 0 limit (Legendre shape)")
    s.add_argument("--grid", type=int, default=181, help="number of theta samples")
    s.add_argument("--margin", type=float, default=0.1, help="distance kept from theta = 0, pi")
    s.set_defaults(func=cmd_angular)

    s = sub.add_parser("classify", parents=[common], help="family of sigma = a x^2 + b x + c, tau = d x + e")
    for name in "abcde":
        s.add_argument(f"--{name}", type=_rational, required=True)
    s.set_defaults(func=cmd_classify)
    return p


def _fail(kind: str, msg) -> int:
    text = " ".join(str(msg).split())
    print(f"error: {kind}: {text}", file=sys.stderr)
    return 2


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command == "spectrum" and args.potential == "scarf1" and args.n_max is None:
            args.n_max = 3
        if args.command == "angular" and args.m is None and args.strategy != "set_1":
            raise CLIError("usage: --m is required for this strategy")
        if args.precision < 1 or args.precision > 17:
            raise CLIError("usage: --precision must lie in 1..17")
        params, columns, rows = args.func(args)
        text = emit(params, columns, rows, args.format, args.precision)
    except CLIError as exc:
        return _fail("usage", str(exc).removeprefix("usage: "))
    except (ValueError, ArithmeticError, TypeError) as exc:
        return _fail(type(exc).__name__, exc)
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
