"""Command-line front end.

    hamcube analyze points.txt
    hamcube cube -n 4
    hamcube tree tree.txt
    hamcube sweep --n-max 6 --m-max 10 --count 20 --seed 1

Exit codes: 0 agreement, 1 usage or input error, 2 mathematical disagreement.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import geometry as geo
from .exactla import determinant
from .hamming import (DEFAULT_CUBE_CAP, FormatError, HammingPointSet, NotATreeError,
                      PointSetError, distance_matrix, full_cube, parse_points, parse_tree,
                      tree_to_cube)
from .mconst import NotStrictError, check_bounds, dinv_sum
from .negtype import affinely_independent, check_negative_type
from .oracle import maximize_energy
from .sweep import route_values, summarize

EXIT_OK, EXIT_INPUT, EXIT_DISAGREE = 0, 1, 2


def fmt(q) -> str:
    return str(Fraction(q))


def fmt_vec(v) -> list:
    return [fmt(x) for x in v]


def analyze(X: HammingPointSet, oracle: bool = True) -> dict:
    """Build the JSON-ready report for one point set."""
    D = distance_matrix(X)
    verdict = check_negative_type(D)
    try:
        dinv = fmt(dinv_sum(D))
    except NotStrictError:
        dinv = "singular"
    results = route_values(X)
    values = {r.value for r in results.values() if r is not None}
    reference = results["solveb"]
    sphere = geo.circumsphere(X)
    report = {
        "input": {"n": X.n, "m": X.m},
        "negType": {
            "isNegType": verdict.is_neg_type,
            "isStrict": verdict.is_strict,
            "witness": fmt_vec(verdict.witness) if verdict.witness else None,
        },
        "affineIndependent": affinely_independent(X),
        "detD": fmt(determinant(D.matrix)),
        "dinvSum": dinv,
        "mconst": {k: (fmt(r.value) if r is not None else None) for k, r in results.items()},
        "routesAgree": len(values) == 1,
        "maximalMeasure": fmt_vec(reference.measure.weights),
        "sphere": {"center": fmt_vec(sphere.center), "radiusSquared": fmt(sphere.radius_sq)},
        "oracle": None,
        "boundsOk": check_bounds(X),
    }
    if oracle:
        res = maximize_energy(D)
        report["oracle"] = {"approxM": res.approx_m, "converged": res.converged,
                            "iterations": res.iterations}
    return report


def _report_ok(report: dict) -> bool:
    ok = report["routesAgree"] and report["boundsOk"]
    if report["oracle"] is not None:
        exact = float(Fraction(report["mconst"]["solveb"]))
        ok = ok and report["oracle"]["converged"] and abs(report["oracle"]["approxM"] - exact) <= 1e-6
    return ok


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="hamcube", description="Exact M-constants of Hamming-cube subsets.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--no-oracle", action="store_true", help="skip the float cross-check")
    fmt_group = common.add_mutually_exclusive_group()
    fmt_group.add_argument("--json", dest="pretty", action="store_false", help="compact JSON (default)")
    fmt_group.add_argument("--pretty", dest="pretty", action="store_true", help="indented JSON")
    common.set_defaults(pretty=False)
    common.add_argument("--cap", type=int, default=DEFAULT_CUBE_CAP, help="cube dimension cap")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    a = sub.add_parser("analyze", parents=[common], help="analyze a point-set file")
    a.add_argument("file")
    c = sub.add_parser("cube", parents=[common], help="analyze the full cube H_n")
    c.add_argument("-n", type=int, required=True)
    t = sub.add_parser("tree", parents=[common], help="embed and analyze a tree file")
    t.add_argument("file")
    s = sub.add_parser("sweep", parents=[common], help="randomized invariant sweep")
    s.add_argument("--n-max", type=int, required=True)
    s.add_argument("--m-max", type=int, required=True)
    s.add_argument("--count", type=int, required=True)
    s.add_argument("--seed", type=int, required=True)
    return p


def _emit(report: dict, pretty: bool) -> None:
    if pretty:
        print(json.dumps(report, indent=2))
    else:
        print(json.dumps(report, separators=(",", ":")))


def _read(path: str) -> str:
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def cmd_analyze(args) -> int:
    X = parse_points(_read(args.file))
    report = analyze(X, oracle=not args.no_oracle)
    _emit(report, args.pretty)
    return EXIT_OK if _report_ok(report) else EXIT_DISAGREE


def cmd_cube(args) -> int:
    X = full_cube(args.n, cap=args.cap)
    report = analyze(X, oracle=not args.no_oracle)
    report["mconstExpected"] = fmt(Fraction(args.n, 2))
    ok = all(v == report["mconstExpected"] for v in report["mconst"].values() if v is not None)
    _emit(report, args.pretty)
    return EXIT_OK if ok and _report_ok(report) else EXIT_DISAGREE


def cmd_tree(args) -> int:
    T = parse_tree(_read(args.file))
    X = tree_to_cube(T)
    k = len(T.edges)
    report = analyze(X, oracle=not args.no_oracle)
    det_expected = (-1) ** k * k * 2 ** (k - 1)
    report["detExpected"] = fmt(det_expected)
    report["detOk"] = report["detD"] == report["detExpected"]
    report["dinvSumExpected"] = fmt(Fraction(2, k))
    report["dinvSumOk"] = report["dinvSum"] == report["dinvSumExpected"]
    _emit(report, args.pretty)
    ok = report["detOk"] and report["dinvSumOk"] and _report_ok(report)
    return EXIT_OK if ok else EXIT_DISAGREE


def cmd_sweep(args) -> int:
    if min(args.n_max, args.m_max, args.seed + 1) < 1 or args.count < 0:
        print("sweep parameters must be positive", file=sys.stderr)
        return EXIT_INPUT
    lines, failures = summarize(args.n_max, args.m_max, args.count, args.seed,
                                oracle=not args.no_oracle)
    for line in lines:
        print(line)
    return EXIT_OK if failures == 0 else EXIT_DISAGREE


COMMANDS = {"analyze": cmd_analyze, "cube": cmd_cube, "tree": cmd_tree, "sweep": cmd_sweep}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except (FormatError, PointSetError, NotATreeError, ValueError, OSError) as exc:
        print(f"hamcube: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
