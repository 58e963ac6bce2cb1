"""Command-line interface.

Exit codes: 0 success / in the family, 1 not in the family, 2 invalid input,
3 graph not chordal, 4 oracle size cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Optional, Sequence

from .checker import check_membership
from .chordal import NotChordalError, build_tree_order
from .generate import random_chordal
from .graph import GraphError, LabeledGraph, parse_graph, serialize_graph
from .numerics import parse_rational
from .oracle import DEFAULT_CAP, OracleCapError, shearer_check
from .threshold import DEFAULT_TOL, threshold_report

EXIT_OK, EXIT_OUT, EXIT_INVALID, EXIT_NOT_CHORDAL, EXIT_CAP = 0, 1, 2, 3, 4


def _rational(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lefthand",
        description="Decide Shearer-family membership of probability-labeled chordal graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def graph_cmd(name: str, help: str) -> argparse.ArgumentParser:
        sp = sub.add_parser(name, help=help)
        sp.add_argument("input", nargs="?", default="-", help="graph file, '-' for stdin")
        sp.add_argument("--format", choices=("json", "edgelist"), default="json")
        sp.add_argument("--p", type=_rational, help="override every label with this value")
        return sp

    sp = graph_cmd("check", "run the recursive membership test")
    sp.add_argument("--float", action="store_true", help="double-precision fast path")
    graph_cmd("order", "print a lefthanded tree order as a successor map")
    sp = graph_cmd("oracle", "brute-force Shearer sums")
    sp.add_argument("--cap", type=int, default=DEFAULT_CAP)
    sp = graph_cmd("threshold", "uniform-label threshold, numeric and symbolic")
    sp.add_argument("--tol", type=_rational, default=DEFAULT_TOL)
    sp.add_argument("--plot", metavar="PNG", help="also render x_v(p) curves to this file")

    sp = sub.add_parser("gen", help="emit a random labeled chordal graph")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--p", type=_rational, help="uniform label (default: random labels)")
    sp.add_argument("--max-denominator", type=int, default=64)
    sp.add_argument("--format", choices=("json", "edgelist"), default="json")
    return parser


def _emit(doc: dict) -> None:
    sys.stdout.write(json.dumps(doc, indent=2) + "\n")


def _load(args) -> LabeledGraph:
    if args.input == "-":
        text = sys.stdin.read()
    else:
        with open(args.input, encoding="utf-8") as fh:
            text = fh.read()
    g = parse_graph(text, args.format)
    if args.p is not None:
        g = g.with_labels(args.p)
    return g


def run(args: argparse.Namespace) -> int:
    if args.command == "gen":
        if args.n < 0:
            raise GraphError("--n must be nonnegative")
        if args.seed < 0 or args.seed >= 1 << 64:
            raise GraphError("--seed must be an unsigned 64-bit integer")
        g = random_chordal(args.n, args.seed, p=args.p, max_denominator=args.max_denominator)
        sys.stdout.write(serialize_graph(g, args.format))
        return EXIT_OK

    g = _load(args)
    if args.command == "oracle":
        rep = shearer_check(g, cap=args.cap)
        _emit(rep.to_json())
        return EXIT_OK if rep.in_L else EXIT_OUT

    t = build_tree_order(g)
    if args.command == "order":
        _emit(t.to_json())
        return EXIT_OK
    if args.command == "check":
        rep = check_membership(g, t, use_float=args.float)
        _emit(rep.to_json())
        return EXIT_OK if rep.in_L else EXIT_OUT
    if args.command == "threshold":
        if args.tol <= 0:
            raise GraphError("--tol must be positive")
        rep = threshold_report(g, t, args.tol)
        doc = rep.to_json()
        if args.plot:
            from .plotting import plot_threshold

            plot_threshold(g, t, rep, args.plot)
            doc["figure"] = args.plot
        _emit(doc)
        return EXIT_OK
    raise AssertionError(args.command)


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return run(args)
    except NotChordalError as exc:
        _emit({"error": "not chordal", "witness": list(exc.witness.vertices)})
        print(exc, file=sys.stderr)
        return EXIT_NOT_CHORDAL
    except OracleCapError as exc:
        _emit({"error": str(exc)})
        print(exc, file=sys.stderr)
        return EXIT_CAP
    except (GraphError, OSError) as exc:
        print(f"lefthand: {exc}", file=sys.stderr)
        return EXIT_INVALID
