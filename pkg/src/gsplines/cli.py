"""Command-line front end.

Exit codes: 0 success/valid, 1 invalid or no solution, 2 usage or domain
error, 3 internal invariant violation.
"""

from __future__ import annotations

import argparse
import logging
import sys

from . import cycle, families, oracle
from .arith import Congruence, crt_system
from .errors import BudgetExceeded, ConsistencyError, DomainError
from .graph import cycle_labels, make_complete, make_wheel
from .jsonio import dumps, graph_from_doc, graph_to_doc, load_path, parse_int, spline_from_doc
from .spline import verify

log = logging.getLogger("gsplines")

EXIT_OK, EXIT_NO, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2, 3


def _int_csv(text: str) -> list[int]:
    try:
        return [parse_int(t) for t in text.split(",") if t.strip()]
    except DomainError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _pairs(text: str) -> list[tuple[int, int]]:
    pairs = []
    for chunk in text.split(";"):
        if not chunk.strip():
            continue
        parts = chunk.split(",")
        if len(parts) != 2:
            raise argparse.ArgumentTypeError(f"expected 'residue,modulus', got {chunk!r}")
        try:
            pairs.append((parse_int(parts[0]), parse_int(parts[1])))
        except DomainError as exc:
            raise argparse.ArgumentTypeError(str(exc)) from None
    if not pairs:
        raise argparse.ArgumentTypeError("at least one residue,modulus pair is required")
    return pairs


def _load_graph(path):
    return graph_from_doc(load_path(path))


def _load_spline(path):
    return spline_from_doc(load_path(path))


def _violation(verdict) -> dict:
    e = verdict.violation
    return {"valid": False, "edge": e.edge, "u": e.u, "v": e.v, "label": e.label}


def cmd_basis(args):
    labels = cycle_labels(_load_graph(args.graph))
    basis = cycle.flowup_basis(labels)
    return EXIT_OK, {"labels": list(labels), "basis": basis.rows}


def cmd_verify(args):
    verdict = verify(_load_graph(args.graph), _load_spline(args.spline))
    if verdict:
        return EXIT_OK, {"valid": True}
    return EXIT_NO, _violation(verdict)


def cmd_decompose(args):
    graph = _load_graph(args.graph)
    labels = cycle_labels(graph)
    s = _load_spline(args.spline)
    verdict = verify(graph, s)
    if not verdict:
        return EXIT_NO, _violation(verdict)
    return EXIT_OK, {"coefficients": list(cycle.decompose(labels, s).coefficients)}


def cmd_solve_star(args):
    sol = families.star_center(args.labels, args.leaves)
    if sol is None:
        return EXIT_NO, {"solvable": False}
    return EXIT_OK, {"solvable": True, "center": sol.value, "modulus": sol.modulus}


def cmd_extend(args):
    graph = _load_graph(args.graph)
    s = _load_spline(args.spline)
    if args.wheel:
        if args.spokes is None:
            raise DomainError("--wheel needs --spokes")
        rim = cycle_labels(graph)
        sol = families.wheel_extend(rim, args.spokes, s)
        if sol is None:
            return EXIT_NO, {"solvable": False}
        return EXIT_OK, {
            "solvable": True,
            "hub": sol.value,
            "modulus": sol.modulus,
            "values": list(s) + [sol.value],
            "graph": graph_to_doc(make_wheel(rim, args.spokes)),
        }
    if args.star is None:
        raise DomainError("--complete needs --star")
    if graph.family == "cycle" and graph.vertex_count == 3:
        graph = make_complete(graph.labels)
    out = families.complete_extend(graph, s, args.star)
    if out is None:
        return EXIT_NO, {"solvable": False}
    bigger, extended = out
    return EXIT_OK, {"solvable": True, "values": list(extended), "graph": graph_to_doc(bigger)}


def cmd_enumerate(args):
    graph = _load_graph(args.graph)
    bound = args.bound if args.bound is not None else oracle._lcm(graph.labels)
    report = oracle.enumerate_splines(graph, bound, budget=args.budget)
    return EXIT_OK, {
        "bound": report.bound,
        "count": report.count,
        "splines": [list(s) for s in report.splines],
    }


def cmd_crt(args):
    sol = crt_system(Congruence(r, m) for r, m in args.pairs)
    if sol is None:
        return EXIT_NO, {"solvable": False}
    return EXIT_OK, {"solvable": True, "value": sol.value, "modulus": sol.modulus}


def _global_flags(default):
    """Global flags, accepted before or after the subcommand."""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["json"], default=default("json"))
    common.add_argument("--seed", type=int, default=default(0),
                        help="seed for randomized tooling (commands here are deterministic)")
    common.add_argument("--budget", type=int, default=default(oracle.DEFAULT_BUDGET),
                        help="max candidates examined by exhaustive searches")
    common.add_argument("-v", "--verbose", action="store_true", default=default(False))
    return common


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gsplines", description="Generalized integer splines on edge-labeled graphs.",
        parents=[_global_flags(lambda value: value)],
    )
    # subcommand copies must not clobber values given before the subcommand
    common = _global_flags(lambda value: argparse.SUPPRESS)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("basis", parents=[common], help="smallest flow-up basis of a cycle")
    p.add_argument("graph")
    p.set_defaults(func=cmd_basis)

    p = sub.add_parser("verify", parents=[common], help="check a spline on any graph")
    p.add_argument("graph")
    p.add_argument("spline")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("decompose", parents=[common], help="coefficients in the flow-up basis")
    p.add_argument("graph")
    p.add_argument("spline")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("solve-star", parents=[common], help="label the center of a star")
    p.add_argument("--labels", type=_int_csv, required=True)
    p.add_argument("--leaves", type=_int_csv, required=True)
    p.set_defaults(func=cmd_solve_star)

    p = sub.add_parser("extend", parents=[common], help="add a wheel hub or a complete-graph vertex")
    kind = p.add_mutually_exclusive_group(required=True)
    kind.add_argument("--wheel", action="store_true")
    kind.add_argument("--complete", action="store_true")
    p.add_argument("graph")
    p.add_argument("spline")
    p.add_argument("--spokes", type=_int_csv)
    p.add_argument("--star", type=_int_csv)
    p.set_defaults(func=cmd_extend)

    p = sub.add_parser("enumerate", parents=[common], help="all splines with entries in [0, bound)")
    p.add_argument("graph")
    p.add_argument("--bound", type=int, help="default: lcm of the edge labels")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("crt", parents=[common], help="solve x = r (mod m) for each pair")
    p.add_argument("--pairs", type=_pairs, required=True, help='"r,m;r,m;..."')
    p.set_defaults(func=cmd_crt)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(name)s: %(message)s", stream=sys.stderr)
    try:
        code, payload = args.func(args)
    except (DomainError, BudgetExceeded) as exc:
        print(f"gsplines: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ConsistencyError as exc:
        print(f"gsplines: internal consistency failure: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    log.debug("%s -> exit %d", args.command, code)
    print(dumps(payload))
    return code


if __name__ == "__main__":
    sys.exit(main())
