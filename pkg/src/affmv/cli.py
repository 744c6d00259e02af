"""Command-line interface.

Subcommands: complete (derive the other Lusztig datum), check (MV
verdict for a pair), op (apply a word of crystal operators), graph
(DOT export), render (SVG or TikZ drawing), verify (the sweep suites).

Exit codes: 0 success or verification pass, 1 verification failure or an
operator that does not apply, 2 usage or document errors, 3 an internal
invariant breach (the uniqueness promise failing would surface here).
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import crystal, verify
from .documents import (
    DocumentError,
    dumps,
    graph_to_dot,
    parse_datum,
    parse_polytope,
    polytope_to_obj,
)
from .lusztig import PreconditionViolated, UnsupportedKind
from .polytope import is_mv
from .render import render_svg, render_tikz
from .roots import Algebra, RootVector
from .transition import (
    DFS,
    ORACLE,
    SolverInvariantError,
    complete_from_left,
    complete_from_right,
)

__all__ = ["main"]

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_INTERNAL = 3

_KIND_TAGS = tuple(kind.value for kind in Algebra)

_DEFAULT_BOX = {
    Algebra.SL2_HAT: RootVector(6, 6),
    Algebra.A2_TWISTED: RootVector(4, 8),
}
_DEFAULT_DEPTH = {
    Algebra.SL2_HAT: 8,
    Algebra.A2_TWISTED: 6,
}
_SAITO_DEPTH = 6

_TOKENS = {
    "e0": lambda b: crystal.e(0, b),
    "e1": lambda b: crystal.e(1, b),
    "f0": lambda b: crystal.f(0, b),
    "f1": lambda b: crystal.f(1, b),
    "e0*": lambda b: crystal.e_star(0, b),
    "e1*": lambda b: crystal.e_star(1, b),
    "f0*": lambda b: crystal.f_star(0, b),
    "f1*": lambda b: crystal.f_star(1, b),
    "s0": lambda b: crystal.saito(0, b),
    "s1": lambda b: crystal.saito(1, b),
    "s0*": lambda b: crystal.saito_star(0, b),
    "s1*": lambda b: crystal.saito_star(1, b),
    "star": crystal.star,
    "tau": crystal.tau,
}


def _read_json(path: str) -> object:
    try:
        if path == "-":
            text = sys.stdin.read()
        else:
            with open(path, "r", encoding="utf-8") as handle:
                text = handle.read()
    except OSError as err:
        raise DocumentError(f"cannot read {path}: {err}") from err
    try:
        return json.loads(text)
    except json.JSONDecodeError as err:
        raise DocumentError(f"invalid JSON in {path}: {err}") from err


def _kind_from_tag(tag: str) -> Algebra:
    for kind in Algebra:
        if kind.value == tag:
            return kind
    raise DocumentError(f"unknown algebra {tag!r}")


def _cmd_complete(args: argparse.Namespace) -> int:
    d = parse_datum(_read_json(args.input))
    if args.side == "left":
        P = complete_from_left(d, solver=args.solver)
    else:
        P = complete_from_right(d, solver=args.solver)
    sys.stdout.write(dumps(polytope_to_obj(P, with_vertices=True)))
    return EXIT_OK


def _cmd_check(args: argparse.Namespace) -> int:
    P = parse_polytope(_read_json(args.input))
    verdict = is_mv(P)
    sys.stdout.write(dumps(polytope_to_obj(P, verdict=verdict)))
    return EXIT_OK if verdict.ok else EXIT_FAIL


def _cmd_op(args: argparse.Namespace) -> int:
    if args.start is not None:
        d = parse_datum(_read_json(args.start))
        if args.kind is not None and d.kind.value != args.kind:
            raise DocumentError("--kind disagrees with the start datum")
        if args.side == "left":
            b = crystal.CrystalElement(complete_from_left(d))
        else:
            b = crystal.CrystalElement(complete_from_right(d))
    else:
        if args.kind is None:
            raise DocumentError("either --start or --kind is required")
        b = crystal.lowest(_kind_from_tag(args.kind))
    tokens = args.word.split()
    for pos, token in enumerate(tokens):
        op = _TOKENS.get(token)
        if op is None:
            raise DocumentError(
                f"unknown operator {token!r} at position {pos}; "
                f"expected one of {sorted(_TOKENS)}"
            )
        try:
            result = op(b)
        except (PreconditionViolated, UnsupportedKind) as err:
            sys.stderr.write(f"operator {token!r} at position {pos} failed: {err}\n")
            return EXIT_FAIL
        if result is None:
            sys.stderr.write(
                f"operator {token!r} at position {pos} is absent here\n"
            )
            return EXIT_FAIL
        b = result
    sys.stdout.write(dumps(polytope_to_obj(b.polytope, with_vertices=True)))
    return EXIT_OK


def _cmd_graph(args: argparse.Namespace) -> int:
    g = crystal.crystal_graph(_kind_from_tag(args.kind), args.depth)
    sys.stdout.write(graph_to_dot(g))
    return EXIT_OK


def _cmd_render(args: argparse.Namespace) -> int:
    obj = _read_json(args.input)
    if isinstance(obj, dict) and "left" in obj:
        P = parse_polytope(obj)
    else:
        d = parse_datum(obj)
        P = complete_from_left(d) if args.side == "left" else complete_from_right(d)
    sys.stdout.write(render_svg(P) if args.format == "svg" else render_tikz(P))
    return EXIT_OK


def _cmd_verify(args: argparse.Namespace) -> int:
    kind = _kind_from_tag(args.kind)
    box = (
        RootVector(args.box[0], args.box[1])
        if args.box is not None
        else _DEFAULT_BOX[kind]
    )
    depth = args.depth if args.depth is not None else _DEFAULT_DEPTH[kind]
    saito_depth = args.depth if args.depth is not None else _SAITO_DEPTH
    reports: list[verify.Report] = []
    suite = args.suite
    if suite in ("uniqueness", "all"):
        reports.append(verify.check_uniqueness(kind, box))
    graph = None
    if suite in ("axioms", "star", "crystal", "all"):
        graph = crystal.crystal_graph(kind, depth)
    if suite in ("axioms", "all"):
        reports.append(verify.check_axioms(kind, depth, graph=graph))
    if suite in ("star", "all"):
        reports.append(verify.check_star_negation(kind, depth, graph=graph))
    if suite in ("saito", "all"):
        reports.append(
            verify.check_saito_formulas(kind, saito_depth, slack=args.slack)
        )
    if suite in ("crystal", "all"):
        reports.append(verify.check_crystal_axioms(kind, depth, graph=graph))
    if args.json:
        payload = [
            {
                "name": r.name,
                "kind": r.kind.value,
                "scope": r.scope,
                "passed": r.passed,
                "counts": {key: value for key, value in r.counts},
                "notes": list(r.notes),
                "failures": list(r.failures),
            }
            for r in reports
        ]
        sys.stdout.write(dumps(payload))
    else:
        for r in reports:
            sys.stdout.write(str(r) + "\n")
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="affmv",
        description="Exact MV polytope computations for the rank-2 affine algebras.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("complete", help="derive the matching datum for one side")
    p.add_argument("input", nargs="?", default="-", help="datum document ('-' = stdin)")
    p.add_argument("--side", choices=("left", "right"), required=True,
                   help="which side the input datum occupies")
    p.add_argument("--solver", choices=(DFS, ORACLE), default=DFS)
    p.set_defaults(run=_cmd_complete)

    p = sub.add_parser("check", help="MV verdict for a pair of data")
    p.add_argument("input", nargs="?", default="-", help="polytope document")
    p.set_defaults(run=_cmd_check)

    p = sub.add_parser("op", help="apply a word of crystal operators")
    p.add_argument("word", help="whitespace-separated operator tokens, e.g. 'e0 e1 s0*'")
    p.add_argument("--kind", choices=_KIND_TAGS, help="start from the lowest element")
    p.add_argument("--start", help="datum document to start from instead")
    p.add_argument("--side", choices=("left", "right"), default="right",
                   help="which side --start describes")
    p.set_defaults(run=_cmd_op)

    p = sub.add_parser("graph", help="crystal graph below a raising depth")
    p.add_argument("--kind", choices=_KIND_TAGS, required=True)
    p.add_argument("--depth", type=int, required=True)
    p.add_argument("--format", choices=("dot",), default="dot")
    p.set_defaults(run=_cmd_graph)

    p = sub.add_parser("render", help="draw a polytope")
    p.add_argument("input", nargs="?", default="-",
                   help="datum or polytope document")
    p.add_argument("--side", choices=("left", "right"), default="right",
                   help="side of a bare datum input")
    p.add_argument("--format", choices=("svg", "tikz"), default="svg")
    p.set_defaults(run=_cmd_render)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument(
        "suite",
        choices=("uniqueness", "axioms", "star", "saito", "crystal", "all"),
    )
    p.add_argument("--kind", choices=_KIND_TAGS, required=True)
    p.add_argument("--box", type=int, nargs=2, metavar=("A", "B"),
                   help="weight box for the uniqueness sweep")
    p.add_argument("--depth", type=int, help="graph depth for the node sweeps")
    p.add_argument("--slack", type=int, default=2,
                   help="extra exponents for the reflection formulas")
    p.add_argument("--json", action="store_true", help="machine-readable reports")
    p.set_defaults(run=_cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = _parser().parse_args(argv)
    try:
        return args.run(args)
    except DocumentError as err:
        sys.stderr.write(f"error: {err}\n")
        return EXIT_USAGE
    except SolverInvariantError as err:
        sys.stderr.write(f"internal invariant breach: {err}\n")
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
