"""Command-line front end.

Exit codes: 0 ok / yes, 1 no, 2 parse error, 3 non-planar or split input,
4 undecided or over budget, 5 certificate failed verification, 64 usage.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from leadsto import __version__
from leadsto.corpus import random_diagram
from leadsto.decide import (
    NO,
    UNDECIDED,
    YES,
    decide,
    default_budget,
    oracle_decide,
    oracle_report,
    verify_decision,
)
from leadsto.diagram import DiagramError, parse_code, projection, serialize_pd
from leadsto.invariants import BudgetExceeded, Target
from leadsto.planegraph import to_dot
from leadsto.tait import (
    block_summary,
    is_strong,
    is_torus_minimal_projection,
    strength_witness,
    strong_decomposition,
    tait_graphs,
)

EXIT_OK, EXIT_NO, EXIT_PARSE, EXIT_INVALID, EXIT_UNDECIDED, EXIT_VERIFY, EXIT_USAGE = 0, 1, 2, 3, 4, 5, 64
ANSWER_EXIT = {YES: EXIT_OK, NO: EXIT_NO, UNDECIDED: EXIT_UNDECIDED}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2)


def _read_input(args):
    if args.random_crossings is not None:
        return random_diagram(args.random_crossings, random.Random(args.seed))
    if args.code is not None:
        text = args.code
    elif args.input in (None, "-"):
        text = sys.stdin.read()
    else:
        with open(args.input, encoding="utf-8") as fh:
            text = fh.read()
    return parse_code(text)


def _graph_json(g) -> dict:
    return {"vertices": g.n_vertices, "edges": [list(e) for e in g.edges],
            "rotation": [list(r) for r in g.rotation]}


def _target(args) -> Target:
    if args.family is None or args.m is None:
        raise _UsageError("--family and --m are required")
    try:
        t = Target(args.family, args.m)
    except ValueError as exc:
        raise _UsageError(str(exc)) from None
    if args.family == "torus" and args.m < 3:
        raise _UsageError("torus targets need m >= 3")
    return t


class _UsageError(Exception):
    pass


# ---------------------------------------------------------------- commands


def cmd_validate(args, d) -> int:
    report = {"valid": True, "crossings": d.n, "components": d.n_components,
              "free_loops": d.free_loops, "pd": serialize_pd(d)}
    if args.format == "json":
        print(_dump(report))
    else:
        print(f"valid: n={d.n} components={d.n_components}")
    return EXIT_OK


def cmd_tait(args, d) -> int:
    if d.n == 0:
        raise _UsageError("tait needs a diagram with crossings")
    p = projection(d)
    pair = tait_graphs(p)
    strong = is_strong(p)
    if args.format == "dot":
        print(to_dot(pair.gray, "gray"), end="")
        print(to_dot(pair.white, "white"), end="")
        return EXIT_OK
    w = None if strong else strength_witness(p)
    report = {
        "crossings": d.n,
        "gray": _graph_json(pair.gray),
        "white": _graph_json(pair.white),
        "strong": strong,
        "strength_witness": None if w is None else w.to_json(),
        "blocks": {"gray": block_summary(pair.gray), "white": block_summary(pair.white)},
        "torus_minimal": is_torus_minimal_projection(p),
    }
    if args.format == "json":
        print(_dump(report))
    else:
        print(f"gray: {pair.gray.n_vertices} vertices, {pair.gray.n_edges} edges")
        print(f"white: {pair.white.n_vertices} vertices, {pair.white.n_edges} edges")
        print(f"strong: {str(strong).lower()}")
        if w is not None:
            print(f"witness arcs: {w.arcs[0]} {w.arcs[1]}")
    return EXIT_OK


def cmd_decompose(args, d) -> int:
    if d.n == 0:
        raise _UsageError("decompose needs a diagram with crossings")
    parts = strong_decomposition(d)
    if args.format == "json":
        print(_dump({"parts": [{"crossings": x.n, "pd": serialize_pd(x)} for x in parts]}))
    else:
        for x in parts:
            print(serialize_pd(x))
    return EXIT_OK


def _emit_decision(args, dec) -> int:
    if args.verify and not verify_decision(dec):
        print("certificate failed verification", file=sys.stderr)
        return EXIT_VERIFY
    if args.format == "text":
        print(dec.answer)
    else:
        print(_dump(dec.to_json()))
    return ANSWER_EXIT[dec.answer]


def cmd_decide(args, d) -> int:
    return _emit_decision(args, decide(d, _target(args), args.budget))


def cmd_oracle(args, d) -> int:
    if args.target_pd is not None:
        target = parse_code(args.target_pd)
        part = oracle_decide(d, target, args.budget)
        doc = {"answer": part.answer, "target_pd": serialize_pd(target),
               "certificate": None if part.certificate is None else part.certificate.to_json()}
        print(_dump(doc) if args.format != "text" else part.answer)
        return ANSWER_EXIT[part.answer]
    if args.family is not None:
        from leadsto.decide import combine_parts
        t = _target(args)
        part = oracle_decide(d, t, args.budget)
        return _emit_decision(args, combine_parts([part], t))
    try:
        entries = oracle_report(d, args.budget)
    except BudgetExceeded as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_UNDECIDED
    rows = sorted(({"signature": e.signature.to_json(), "count": e.count, "split": e.split,
                    "representative": [s.name.lower() for s in e.representative]}
                   for e in entries), key=lambda r: json.dumps(r, sort_keys=True))
    if args.format == "text":
        for r in rows:
            print(f"{r['count']:6d}  c={r['signature']['components']} split={r['split']}")
    else:
        print(_dump({"assignments": 4 ** d.n, "reached": rows}))
    return EXIT_OK


def cmd_render(args, d) -> int:
    if args.format == "text" or d.n == 0:
        print(serialize_pd(d))
        return EXIT_OK
    if args.family is not None:
        dec = decide(d, _target(args), args.budget)
        cert = dec.certificate
        if dec.answer == YES and getattr(cert, "kind", "") == "minor-witness":
            part = dec.parts[dec.responsible].diagram
            pair = tait_graphs(part)
            g = pair.gray if cert.graph == "gray" else pair.white
            print(to_dot(g, cert.graph, cert.witness), end="")
            return EXIT_OK
    print(to_dot(projection(d).graph, "projection"), end="")
    return EXIT_OK


COMMANDS = {
    "validate": cmd_validate,
    "tait": cmd_tait,
    "decompose": cmd_decompose,
    "decide": cmd_decide,
    "oracle": cmd_oracle,
    "render": cmd_render,
}


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="leadsto", description="Decide D ~> T(2,m) / Twist(m) for link diagrams.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name in COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("input", nargs="?", help="PD or Gauss file ('-' or omitted: stdin)")
        p.add_argument("--code", help="inline PD or Gauss code")
        p.add_argument("--random-crossings", type=int, metavar="N")
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--family", choices=("torus", "twist"))
        p.add_argument("--m", type=int)
        p.add_argument("--budget", type=int, default=None)
        p.add_argument("--format", choices=("json", "dot", "text"), default="json")
        p.add_argument("--verify", action="store_true")
        if name == "oracle":
            p.add_argument("--target-pd")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.budget is None:
        args.budget = default_budget()
    if args.budget < 0:
        parser.error("--budget must be >= 0")
    try:
        d = _read_input(args)
    except DiagramError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        return COMMANDS[args.command](args, d)
    except _UsageError as exc:
        print(f"leadsto: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DiagramError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code


if __name__ == "__main__":
    sys.exit(main())
