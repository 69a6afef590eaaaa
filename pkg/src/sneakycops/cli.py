"""Command line front end.

Wherever a graph file is expected, a family shorthand (C5, P4, K6, K5_2,
Q3, T, I4l, ...) is accepted too.  Exit codes: 0 on success / all checks
passing, 1 on a failed check or a negative answer, 2 on usage or I/O
errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import families, verify
from .errors import CapExceededError, GraphError, SolverError
from .graphs import Graph, dumps, dumps_json, loads
from .homotopy import dismantle, homotopy_equivalent
from .products import box_product, categorical_product, strong_product
from .solver import (
    EvadingRobber,
    Variant,
    cop_number,
    simulate_trace,
    solve_win_table,
    winning_placements,
)

USAGE_ERROR = 2


def load_graph(token: str) -> Graph:
    """Family shorthand if it parses as one, otherwise a file path."""
    try:
        g = families.from_shorthand(token)
    except GraphError:
        raise
    if g is not None:
        return g
    path = Path(token)
    if not path.exists():
        raise FileNotFoundError(f"no such file or family shorthand: {token}")
    return loads(path.read_text())


def _write_graph(g: Graph, out: str | None, as_json: bool) -> None:
    text = dumps_json(g) + "\n" if as_json else dumps(g)
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_gen(args) -> int:
    if args.family == "tree":
        if args.n is None:
            print("gen tree needs a vertex count", file=sys.stderr)
            return USAGE_ERROR
        g = families.random_tree(args.n, args.seed)
    else:
        g = families.from_shorthand(args.family)
        if g is None:
            print(f"unknown family shorthand {args.family!r}", file=sys.stderr)
            return USAGE_ERROR
    _write_graph(g, args.output, args.json)
    return 0


def cmd_solve(args) -> int:
    g = load_graph(args.graph)
    variant = Variant.parse(args.variant)
    try:
        out = cop_number(g, variant, cap=args.cap)
    except CapExceededError as exc:
        failures = [
            {"k": p.k, "robberWitness": p.robber_witness, "escapesAll": p.escapes_all}
            for p in exc.per_k
        ]
        print(json.dumps({"copNumber": None, "cap": exc.cap, "perK": failures})
              if args.json else f"no winning placement for any k <= {exc.cap}")
        return 1
    if args.json:
        print(out.to_json())
    else:
        print(out.cop_number)
    return 0


def cmd_dismantle(args) -> int:
    g = load_graph(args.graph)
    core, seq = dismantle(g)
    print(f"core: n={core.n}, edges={list(core.edges())}")
    print(seq.to_json())
    return 0


def cmd_equiv(args) -> int:
    a, b = load_graph(args.a), load_graph(args.b)
    cert = homotopy_equivalent(a, b)
    if cert is None:
        print("not equivalent: stiff cores are not isomorphic")
        return 1
    print(
        f"equivalent: {len(cert.left.steps)} folds on the left, "
        f"{len(cert.right.steps)} on the right, core isomorphism "
        f"{list(cert.core_isomorphism)}"
    )
    return 0


def cmd_product(args) -> int:
    a, b = load_graph(args.a), load_graph(args.b)
    op = {"x": categorical_product, "box": box_product, "strong": strong_product}
    g, _ = op[args.kind](a, b)
    _write_graph(g, args.output, args.json)
    return 0


def cmd_trace(args) -> int:
    g = load_graph(args.graph)
    variant = Variant.parse(args.variant)
    table = solve_win_table(g, args.k, variant)
    placements = winning_placements(g, args.k, variant, table)
    if placements:
        placement = placements[0]
    else:
        placement = tuple(sorted(args.k * [0]))
        print(f"note: {args.k} cops have no winning placement; tracing from "
              f"{placement}", file=sys.stderr)
    trace = simulate_trace(
        g, variant, placement, EvadingRobber(table),
        max_turns=args.max_turns, table=table, robber_start=args.robber_start,
    )
    if args.json:
        print(trace.to_json())
    else:
        for t in trace.turns:
            flag = "  CAPTURE" if t.capture else ""
            print(f"ply {t.ply:3d}  {t.mover:>6}  cops={list(t.cops)} "
                  f"robber={t.robber}{flag}")
        print(f"captured={trace.captured} after {trace.cop_turns} cop turns")
    return 0


def cmd_verify(args) -> int:
    checks = verify.verify_suite(
        args.suite, seed=args.seed,
        bounds_count=args.bounds_count,
        invariance_count=args.invariance_count,
    )
    if args.json:
        print(verify.render_json(args.suite, checks, timings=args.timings))
    else:
        print(verify.render_text(checks, timings=args.timings))
    return 0 if all(c.passed for c in checks) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sneakycops",
        description="Exact pursuit-game solving, folding and graph products.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a family graph")
    p.add_argument("family", help="family shorthand (C5, K5_2, Q3, T, I4l) or 'tree'")
    p.add_argument("n", nargs="?", type=int, default=None, help="vertex count for 'tree'")
    p.add_argument("--seed", type=int, default=0, help="seed for 'tree'")
    p.add_argument("-o", "--output", default=None)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("solve", help="compute a cop number")
    p.add_argument("graph", help="graph file or family shorthand")
    p.add_argument("--variant", choices=["classic", "active", "sneaky"],
                   default="sneaky")
    p.add_argument("--cap", type=int, default=None, help="largest cop count to try")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("dismantle", help="fold a graph down to its stiff core")
    p.add_argument("graph")
    p.set_defaults(func=cmd_dismantle)

    p = sub.add_parser("equiv", help="test fold equivalence of two graphs")
    p.add_argument("a")
    p.add_argument("b")
    p.set_defaults(func=cmd_equiv)

    p = sub.add_parser("product", help="build a graph product")
    p.add_argument("kind", choices=["x", "box", "strong"])
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("-o", "--output", default=None)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_product)

    p = sub.add_parser("trace", help="play out a game with table strategies")
    p.add_argument("graph")
    p.add_argument("--k", type=int, required=True, help="number of cops")
    p.add_argument("--variant", choices=["classic", "active", "sneaky"],
                   default="sneaky")
    p.add_argument("--robber-start", type=int, default=None)
    p.add_argument("--max-turns", type=int, default=200)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_trace)

    p = sub.add_parser("verify", help="run the reproduction checks")
    p.add_argument("--suite", choices=list(verify.SUITES), default="basic")
    p.add_argument("--json", action="store_true")
    p.add_argument("--timings", action="store_true",
                   help="include runtimes in the JSON output")
    p.add_argument("--seed", type=int, default=verify.DEFAULT_SEED)
    p.add_argument("--bounds-count", type=int, default=verify.DEFAULT_BOUNDS_COUNT)
    p.add_argument("--invariance-count", type=int,
                   default=verify.DEFAULT_INVARIANCE_COUNT)
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (GraphError, SolverError, FileNotFoundError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
