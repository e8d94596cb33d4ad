"""Command-line interface.

Exit codes: 0 success, 1 verification or agreement failure, 2 input-domain
error, 3 search budget exhausted.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Optional, Sequence

from .census import run_census
from .classifier import classify, witness_edge
from .coloring import verify_odd
from .errors import BudgetExhausted, GraphInputError, PreconditionError
from .family import gen_F, gen_S, shannon_triangle
from .formats import emit_dot, format_coloring, parse_colors, parse_graph6, parse_mel, serialize_mel
from .multigraph import MultiGraph
from .oracle import ABSENT, FOUND, SearchConfig, chi

OK, FAILED, DOMAIN, BUDGET = 0, 1, 2, 3


def read_graph(path: str, fmt: str = "auto") -> MultiGraph:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise GraphInputError(f"cannot read {path}: {exc.strerror}") from None
    if fmt == "auto":
        fmt = "graph6" if path.endswith((".g6", ".graph6")) else "mel"
    return parse_graph6(text) if fmt == "graph6" else parse_mel(text)


def _cmd_classify(args) -> int:
    rep = classify(read_graph(args.file, args.format))
    print(f"chi={rep.chi} case={rep.case_tag}")
    return OK


def _cmd_color(args) -> int:
    g = read_graph(args.file, args.format)
    col = classify(g).coloring
    if not verify_odd(col):
        print("internal error: coloring failed verification", file=sys.stderr)
        return FAILED
    sys.stdout.write(format_coloring(g, col.colors))
    if args.dot:
        Path(args.dot).write_text(emit_dot(g, col), encoding="utf-8")
    return OK


def _cmd_verify(args) -> int:
    g = read_graph(args.file, args.format)
    col = parse_colors(Path(args.colors).read_text(encoding="utf-8"), g)
    check = verify_odd(col)
    if check:
        print(f"ok colors={col.k}")
        return OK
    for v, c, k in check.violations:
        print(f"vertex {v}: color {c} appears {k} times")
    return FAILED


def _cmd_oracle(args) -> int:
    g = read_graph(args.file, args.format)
    res = chi(g, SearchConfig(max_k=args.max_k, node_budget=args.budget))
    if res.status == FOUND:
        print(f"chi={res.chi}")
        return OK
    if res.status == ABSENT:
        print(f"chi>{args.max_k}")
        return OK
    print("inconclusive")
    return BUDGET


def _cmd_witness(args) -> int:
    g = read_graph(args.file, args.format)
    e, col = witness_edge(g)
    print(f"edge={e}")
    ids = [i for i in range(g.m) if i != e]
    sys.stdout.write(format_coloring(col.graph, col.colors, ids))
    return OK


def _cmd_gen(args) -> int:
    if args.kind == "shannon":
        g = shannon_triangle(args.a, args.b, args.c)
    elif args.kind == "f":
        g = gen_F(args.seed, args.budget)
    else:
        g = gen_S(args.seed, args.n)
    sys.stdout.write(serialize_mel(g))
    return OK


def _cmd_census(args) -> int:
    res = run_census(args.max_m, args.max_n, SearchConfig(node_budget=args.budget))
    print("n m chi count")
    for (n, m, k), c in sorted(res.counts.items()):
        print(f"{n} {m} {k} {c}")
    print(f"graphs={res.total} disagreements={len(res.disagreements)} inconclusive={len(res.inconclusive)} "
          f"witnesses={res.witnesses_checked} witness_failures={len(res.witness_failures)}")
    for g, ours, exact in res.disagreements:
        print(f"DISAGREE classifier={ours} oracle={exact} {g!r}")
    if res.disagreements or res.witness_failures:
        return FAILED
    if res.inconclusive:
        return BUDGET
    return OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="oddchrome", description="Odd edge-colorings of subdivided odd graphs.")
    sub = p.add_subparsers(dest="command", required=True)

    def with_file(name: str, help_text: str) -> argparse.ArgumentParser:
        q = sub.add_parser(name, help=help_text)
        q.add_argument("file")
        q.add_argument("--format", choices=["auto", "mel", "graph6"], default="auto")
        return q

    with_file("classify", "print the odd chromatic index and the deciding case").set_defaults(run=_cmd_classify)
    q = with_file("color", "print a verified optimal odd coloring")
    q.add_argument("--dot", help="also write a DOT rendering to this path")
    q.set_defaults(run=_cmd_color)
    q = with_file("verify", "check that a coloring file is an odd coloring")
    q.add_argument("--colors", required=True)
    q.set_defaults(run=_cmd_verify)
    q = with_file("oracle", "exact odd chromatic index by exhaustive search")
    q.add_argument("--max-k", type=int, default=6)
    q.add_argument("--budget", type=int, default=10**8)
    q.set_defaults(run=_cmd_oracle)
    with_file("witness", "an edge whose removal leaves a 3-colorable graph").set_defaults(run=_cmd_witness)

    q = sub.add_parser("gen", help="generate a graph as MEL")
    kinds = q.add_subparsers(dest="kind", required=True)
    s = kinds.add_parser("shannon")
    for name in ("a", "b", "c"):
        s.add_argument(name, type=int)
    f = kinds.add_parser("f")
    f.add_argument("--seed", type=int, required=True)
    f.add_argument("--budget", type=int, required=True)
    r = kinds.add_parser("s")
    r.add_argument("--seed", type=int, required=True)
    r.add_argument("--n", type=int, required=True)
    q.set_defaults(run=_cmd_gen)

    q = sub.add_parser("census", help="classifier versus oracle on all small class members")
    q.add_argument("--max-m", type=int, required=True)
    q.add_argument("--max-n", type=int, default=None)
    q.add_argument("--budget", type=int, default=10**8)
    q.set_defaults(run=_cmd_census)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.run(args)
    except (GraphInputError, PreconditionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return DOMAIN
    except BudgetExhausted as exc:
        print(f"budget exhausted: {exc}", file=sys.stderr)
        return BUDGET


if __name__ == "__main__":
    sys.exit(main())
