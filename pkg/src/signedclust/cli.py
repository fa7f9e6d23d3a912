"""Command-line front end.

Exit codes: 0 structured (or success), 1 overlapping weakly negative
circles, 2 input error, 3 oracle cap exceeded.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from .cluster import canonical_clustering
from .core import NEG, SignedGraph, disagreements
from .detect import check_structure
from .edgelist import ParseError, format_edge_list, read_edge_list
from .gen import GenConfig, InfeasibleBudget, generate, max_edges
from .oracle import CapExceeded, TooLargeForOracle, proposition_check, stats

EXIT_OK = 0
EXIT_OVERLAP = 1
EXIT_INPUT = 2
EXIT_CAP = 3

PALETTE = (
    "#8dd3c7", "#ffffb3", "#bebada", "#fb8072", "#80b1d3", "#fdb462",
    "#b3de69", "#fccde5", "#d9d9d9", "#bc80bd", "#ccebc5", "#ffed6f",
)


class InputError(Exception):
    pass


def _load(path: str) -> SignedGraph:
    try:
        return read_edge_list(path)
    except ParseError as exc:
        raise InputError(f"{path}: {exc}") from None
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None


def _ids(ids) -> str:
    return "[" + ", ".join(str(i) for i in ids) + "]"


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w") as fh:
            fh.write(text)


def cmd_check(args) -> int:
    g = _load(args.path)
    report = check_structure(g)
    if report.verdict:
        p = report.canonical_clustering
        print("STRUCTURED")
        print(f"clusters = {p.k}")
        print(f"Q = {len(report.intra_component_negative_edge_ids)}")
        print(f"negative edges inside clusters = {_ids(report.intra_component_negative_edge_ids)}")
        return EXIT_OK
    w = report.witness
    print("OVERLAP")
    print(f"failed step = {report.failed_step}")
    print(f"circle a = {_ids(w.circle_a.edge_ids)}")
    print(f"circle b = {_ids(w.circle_b.edge_ids)}")
    print(f"shared edges = {_ids(sorted(w.shared_edge_ids))}")
    return EXIT_OVERLAP


def cmd_cluster(args) -> int:
    g = _load(args.path)
    p = canonical_clustering(g)
    for members in p.clusters():
        print("{" + ",".join(map(str, members)) + "}")
    count, bad = disagreements(g, p)
    print(f"disagreements = {count} {_ids(bad)}")
    if not check_structure(g).verdict:
        print("WARNING: not structured; count is an upper bound on Q")
    return EXIT_OK


def cmd_stats(args) -> int:
    g = _load(args.path)
    try:
        s = stats(g, max_q_vertices=args.max_q_vertices)
        prop = proposition_check(g, max_q_vertices=args.max_q_vertices)
    except (TooLargeForOracle, CapExceeded) as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_CAP
    print(f"t = {s.t}")
    print(f"w = {s.w}")
    print(f"Q = {s.q}")
    for name, value in prop._asdict().items():
        print(f"{name} = {str(value).lower()}")
    return EXIT_OK


def cmd_gen(args) -> int:
    m = args.m
    if m is None:
        cap = max_edges(args.n, args.allow_parallel)
        m = args.n + args.n // 2 if cap is None else min(args.n + args.n // 2, cap)
    try:
        cfg = GenConfig(
            seed=args.seed,
            n=args.n,
            m=m,
            negative_fraction=args.negative_fraction,
            allow_parallel=args.allow_parallel,
            mode=args.mode,
        )
        g = generate(cfg)
    except (InfeasibleBudget, ValueError) as exc:
        raise InputError(str(exc)) from None
    echo = (
        f"# gen mode={cfg.mode} seed={cfg.seed} n={cfg.n} m={cfg.m} "
        f"negative_fraction={cfg.negative_fraction} allow_parallel={str(cfg.allow_parallel).lower()}"
    )
    _emit(format_edge_list(g), args.out)
    print(echo, file=sys.stdout if args.out else sys.stderr)
    return EXIT_OK


def to_dot(g: SignedGraph) -> str:
    p = canonical_clustering(g)
    lines = ["graph signed {", "  node [style=filled];"]
    for v in range(g.n):
        c = p.cluster_of[v]
        lines.append(f'  {v} [cluster={c}, fillcolor="{PALETTE[c % len(PALETTE)]}"];')
    for i, e in enumerate(g.edges):
        if e.sign is NEG:
            lines.append(f'  {e.u} -- {e.v} [id={i}, style=dashed, label="-"];')
        else:
            lines.append(f"  {e.u} -- {e.v} [id={i}, style=solid];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def cmd_dot(args) -> int:
    g = _load(args.path)
    _emit(to_dot(g), args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="signedclust",
        description="Recognize signed graphs with edge-disjoint weakly negative circles.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="test the structure and print a clustering or a witness")
    p.add_argument("path")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("cluster", help="print the positive-component clustering and its disagreements")
    p.add_argument("path")
    p.set_defaults(func=cmd_cluster)

    p = sub.add_parser("stats", help="brute-force t, w and Q")
    p.add_argument("path")
    p.add_argument("--max-q-vertices", type=int, default=10)
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("gen", help="write a seeded random graph")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, default=None, help="edge count (default n + n//2, capped)")
    p.add_argument("--negative-fraction", default="1/3", help="fraction such as 0.25 or 1/3")
    p.add_argument("--allow-parallel", action="store_true")
    p.add_argument("--mode", choices=("uniform", "structured"), default="uniform")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("dot", help="export Graphviz DOT colored by cluster")
    p.add_argument("path")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_dot)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
