"""Plain-text edge list format.

::

    # comments start with '#'
    n m
    u v s        (m lines, s is '+' or '-')

Edge ids follow line order; repeated lines are parallel edges.
"""

from __future__ import annotations

from pathlib import Path

from .core import Edge, GraphError, LoopEdge, Sign, SignedGraph, VertexOutOfRange


class ParseError(ValueError):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


def parse_edge_list(text: str) -> SignedGraph:
    header = None
    n = m = 0
    edges: list[Edge] = []
    last = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        last = lineno
        fields = line.split()
        if header is None:
            if len(fields) != 2:
                raise ParseError(lineno, "expected header 'n m'")
            try:
                n, m = int(fields[0]), int(fields[1])
            except ValueError:
                raise ParseError(lineno, "header values must be integers") from None
            if n < 0 or m < 0:
                raise ParseError(lineno, "header values must be nonnegative")
            header = lineno
            continue
        if len(edges) == m:
            raise ParseError(lineno, f"more than the declared {m} edge lines")
        try:
            u, v = int(fields[0]), int(fields[1])
        except (ValueError, IndexError):
            raise ParseError(lineno, "expected 'u v s'") from None
        for x in (u, v):
            if not 0 <= x < n:
                raise ParseError(lineno, str(VertexOutOfRange(x, n)))
        if u == v:
            raise ParseError(lineno, str(LoopEdge(u)))
        if len(fields) != 3:
            raise ParseError(lineno, "expected 'u v s'")
        try:
            sign = Sign.parse(fields[2])
        except ValueError as exc:
            raise ParseError(lineno, str(exc)) from None
        edges.append(Edge(u, v, sign))
    if header is None:
        raise ParseError(last + 1, "missing header 'n m'")
    if len(edges) != m:
        raise ParseError(last + 1, f"expected {m} edge lines, found {len(edges)}")
    try:
        return SignedGraph(n, tuple(edges))
    except GraphError as exc:  # pragma: no cover - per-line checks above catch these
        raise ParseError(last, str(exc)) from None


def format_edge_list(g: SignedGraph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{e.u} {e.v} {e.sign.value}" for e in g.edges)
    return "\n".join(lines) + "\n"


def read_edge_list(path: str | Path) -> SignedGraph:
    return parse_edge_list(Path(path).read_text())


def write_edge_list(g: SignedGraph, path: str | Path) -> None:
    Path(path).write_text(format_edge_list(g))
