"""Signed multigraph model: signs, edges with stable ids, circles and partitions."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple, Sequence


class GraphError(ValueError):
    """Base class for malformed graph data."""


class LoopEdge(GraphError):
    def __init__(self, u: int):
        super().__init__(f"loop edge at vertex {u}")
        self.u = u


class VertexOutOfRange(GraphError):
    def __init__(self, u: int, n: int):
        super().__init__(f"vertex {u} out of range for n={n}")
        self.u = u
        self.n = n


class InvalidCircle(GraphError):
    pass


class PartitionMismatch(GraphError):
    pass


class Sign(enum.Enum):
    POSITIVE = "+"
    NEGATIVE = "-"

    @classmethod
    def parse(cls, text: str) -> "Sign":
        if text == "+":
            return cls.POSITIVE
        if text == "-":
            return cls.NEGATIVE
        raise ValueError(f"sign must be '+' or '-', got {text!r}")

    def __str__(self) -> str:
        return self.value


POS = Sign.POSITIVE
NEG = Sign.NEGATIVE


class Edge(NamedTuple):
    u: int
    v: int
    sign: Sign

    def other(self, x: int) -> int:
        return self.v if x == self.u else self.u


@dataclass(frozen=True)
class SignedGraph:
    """Loopless signed multigraph on vertices ``0..n-1``.

    The id of an edge is its index in ``edges``; parallel edges keep distinct ids.
    Use :func:`build_graph` to construct one from raw tuples.
    """

    n: int
    edges: tuple[Edge, ...]

    def __post_init__(self):
        if self.n < 0:
            raise GraphError(f"negative vertex count {self.n}")
        for e in self.edges:
            for x in (e.u, e.v):
                if not 0 <= x < self.n:
                    raise VertexOutOfRange(x, self.n)
            if e.u == e.v:
                raise LoopEdge(e.u)

    @property
    def m(self) -> int:
        return len(self.edges)

    def edge_ids(self, sign: Sign | None = None) -> list[int]:
        if sign is None:
            return list(range(len(self.edges)))
        return [i for i, e in enumerate(self.edges) if e.sign is sign]

    def positive_edge_ids(self) -> list[int]:
        return self.edge_ids(POS)

    def negative_edge_ids(self) -> list[int]:
        return self.edge_ids(NEG)

    def without_edge(self, eid: int) -> "SignedGraph":
        return SignedGraph(self.n, self.edges[:eid] + self.edges[eid + 1:])


def build_graph(n: int, edge_list: Iterable[Sequence]) -> SignedGraph:
    """Validate ``(u, v, sign)`` triples and assign edge ids in list order.

    ``sign`` may be a :class:`Sign` or one of the strings ``"+"``/``"-"``.
    """
    edges = []
    for u, v, s in edge_list:
        if not isinstance(s, Sign):
            s = Sign.parse(s)
        edges.append(Edge(int(u), int(v), s))
    return SignedGraph(int(n), tuple(edges))


def _canonical_order(seq: Sequence[int]) -> tuple[int, ...]:
    k = len(seq)
    i = min(range(k), key=seq.__getitem__)
    if k <= 2:
        return tuple(sorted(seq))
    fwd = tuple(seq[(i + j) % k] for j in range(k))
    back = tuple(seq[(i - j) % k] for j in range(k))
    return fwd if fwd[1] < back[1] else back


@dataclass(frozen=True, order=True)
class Circle:
    """Cyclic sequence of edge ids, stored in canonical rotation/reflection."""

    edge_ids: tuple[int, ...]

    def __post_init__(self):
        if len(self.edge_ids) < 2:
            raise InvalidCircle("a circle needs at least two edges")
        if len(set(self.edge_ids)) != len(self.edge_ids):
            raise InvalidCircle(f"repeated edge in {self.edge_ids}")
        object.__setattr__(self, "edge_ids", _canonical_order(tuple(self.edge_ids)))

    def __len__(self) -> int:
        return len(self.edge_ids)

    @property
    def edge_set(self) -> frozenset[int]:
        return frozenset(self.edge_ids)

    def vertices(self, g: SignedGraph) -> list[int]:
        return walk_circle(g, self.edge_ids)


def walk_circle(g: SignedGraph, seq: Sequence[int]) -> list[int]:
    """Return the vertices visited by ``seq`` as a closed, vertex-simple walk.

    Raises InvalidCircle if ``seq`` is not such a walk in ``g``.
    """
    if len(seq) < 2:
        raise InvalidCircle("a circle needs at least two edges")
    for eid in seq:
        if not 0 <= eid < g.m:
            raise InvalidCircle(f"edge id {eid} out of range")
    if len(set(seq)) != len(seq):
        raise InvalidCircle(f"repeated edge in {tuple(seq)}")
    first = g.edges[seq[0]]
    for start in (first.u, first.v):
        cur = start
        visited = []
        for eid in seq:
            e = g.edges[eid]
            if cur not in (e.u, e.v):
                break
            visited.append(cur)
            cur = e.other(cur)
        else:
            if cur == start and len(set(visited)) == len(visited):
                return visited
    raise InvalidCircle(f"edges {tuple(seq)} do not form a circle")


def make_circle(g: SignedGraph, seq: Sequence[int]) -> Circle:
    walk_circle(g, seq)
    return Circle(tuple(seq))


class CircleClass(enum.Enum):
    ALL_POSITIVE = "all_positive"
    WEAKLY_NEGATIVE = "weakly_negative"
    OTHER = "other"


def circle_sign_class(g: SignedGraph, c: Circle | Sequence[int]) -> CircleClass:
    seq = c.edge_ids if isinstance(c, Circle) else tuple(c)
    walk_circle(g, seq)
    negatives = sum(1 for eid in seq if g.edges[eid].sign is NEG)
    if negatives == 0:
        return CircleClass.ALL_POSITIVE
    if negatives == 1:
        return CircleClass.WEAKLY_NEGATIVE
    return CircleClass.OTHER


def _canonical_labels(labels: Sequence[int]) -> tuple[int, ...]:
    relabel: dict[int, int] = {}
    return tuple(relabel.setdefault(x, len(relabel)) for x in labels)


@dataclass(frozen=True)
class Partition:
    """A clustering of ``0..n-1``; ``cluster_of[v]`` is the cluster of vertex ``v``.

    Cluster ids are renumbered on construction so that clusters appear in order
    of their smallest vertex. Equal partitions therefore compare equal.
    """

    cluster_of: tuple[int, ...] = field()

    def __post_init__(self):
        object.__setattr__(self, "cluster_of", _canonical_labels(tuple(self.cluster_of)))

    @classmethod
    def from_clusters(cls, n: int, clusters: Iterable[Iterable[int]]) -> "Partition":
        labels = [-1] * n
        for cid, members in enumerate(clusters):
            for v in members:
                if labels[v] != -1:
                    raise PartitionMismatch(f"vertex {v} listed twice")
                labels[v] = cid
        if -1 in labels:
            raise PartitionMismatch(f"vertex {labels.index(-1)} not covered")
        return cls(tuple(labels))

    @classmethod
    def discrete(cls, n: int) -> "Partition":
        return cls(tuple(range(n)))

    @property
    def n(self) -> int:
        return len(self.cluster_of)

    @property
    def k(self) -> int:
        return max(self.cluster_of, default=-1) + 1

    def clusters(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.k)]
        for v, c in enumerate(self.cluster_of):
            out[c].append(v)
        return out

    def together(self, u: int, v: int) -> bool:
        return self.cluster_of[u] == self.cluster_of[v]


def disagrees(e: Edge, p: Partition) -> bool:
    same = p.together(e.u, e.v)
    return (e.sign is NEG) == same


def disagreements(g: SignedGraph, p: Partition) -> tuple[int, list[int]]:
    """Count edges violating ``p``: positive across clusters or negative within one."""
    if p.n != g.n:
        raise PartitionMismatch(f"partition covers {p.n} vertices, graph has {g.n}")
    bad = [i for i, e in enumerate(g.edges) if disagrees(e, p)]
    return len(bad), bad
