"""Sign-agnostic decompositions over an edge subset of a signed graph.

Every function takes the host graph plus an optional iterable of edge ids
(default: all edges), so the same routines run on the positive subgraph, the
whole graph, or a bridge tree together with some negative edges.
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass
from typing import Iterable

from .core import SignedGraph

Adjacency = dict[int, list[tuple[int, int]]]


def _edge_subset(g: SignedGraph, edge_ids: Iterable[int] | None) -> list[int]:
    if edge_ids is None:
        return list(range(g.m))
    ids = sorted(set(edge_ids))
    if ids and not (0 <= ids[0] and ids[-1] < g.m):
        raise ValueError(f"edge ids out of range for graph with {g.m} edges")
    return ids


def adjacency(g: SignedGraph, edge_ids: Iterable[int] | None = None) -> Adjacency:
    """Map vertex -> [(neighbor, edge id)], neighbor lists in edge-id order.

    Only vertices touched by the subset appear as keys.
    """
    adj: Adjacency = {}
    for eid in _edge_subset(g, edge_ids):
        e = g.edges[eid]
        adj.setdefault(e.u, []).append((e.v, eid))
        adj.setdefault(e.v, []).append((e.u, eid))
    return adj


def _flood_labels(n: int, adj: Adjacency) -> tuple[int, ...]:
    label = [-1] * n
    nxt = 0
    for s in range(n):
        if label[s] != -1:
            continue
        label[s] = nxt
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y, _ in adj.get(x, ()):
                if label[y] == -1:
                    label[y] = nxt
                    queue.append(y)
        nxt += 1
    return tuple(label)


@dataclass(frozen=True)
class ComponentLabeling:
    component_of: tuple[int, ...]

    @property
    def count(self) -> int:
        return max(self.component_of, default=-1) + 1

    def members(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.count)]
        for v, c in enumerate(self.component_of):
            out[c].append(v)
        return out


def components(g: SignedGraph, edge_ids: Iterable[int] | None = None) -> ComponentLabeling:
    """Connected components of ``(V, edge_ids)``; ids ordered by smallest vertex."""
    return ComponentLabeling(_flood_labels(g.n, adjacency(g, edge_ids)))


class BlockKind(enum.Enum):
    ISTHMUS = "isthmus"
    CIRCLE = "circle"
    OTHER = "other"


@dataclass(frozen=True)
class BlockDecomposition:
    blocks: tuple[tuple[int, ...], ...]
    kinds: tuple[BlockKind, ...]

    def block_of(self) -> dict[int, int]:
        return {eid: b for b, block in enumerate(self.blocks) for eid in block}


def _blocks(g: SignedGraph, adj: Adjacency, roots: Iterable[int]) -> list[list[int]]:
    # Iterative lowpoint DFS with an edge stack. Parallel edges are told apart
    # by id, so only the tree edge itself is skipped when looking back.
    disc: dict[int, int] = {}
    low: dict[int, int] = {}
    edge_stack: list[int] = []
    found: list[list[int]] = []
    clock = 0
    for root in roots:
        if root in disc or root not in adj:
            continue
        disc[root] = low[root] = clock
        clock += 1
        stack = [(root, -1, iter(adj[root]))]
        while stack:
            v, parent_edge, it = stack[-1]
            descended = False
            for w, eid in it:
                if eid == parent_edge:
                    continue
                if w not in disc:
                    disc[w] = low[w] = clock
                    clock += 1
                    edge_stack.append(eid)
                    stack.append((w, eid, iter(adj[w])))
                    descended = True
                    break
                if disc[w] < disc[v]:
                    edge_stack.append(eid)
                    if disc[w] < low[v]:
                        low[v] = disc[w]
            if descended:
                continue
            stack.pop()
            if not stack:
                continue
            u = stack[-1][0]
            if low[v] < low[u]:
                low[u] = low[v]
            if low[v] >= disc[u]:
                block = []
                while True:
                    eid = edge_stack.pop()
                    block.append(eid)
                    if eid == parent_edge:
                        break
                found.append(block)
    return found


def _kind(g: SignedGraph, block: list[int]) -> BlockKind:
    if len(block) == 1:
        return BlockKind.ISTHMUS
    verts = set()
    for eid in block:
        e = g.edges[eid]
        verts.add(e.u)
        verts.add(e.v)
    # a 2-connected block is a single circle exactly when |E| = |V|
    return BlockKind.CIRCLE if len(verts) == len(block) else BlockKind.OTHER


def block_decomposition(g: SignedGraph, edge_ids: Iterable[int] | None = None) -> BlockDecomposition:
    """Split the edge subset into blocks, each tagged isthmus, circle or other.

    Blocks are listed by their smallest edge id, edges within a block sorted.
    """
    adj = adjacency(g, edge_ids)
    raw = _blocks(g, adj, sorted(adj))
    blocks = sorted(tuple(sorted(b)) for b in raw)
    return BlockDecomposition(tuple(blocks), tuple(_kind(g, list(b)) for b in blocks))


def bridges(g: SignedGraph, edge_ids: Iterable[int] | None = None) -> frozenset[int]:
    adj = adjacency(g, edge_ids)
    return frozenset(b[0] for b in _blocks(g, adj, sorted(adj)) if len(b) == 1)


@dataclass(frozen=True)
class TrivialBlockForest:
    isthmus_edge_ids: frozenset[int]
    tree_of: tuple[int, ...]

    @property
    def tree_count(self) -> int:
        return max(self.tree_of, default=-1) + 1

    def trees(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.tree_count)]
        for v, t in enumerate(self.tree_of):
            out[t].append(v)
        return out


def trivial_block_forest(g: SignedGraph, edge_ids: Iterable[int] | None = None) -> TrivialBlockForest:
    """The forest on all vertices whose edges are the isthmi of the subset."""
    isthmi = bridges(g, edge_ids)
    return TrivialBlockForest(isthmi, _flood_labels(g.n, adjacency(g, isthmi)))


def is_cactus(
    g: SignedGraph,
    edge_ids: Iterable[int] | None = None,
    vertices: Iterable[int] | None = None,
) -> bool:
    """True iff ``(vertices, edge_ids)`` is connected and all its blocks are circles or isthmi.

    ``vertices`` defaults to every vertex of ``g``. The null graph is not connected.
    """
    adj = adjacency(g, edge_ids)
    verts = set(range(g.n)) if vertices is None else set(vertices)
    if not verts:
        return False
    if not verts.issuperset(adj):
        raise ValueError("edge subset touches vertices outside the vertex set")
    start = min(verts)
    seen = {start}
    queue = deque([start])
    while queue:
        x = queue.popleft()
        for y, _ in adj.get(x, ()):
            if y not in seen:
                seen.add(y)
                queue.append(y)
    if len(seen) != len(verts):
        return False
    return all(_kind(g, b) is not BlockKind.OTHER for b in _blocks(g, adj, [start]))
