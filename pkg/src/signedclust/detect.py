"""Recognize signed graphs whose weakly negative circles are pairwise edge-disjoint.

The test follows the structural characterization: every negative edge inside
a component of the positive subgraph must stay inside one tree of the
positive isthmus forest, and each such tree together with its negative edges
must be a cactus. Failures come with a pair of overlapping weakly negative
circles as a certificate.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Literal

from .core import NEG, Circle, Partition, SignedGraph
from .decompose import (
    Adjacency,
    ComponentLabeling,
    TrivialBlockForest,
    adjacency,
    components,
    is_cactus,
    trivial_block_forest,
)

FailedStep = Literal["step4", "step5"]


class PreconditionViolated(ValueError):
    pass


@dataclass(frozen=True)
class WitnessPair:
    circle_a: Circle
    circle_b: Circle
    shared_edge_ids: frozenset[int]


@dataclass(frozen=True)
class StructureReport:
    verdict: bool
    canonical_clustering: Partition | None = None
    intra_component_negative_edge_ids: tuple[int, ...] | None = None
    witness: WitnessPair | None = None
    failed_step: FailedStep | None = None

    def __post_init__(self):
        has_cluster = self.canonical_clustering is not None and self.intra_component_negative_edge_ids is not None
        has_witness = self.witness is not None and self.failed_step is not None
        if self.verdict != has_cluster or self.verdict == has_witness:
            raise ValueError("report must carry clustering data xor a witness, matching the verdict")


def _bfs_path(adj: Adjacency, src: int, dst: int, banned: int | None = None) -> list[int] | None:
    """Edge ids of a shortest src-dst path, preferring smaller edge ids at each step."""
    via: dict[int, tuple[int, int]] = {src: (-1, -1)}
    queue = deque([src])
    while queue:
        x = queue.popleft()
        if x == dst:
            break
        for y, eid in adj.get(x, ()):
            if eid != banned and y not in via:
                via[y] = (eid, x)
                queue.append(y)
    if dst not in via:
        return None
    path = []
    x = dst
    while x != src:
        eid, x = via[x]
        path.append(eid)
    path.reverse()
    return path


def find_witness_step4(
    g: SignedGraph,
    eid: int,
    *,
    comp: ComponentLabeling | None = None,
    forest: TrivialBlockForest | None = None,
) -> WitnessPair:
    """Two weakly negative circles through negative edge ``eid`` sharing it.

    ``eid`` must join two vertices of one positive component lying in
    different trees of the positive isthmus forest.
    """
    pos = g.positive_edge_ids()
    comp = comp or components(g, pos)
    forest = forest or trivial_block_forest(g, pos)
    e = g.edges[eid]
    if (
        e.sign is not NEG
        or comp.component_of[e.u] != comp.component_of[e.v]
        or forest.tree_of[e.u] == forest.tree_of[e.v]
    ):
        raise PreconditionViolated(f"edge {eid} does not fail the tree-containment test")
    adj = adjacency(g, pos)
    first = _bfs_path(adj, e.u, e.v)
    assert first is not None
    # the route must cross a nontrivial block; dropping one of its edges
    # leaves the positive subgraph connected, so a second route exists
    pivot = next(f for f in first if f not in forest.isthmus_edge_ids)
    second = _bfs_path(adj, e.u, e.v, banned=pivot)
    assert second is not None
    a = Circle(tuple(first) + (eid,))
    b = Circle(tuple(second) + (eid,))
    return WitnessPair(a, b, a.edge_set & b.edge_set)


def _tree_adjacency(g: SignedGraph, forest: TrivialBlockForest, tree: int) -> Adjacency:
    return adjacency(g, [i for i in forest.isthmus_edge_ids if forest.tree_of[g.edges[i].u] == tree])


def find_witness_step5(
    g: SignedGraph,
    tree: int,
    negative_ids: Iterable[int],
    *,
    forest: TrivialBlockForest | None = None,
) -> WitnessPair:
    """First pair of negative edges (by edge id) whose tree paths share an edge."""
    forest = forest or trivial_block_forest(g, g.positive_edge_ids())
    negs = sorted(negative_ids)
    for i in negs:
        e = g.edges[i]
        if e.sign is not NEG or not forest.tree_of[e.u] == forest.tree_of[e.v] == tree:
            raise PreconditionViolated(f"edge {i} is not a negative edge inside tree {tree}")
    tadj = _tree_adjacency(g, forest, tree)
    paths: dict[int, list[int]] = {}
    for i in negs:
        e = g.edges[i]
        path = _bfs_path(tadj, e.u, e.v)
        assert path is not None
        paths[i] = path
    for x, i in enumerate(negs):
        pi = set(paths[i])
        for j in negs[x + 1:]:
            shared = pi.intersection(paths[j])
            if shared:
                a = Circle(tuple(paths[i]) + (i,))
                b = Circle(tuple(paths[j]) + (j,))
                return WitnessPair(a, b, frozenset(shared))
    raise PreconditionViolated(f"tree {tree} with its negative edges is a cactus")


def check_structure(g: SignedGraph) -> StructureReport:
    pos, neg = [], []
    for i, e in enumerate(g.edges):
        (neg if e.sign is NEG else pos).append(i)
    comp = components(g, pos)
    forest = trivial_block_forest(g, pos)
    cid, tid = comp.component_of, forest.tree_of

    intra = [i for i in neg if cid[g.edges[i].u] == cid[g.edges[i].v]]
    for i in intra:
        e = g.edges[i]
        if tid[e.u] != tid[e.v]:
            witness = find_witness_step4(g, i, comp=comp, forest=forest)
            return StructureReport(False, witness=witness, failed_step="step4")

    negs_in: dict[int, list[int]] = {}
    for i in intra:
        negs_in.setdefault(tid[g.edges[i].u], []).append(i)
    tree_edges: dict[int, list[int]] = {t: [] for t in negs_in}
    for i in forest.isthmus_edge_ids:
        t = tid[g.edges[i].u]
        if t in tree_edges:
            tree_edges[t].append(i)
    verts: dict[int, list[int]] = {t: [] for t in negs_in}
    for v, t in enumerate(tid):
        if t in verts:
            verts[t].append(v)

    failures = []
    for t in sorted(negs_in):
        if not is_cactus(g, tree_edges[t] + negs_in[t], verts[t]):
            failures.append(find_witness_step5(g, t, negs_in[t], forest=forest))
    if failures:
        first = min(failures, key=lambda w: _pair_key(g, w))
        return StructureReport(False, witness=first, failed_step="step5")

    return StructureReport(
        True,
        canonical_clustering=Partition(cid),
        intra_component_negative_edge_ids=tuple(intra),
    )


def _pair_key(g: SignedGraph, w: WitnessPair) -> tuple[int, int]:
    ids = sorted(i for i in w.circle_a.edge_ids + w.circle_b.edge_ids if g.edges[i].sign is NEG)
    return ids[0], ids[1]
