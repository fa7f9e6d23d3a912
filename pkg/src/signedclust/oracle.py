"""Exact brute-force quantities for small signed graphs.

Everything here is exponential by design and guarded by explicit caps;
exceeding a cap raises instead of returning a truncated answer.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Iterator, NamedTuple

import numpy as np

from .core import NEG, Circle, CircleClass, Partition, SignedGraph, circle_sign_class
from .decompose import adjacency

DEFAULT_CIRCLE_CAP = 10**6
DEFAULT_MAX_Q_VERTICES = 10


class CapExceeded(RuntimeError):
    def __init__(self, cap: int):
        super().__init__(f"circle enumeration exceeded cap of {cap} circles")
        self.cap = cap


class TooLargeForOracle(RuntimeError):
    def __init__(self, n: int, cap: int):
        super().__init__(f"graph has {n} vertices; partition oracle is capped at {cap}")
        self.n = n
        self.cap = cap


@dataclass(frozen=True)
class OracleStats:
    t: int
    w: int
    q: int


class PropositionCheck(NamedTuple):
    q_eq_t: bool
    w_eq_t: bool
    no_overlap: bool


def enumerate_circles(g: SignedGraph, cap: int = DEFAULT_CIRCLE_CAP) -> list[Circle]:
    """All vertex-simple circles of the multigraph, digons included, in canonical order.

    Each circle is rooted at its smallest vertex and kept in the single
    direction whose first edge id is below its last.
    """
    adj = adjacency(g)
    found: list[Circle] = []
    path: list[int] = []
    on_path: set[int] = set()

    def extend(start: int, v: int) -> None:
        for w, eid in adj[v]:
            if w == start:
                if path and eid != path[0] and path[0] < eid:
                    found.append(Circle(tuple(path) + (eid,)))
                    if len(found) > cap:
                        raise CapExceeded(cap)
            elif w > start and w not in on_path:
                path.append(eid)
                on_path.add(w)
                extend(start, w)
                on_path.discard(w)
                path.pop()

    for s in sorted(adj):
        extend(s, s)
    found.sort()
    return found


def weakly_negative_circles(g: SignedGraph, cap: int = DEFAULT_CIRCLE_CAP) -> list[Circle]:
    return [c for c in enumerate_circles(g, cap) if circle_sign_class(g, c) is CircleClass.WEAKLY_NEGATIVE]


def set_partitions(n: int) -> Iterator[tuple[int, ...]]:
    """Restricted growth strings of length ``n``: ``a[0] = 0``, ``a[i] <= 1 + max(a[:i])``."""
    if n == 0:
        yield ()
        return
    a = [0] * n
    top = [0] * n  # top[i] = max(a[:i+1])
    while True:
        yield tuple(a)
        i = n - 1
        while i > 0 and a[i] > top[i - 1]:
            i -= 1
        if i == 0:
            return
        a[i] += 1
        top[i] = max(top[i - 1], a[i])
        for j in range(i + 1, n):
            a[j] = 0
            top[j] = top[i]


@functools.lru_cache(maxsize=None)
def _partition_table(n: int) -> np.ndarray:
    table = np.array(list(set_partitions(n)), dtype=np.int8)
    table.flags.writeable = False
    return table.reshape(-1, n)


def min_disagreements(g: SignedGraph, max_vertices: int = DEFAULT_MAX_Q_VERTICES) -> tuple[int, Partition]:
    """Exact correlation-clustering optimum by scoring every set partition."""
    if g.n > max_vertices:
        raise TooLargeForOracle(g.n, max_vertices)
    table = _partition_table(g.n)
    cost = np.zeros(len(table), dtype=np.int32)
    for e in g.edges:
        same = table[:, e.u] == table[:, e.v]
        cost += same if e.sign is NEG else ~same
    best = int(np.argmin(cost))
    return int(cost[best]), Partition(tuple(int(x) for x in table[best]))


def max_disjoint_count(circles: list[Circle]) -> int:
    """Largest family of pairwise edge-disjoint circles, by branch and bound."""
    order = sorted(circles, key=lambda c: (len(c), c.edge_ids))
    masks = [sum(1 << e for e in c.edge_ids) for c in order]
    k = len(order)
    conflict = [0] * k
    for i in range(k):
        for j in range(i + 1, k):
            if masks[i] & masks[j]:
                conflict[i] |= 1 << j
                conflict[j] |= 1 << i
    best = 0

    def search(cand: int, size: int) -> None:
        nonlocal best
        if cand == 0:
            best = max(best, size)
            return
        if size + cand.bit_count() <= best:
            return
        low = cand & -cand
        i = low.bit_length() - 1
        search(cand & ~conflict[i] & ~low, size + 1)
        if cand & conflict[i]:
            search(cand & ~low, size)

    search((1 << k) - 1, 0)
    return best


def _has_overlap(circles: list[Circle]) -> bool:
    sets = [c.edge_set for c in circles]
    return any(sets[i] & sets[j] for i in range(len(sets)) for j in range(i + 1, len(sets)))


def stats(
    g: SignedGraph,
    max_q_vertices: int = DEFAULT_MAX_Q_VERTICES,
    circle_cap: int = DEFAULT_CIRCLE_CAP,
) -> OracleStats:
    if g.n > max_q_vertices:
        raise TooLargeForOracle(g.n, max_q_vertices)
    wn = weakly_negative_circles(g, circle_cap)
    q, _ = min_disagreements(g, max_q_vertices)
    return OracleStats(t=len(wn), w=max_disjoint_count(wn), q=q)


def proposition_check(
    g: SignedGraph,
    max_q_vertices: int = DEFAULT_MAX_Q_VERTICES,
    circle_cap: int = DEFAULT_CIRCLE_CAP,
) -> PropositionCheck:
    s = stats(g, max_q_vertices, circle_cap)
    no_overlap = not _has_overlap(weakly_negative_circles(g, circle_cap))
    return PropositionCheck(s.q == s.t, s.w == s.t, no_overlap)


def observation_check(g: SignedGraph, circle_cap: int = DEFAULT_CIRCLE_CAP) -> bool:
    """A weakly negative circle overlapping no other one meets every all-positive
    or other weakly negative circle in at most one vertex."""
    circles = enumerate_circles(g, circle_cap)
    wn, ap = [], []
    for c in circles:
        cls = circle_sign_class(g, c)
        if cls is CircleClass.WEAKLY_NEGATIVE:
            wn.append(c)
        elif cls is CircleClass.ALL_POSITIVE:
            ap.append(c)
    verts = {c: set(c.vertices(g)) for c in wn + ap}
    for w in wn:
        others = [c for c in wn if c != w]
        if any(w.edge_set & c.edge_set for c in others):
            continue
        if any(len(verts[w] & verts[c]) > 1 for c in others + ap):
            return False
    return True
