"""Seeded instance generators.

Randomness comes from xorshift64* (shift triple 12, 25, 27; output
multiplier 0x2545F4914F6CDD1D), seeded by one round of splitmix64
(increment 0x9E3779B97F4A7C15, mixers 0xBF58476D1CE4E5B9 and
0x94D049BB133111EB). Both are fixed here so a seed means the same graph
everywhere, independent of Python's ``random`` module.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Literal

from .core import NEG, POS, Edge, SignedGraph
from .decompose import components, is_cactus, trivial_block_forest

MASK64 = (1 << 64) - 1


class InfeasibleBudget(ValueError):
    pass


def splitmix64(x: int) -> int:
    z = (x + 0x9E3779B97F4A7C15) & MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


class XorShift64Star:
    def __init__(self, seed: int):
        self.state = splitmix64(seed & MASK64) or 1

    def next_u64(self) -> int:
        x = self.state
        x ^= x >> 12
        x ^= (x << 25) & MASK64
        x ^= x >> 27
        self.state = x
        return (x * 0x2545F4914F6CDD1D) & MASK64

    def below(self, bound: int) -> int:
        """Uniform integer in ``[0, bound)`` by rejection (no modulo bias)."""
        if bound <= 0:
            raise ValueError("bound must be positive")
        limit = (1 << 64) - (1 << 64) % bound
        while True:
            x = self.next_u64()
            if x < limit:
                return x % bound

    def chance(self, p: Fraction) -> bool:
        return self.below(p.denominator) < p.numerator

    def shuffle(self, items: list) -> None:
        for i in range(len(items) - 1, 0, -1):
            j = self.below(i + 1)
            items[i], items[j] = items[j], items[i]

    def choice(self, items):
        return items[self.below(len(items))]


def _fraction(x) -> Fraction:
    if isinstance(x, float):
        x = repr(x)
    f = Fraction(x)
    if not 0 <= f <= 1:
        raise ValueError(f"negative_fraction must lie in [0, 1], got {f}")
    return f


@dataclass(frozen=True)
class GenConfig:
    seed: int
    n: int
    m: int
    negative_fraction: Fraction = field(default=Fraction(1, 3))
    allow_parallel: bool = False
    mode: Literal["uniform", "structured"] = "uniform"

    def __post_init__(self):
        object.__setattr__(self, "negative_fraction", _fraction(self.negative_fraction))
        if self.n < 0 or self.m < 0:
            raise ValueError("n and m must be nonnegative")
        if self.mode not in ("uniform", "structured"):
            raise ValueError(f"unknown mode {self.mode!r}")


def max_edges(n: int, allow_parallel: bool) -> int | None:
    """Edge capacity on ``n`` vertices; None means unbounded."""
    if n < 2:
        return 0
    return None if allow_parallel else n * (n - 1) // 2


def _check_budget(n: int, m: int, allow_parallel: bool) -> None:
    cap = max_edges(n, allow_parallel)
    if cap is not None and m > cap:
        raise InfeasibleBudget(f"{m} edges do not fit on {n} vertices (max {cap})")


def random_signed_graph(cfg: GenConfig) -> SignedGraph:
    """``cfg.m`` loopless edges on uniform random pairs, signs i.i.d."""
    _check_budget(cfg.n, cfg.m, cfg.allow_parallel)
    rng = XorShift64Star(cfg.seed)
    n, m = cfg.n, cfg.m
    pairs: list[tuple[int, int]] = []
    if cfg.allow_parallel:
        for _ in range(m):
            u = rng.below(n)
            v = rng.below(n - 1)
            pairs.append((u, v + (v >= u)))
    elif 2 * m <= n * (n - 1) // 2:
        seen = set()
        while len(pairs) < m:
            u, v = rng.below(n), rng.below(n)
            key = (min(u, v), max(u, v))
            if u != v and key not in seen:
                seen.add(key)
                pairs.append(key)
    else:
        pool = [(u, v) for u in range(n) for v in range(u + 1, n)]
        for i in range(m):
            j = i + rng.below(len(pool) - i)
            pool[i], pool[j] = pool[j], pool[i]
        pairs = pool[:m]
    edges = [Edge(u, v, NEG if rng.chance(cfg.negative_fraction) else POS) for u, v in pairs]
    return SignedGraph(n, tuple(edges))


def _negative_budget(m: int, frac: Fraction) -> int:
    # round half up
    return int(m * frac + Fraction(1, 2))


def structured_signed_graph(cfg: GenConfig) -> SignedGraph:
    """A graph whose weakly negative circles are pairwise edge-disjoint by construction.

    Positive components are grown from circles and positive bridges, padded
    with extra positive edges, then negative edges are placed either inside
    one bridge tree (kept only if the tree plus its negative edges stays a
    cactus) or between different positive components.
    """
    n, m = cfg.n, cfg.m
    _check_budget(n, m, cfg.allow_parallel)
    rng = XorShift64Star(cfg.seed)
    m_neg = _negative_budget(m, cfg.negative_fraction)
    m_pos = m - m_neg
    if m_pos > 0 and n < 2:
        raise InfeasibleBudget("positive edges need at least two vertices")

    # retries continue the same stream, so the result stays a function of the seed
    for _ in range(_ATTEMPTS):
        try:
            edges = _structured_attempt(rng, n, m_pos, m_neg, cfg.allow_parallel)
        except InfeasibleBudget:
            continue
        rng.shuffle(edges)
        return SignedGraph(n, tuple(edges))
    raise InfeasibleBudget(f"no structured graph found for n={n}, m={m} after {_ATTEMPTS} attempts")


_ATTEMPTS = 16


def _structured_attempt(rng: XorShift64Star, n: int, m_pos: int, m_neg: int, allow_parallel: bool) -> list[Edge]:
    # component count: enough to keep the spanning forest within the positive
    # budget, at least two when negatives may need to go between components
    k_lo = max(1, n - m_pos)
    k_hi = n if m_pos == 0 else n - 1
    if m_neg > 0 and n >= 3 and rng.below(4):
        k_lo = max(k_lo, 2)
    k_hi = max(k_lo, min(k_hi, k_lo + max(1, n // 6)))
    k = min(n, k_lo + rng.below(k_hi - k_lo + 1)) if n else 0

    positive = _positive_skeleton(rng, n, k, m_pos, allow_parallel)
    while positive is None and k > 1:
        k -= 1
        positive = _positive_skeleton(rng, n, k, m_pos, allow_parallel)
    if positive is None:
        raise InfeasibleBudget(f"cannot place {m_pos} positive edges on {n} vertices")
    return positive + _place_negatives(rng, n, positive, m_neg, allow_parallel)


def _positive_skeleton(rng: XorShift64Star, n: int, k: int, m_pos: int, allow_parallel: bool) -> list[Edge] | None:
    perm = list(range(n))
    rng.shuffle(perm)
    cuts = list(range(1, n))
    rng.shuffle(cuts)
    bounds = [0] + sorted(cuts[: k - 1]) + [n]
    groups = [perm[bounds[i]: bounds[i + 1]] for i in range(k)]

    edges: list[Edge] = []
    extra = m_pos - (n - k)
    for group in groups:
        placed = [group[0]]
        i = 1
        while i < len(group):
            anchor = rng.choice(placed)
            remaining = len(group) - i
            r = 1 + rng.below(min(4, remaining))
            if r == 1 and not allow_parallel:
                r = 2 if remaining >= 2 else 0
            if extra > 0 and r and rng.below(3):
                ring = [anchor] + group[i: i + r]
                for a, b in zip(ring, ring[1:] + ring[:1]):
                    edges.append(Edge(a, b, POS))
                extra -= 1
                placed.extend(group[i: i + r])
                i += r
            else:
                edges.append(Edge(anchor, group[i], POS))
                placed.append(group[i])
                i += 1

    big = [g for g in groups if len(g) >= 2]
    if extra > 0 and not big:
        return None
    if allow_parallel:
        for _ in range(extra):
            group = rng.choice(big)
            a = rng.choice(group)
            b = _other(rng, group, a)
            edges.append(Edge(a, b, POS))
        return edges

    used = {(min(e.u, e.v), max(e.u, e.v)) for e in edges}
    capacity = sum(len(g) * (len(g) - 1) // 2 for g in groups) - len(used)
    if extra > capacity:
        return None
    while extra > 0:
        pair = None
        for _ in range(32):
            group = rng.choice(big)
            a, b = rng.choice(group), rng.choice(group)
            key = (min(a, b), max(a, b))
            if a != b and key not in used:
                pair = key
                break
        if pair is None:
            free = [(a, b) for g in big for a in sorted(g) for b in sorted(g) if a < b and (a, b) not in used]
            pair = rng.choice(free)
        used.add(pair)
        edges.append(Edge(pair[0], pair[1], POS))
        extra -= 1
    return edges


def _other(rng: XorShift64Star, group: list[int], a: int) -> int:
    while True:
        b = rng.choice(group)
        if b != a:
            return b


def _place_negatives(
    rng: XorShift64Star, n: int, positive: list[Edge], m_neg: int, allow_parallel: bool
) -> list[Edge]:
    if m_neg == 0:
        return []
    base = SignedGraph(n, tuple(positive))
    comp = components(base).component_of
    forest = trivial_block_forest(base)
    tree_of = forest.tree_of
    tree_vertices = forest.trees()
    tree_edges: list[list[Edge]] = [[] for _ in tree_vertices]
    for eid in sorted(forest.isthmus_edge_ids):
        e = positive[eid]
        tree_edges[tree_of[e.u]].append(e)
    internal: dict[int, list[Edge]] = {}
    used = {(min(e.u, e.v), max(e.u, e.v)) for e in positive}
    multi_vertex = [v for v in range(n) if len(tree_vertices[tree_of[v]]) >= 2]
    n_comp = max(comp, default=-1) + 1
    members: list[list[int]] = [[] for _ in range(n_comp)]
    for v, c in enumerate(comp):
        members[c].append(v)

    def fits_cactus(t: int, cand: Edge) -> bool:
        verts = tree_vertices[t]
        local = {v: i for i, v in enumerate(verts)}
        es = tree_edges[t] + internal.get(t, []) + [cand]
        g = SignedGraph(len(verts), tuple(Edge(local[e.u], local[e.v], e.sign) for e in es))
        return is_cactus(g)

    out: list[Edge] = []
    for _ in range(m_neg):
        placed = None
        for _attempt in range(64):
            if multi_vertex and (n_comp < 2 or rng.below(2)):
                u = rng.choice(multi_vertex)
                t = tree_of[u]
                v = _other(rng, tree_vertices[t], u)
                cand = Edge(u, v, NEG)
                key = (min(u, v), max(u, v))
                if (allow_parallel or key not in used) and fits_cactus(t, cand):
                    internal.setdefault(t, []).append(cand)
                    placed = cand
                    break
            elif n_comp >= 2:
                u = rng.below(n)
                c = rng.below(n_comp - 1)
                c += c >= comp[u]
                v = rng.choice(members[c])
                key = (min(u, v), max(u, v))
                if allow_parallel or key not in used:
                    placed = Edge(u, v, NEG)
                    break
        if placed is None:
            raise InfeasibleBudget(f"could not place negative edge {len(out) + 1} of {m_neg}")
        used.add((min(placed.u, placed.v), max(placed.u, placed.v)))
        out.append(placed)
    return out


def generate(cfg: GenConfig) -> SignedGraph:
    if cfg.mode == "structured":
        return structured_signed_graph(cfg)
    return random_signed_graph(cfg)
