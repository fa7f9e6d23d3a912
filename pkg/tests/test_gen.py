from fractions import Fraction

import pytest

from signedclust.core import NEG
from signedclust.detect import check_structure
from signedclust.gen import (
    GenConfig,
    InfeasibleBudget,
    XorShift64Star,
    random_signed_graph,
    splitmix64,
    structured_signed_graph,
)
from signedclust.oracle import stats


def test_splitmix_reference_value():
    # first output of the reference splitmix64 seeded with 0
    assert splitmix64(0) == 0xE220A8397B1DCDAF


def test_xorshift_reference_stream():
    # xorshift64* step from state 1, computed by hand from the shift triple
    rng = XorShift64Star(0)
    rng.state = 1
    x = 1
    x ^= x >> 12
    x ^= (x << 25) & (2**64 - 1)
    x ^= x >> 27
    assert rng.next_u64() == (x * 0x2545F4914F6CDD1D) % 2**64
    assert rng.state == x


def test_below_range_and_spread():
    rng = XorShift64Star(42)
    draws = [rng.below(6) for _ in range(6000)]
    assert set(draws) == set(range(6))
    assert all(800 < draws.count(k) < 1200 for k in range(6))


def test_single_vertex():
    g = random_signed_graph(GenConfig(seed=1, n=1, m=0))
    assert (g.n, g.m) == (1, 0)


def test_deterministic():
    cfg = GenConfig(seed=99, n=7, m=10, allow_parallel=True)
    assert random_signed_graph(cfg) == random_signed_graph(cfg)
    cfg = GenConfig(seed=99, n=30, m=45, mode="structured")
    assert structured_signed_graph(cfg) == structured_signed_graph(cfg)


def test_infeasible_simple_budget():
    with pytest.raises(InfeasibleBudget):
        random_signed_graph(GenConfig(seed=3, n=4, m=7))
    with pytest.raises(InfeasibleBudget):
        random_signed_graph(GenConfig(seed=3, n=1, m=1, allow_parallel=True))


@pytest.mark.parametrize("seed", range(40))
def test_simple_outputs_are_simple(seed):
    n = 2 + seed % 6
    m = min(seed % 9, n * (n - 1) // 2)
    g = random_signed_graph(GenConfig(seed, n, m))
    pairs = [frozenset((e.u, e.v)) for e in g.edges]
    assert len(pairs) == len(set(pairs)) == m
    assert all(e.u != e.v for e in g.edges)


def test_negative_fraction_extremes():
    g = random_signed_graph(GenConfig(5, 6, 10, negative_fraction=0))
    assert not g.negative_edge_ids()
    g = random_signed_graph(GenConfig(5, 6, 10, negative_fraction=1))
    assert len(g.negative_edge_ids()) == 10


def test_fraction_parsing():
    assert GenConfig(0, 3, 1, negative_fraction=0.3).negative_fraction == Fraction(3, 10)
    assert GenConfig(0, 3, 1, negative_fraction="1/4").negative_fraction == Fraction(1, 4)
    with pytest.raises(ValueError):
        GenConfig(0, 3, 1, negative_fraction=2)


def test_structured_small_triangle():
    # the only structured shape with 3 vertices, 2 positive and 1 negative edge
    # that keeps the negative inside a component is a path plus its closing chord
    hits = 0
    for seed in range(50):
        g = structured_signed_graph(GenConfig(seed, 3, 3, mode="structured"))
        assert check_structure(g).verdict
        if g.n == 3 and len(g.negative_edge_ids()) == 1 and stats(g).q == 1:
            hits += 1
    assert hits > 0


def test_structured_no_negatives():
    for seed in range(30):
        g = structured_signed_graph(GenConfig(seed, 12, 18, negative_fraction=0, mode="structured"))
        assert not g.negative_edge_ids()
        assert check_structure(g).verdict


def test_structured_only_cross_negatives():
    # with no positive edges every negative edge joins two positive components
    for seed in range(30):
        g = structured_signed_graph(GenConfig(seed, 6, 5, negative_fraction=1, mode="structured", allow_parallel=True))
        r = check_structure(g)
        assert r.verdict
        assert r.intra_component_negative_edge_ids == ()
        assert stats(g).q == 0


@pytest.mark.parametrize("allow_parallel", [False, True])
def test_structured_soundness_and_budget(allow_parallel):
    for seed in range(150):
        n = 4 + seed % 40
        m = n + seed % n
        g = structured_signed_graph(GenConfig(seed, n, m, allow_parallel=allow_parallel, mode="structured"))
        assert g.m == m
        assert check_structure(g).verdict
        if not allow_parallel:
            pairs = [frozenset((e.u, e.v)) for e in g.edges]
            assert len(pairs) == len(set(pairs))


def test_structured_has_internal_negatives_somewhere():
    found = 0
    for seed in range(40):
        g = structured_signed_graph(GenConfig(seed, 20, 30, mode="structured"))
        found += len(check_structure(g).intra_component_negative_edge_ids)
    assert found > 0
    assert any(e.sign is NEG for e in g.edges)
