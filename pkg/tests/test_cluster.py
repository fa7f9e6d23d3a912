from hypothesis import given

from signedclust.cluster import canonical_clustering, is_clusterable
from signedclust.core import NEG, Partition, build_graph, disagreements

from bruteforce import naive_q, weakly_negative_sets
from conftest import signed_graphs


def test_all_negative_triangle_clusterable():
    g = build_graph(3, [(0, 1, "-"), (1, 2, "-"), (2, 0, "-")])
    ok, p = is_clusterable(g)
    assert ok
    assert p == Partition.discrete(3)


def test_weakly_negative_triangle_not_clusterable():
    g = build_graph(3, [(0, 1, "-"), (1, 2, "+"), (2, 0, "+")])
    assert is_clusterable(g) == (False, None)


def test_k4(k4):
    assert is_clusterable(k4) == (False, None)
    p = canonical_clustering(k4)
    assert p == Partition((0, 0, 0, 0))
    assert disagreements(k4, p)[0] == 2


def test_canonical_clustering_extremes():
    connected = build_graph(3, [(0, 1, "+"), (1, 2, "+")])
    assert canonical_clustering(connected).k == 1
    negative = build_graph(3, [(0, 1, "-")])
    assert canonical_clustering(negative) == Partition.discrete(3)


@given(signed_graphs(max_n=6, max_m=9))
def test_davis_criterion(g):
    ok, p = is_clusterable(g)
    assert ok == (not weakly_negative_sets(g))
    assert ok == (naive_q(g) == 0)
    if ok:
        assert disagreements(g, p)[0] == 0


@given(signed_graphs(max_n=6, max_m=9))
def test_canonical_only_negative_disagreements(g):
    p = canonical_clustering(g)
    count, bad = disagreements(g, p)
    assert all(g.edges[i].sign is NEG for i in bad)
    assert count >= naive_q(g)
