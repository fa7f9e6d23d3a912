import pytest
from hypothesis import given
from hypothesis import strategies as st

from signedclust.core import (
    NEG,
    POS,
    Circle,
    CircleClass,
    InvalidCircle,
    LoopEdge,
    Partition,
    PartitionMismatch,
    Sign,
    VertexOutOfRange,
    build_graph,
    circle_sign_class,
    disagreements,
    make_circle,
)
from signedclust.decompose import components

from bruteforce import all_partitions
from conftest import signed_graphs


def test_sign_parse():
    assert Sign.parse("+") is POS
    assert Sign.parse("-") is NEG
    for bad in ("", "++", "p", "0"):
        with pytest.raises(ValueError):
            Sign.parse(bad)


def test_build_k4(k4):
    assert k4.n == 4
    assert k4.m == 6
    assert k4.negative_edge_ids() == [0, 5]


def test_build_single_vertex():
    g = build_graph(1, [])
    assert (g.n, g.m) == (1, 0)


def test_loop_rejected():
    with pytest.raises(LoopEdge) as info:
        build_graph(2, [(0, 0, "+")])
    assert info.value.u == 0


@pytest.mark.parametrize("edge", [(0, 2, "+"), (-1, 0, "-")])
def test_vertex_out_of_range(edge):
    with pytest.raises(VertexOutOfRange):
        build_graph(2, [edge])


def test_parallel_edges_keep_ids():
    g = build_graph(2, [(0, 1, "+"), (0, 1, "+")])
    assert g.edges[0] == g.edges[1]
    assert g.edge_ids() == [0, 1]


def test_circle_canonical_form():
    assert Circle((3, 1, 2)).edge_ids == (1, 2, 3)
    assert Circle((3, 2, 1)).edge_ids == (1, 2, 3)
    assert Circle((5, 0)).edge_ids == (0, 5)
    assert Circle((4, 7, 0, 9)).edge_ids == (0, 7, 4, 9)


@given(st.lists(st.integers(0, 50), min_size=2, max_size=8, unique=True), st.integers(0, 7), st.booleans())
def test_circle_canonical_rotation_reflection(seq, shift, flip):
    shift %= len(seq)
    moved = seq[shift:] + seq[:shift]
    if flip:
        moved = moved[::-1]
    c = Circle(tuple(seq))
    assert Circle(tuple(moved)) == c
    assert Circle(c.edge_ids) == c


def test_circle_too_short():
    with pytest.raises(InvalidCircle):
        Circle((1,))


def test_circle_sign_classes():
    tri = build_graph(3, [(0, 1, "-"), (1, 2, "+"), (2, 0, "+")])
    assert circle_sign_class(tri, Circle((0, 1, 2))) is CircleClass.WEAKLY_NEGATIVE
    pos = build_graph(3, [(0, 1, "+"), (1, 2, "+"), (2, 0, "+")])
    assert circle_sign_class(pos, Circle((0, 1, 2))) is CircleClass.ALL_POSITIVE
    digon = build_graph(2, [(0, 1, "-"), (0, 1, "-")])
    assert circle_sign_class(digon, Circle((0, 1))) is CircleClass.OTHER


def test_invalid_circle_detected():
    path = build_graph(4, [(0, 1, "+"), (1, 2, "+"), (2, 3, "+")])
    with pytest.raises(InvalidCircle):
        circle_sign_class(path, Circle((0, 1, 2)))
    with pytest.raises(InvalidCircle):
        circle_sign_class(path, Circle((0, 7)))
    # figure eight through vertex 0 is closed but not vertex-simple
    eight = build_graph(5, [(0, 1, "+"), (1, 2, "+"), (2, 0, "+"), (0, 3, "+"), (3, 4, "+"), (4, 0, "+")])
    with pytest.raises(InvalidCircle):
        make_circle(eight, (0, 1, 2, 3, 4, 5))


def test_circle_vertices():
    g = build_graph(4, [(0, 1, "+"), (1, 2, "+"), (2, 3, "+"), (3, 0, "-")])
    assert sorted(make_circle(g, (2, 1, 0, 3)).vertices(g)) == [0, 1, 2, 3]


def test_partition_canonical():
    assert Partition((5, 5, 2, 9)).cluster_of == (0, 0, 1, 2)
    assert Partition.from_clusters(4, [[3], [1, 0], [2]]) == Partition((0, 0, 1, 2))
    assert Partition.from_clusters(3, [[2, 1], [0]]).clusters() == [[0], [1, 2]]
    with pytest.raises(PartitionMismatch):
        Partition.from_clusters(3, [[0, 1]])


def test_disagreements_k4_one_cluster(k4):
    assert disagreements(k4, Partition((0, 0, 0, 0))) == (2, [0, 5])


def test_disagreements_triangle_partitions():
    tri = build_graph(3, [(0, 1, "-"), (0, 2, "+"), (1, 2, "+")])
    assert disagreements(tri, Partition.from_clusters(3, [[0], [1, 2]])) == (1, [1])
    counts = sorted(disagreements(tri, Partition.from_clusters(3, b))[0] for b in all_partitions([0, 1, 2]))
    assert counts == [1, 1, 1, 2, 3]


def test_disagreements_mismatch(k4):
    with pytest.raises(PartitionMismatch):
        disagreements(k4, Partition((0, 0, 0)))


@given(signed_graphs())
def test_discrete_partition_counts_positive_edges(g):
    count, _ = disagreements(g, Partition.discrete(g.n))
    assert count == len(g.positive_edge_ids())


@given(signed_graphs(), st.data())
def test_disagreements_bounds_and_relabel(g, data):
    labels = data.draw(st.lists(st.integers(0, 3), min_size=g.n, max_size=g.n))
    count, bad = disagreements(g, Partition(tuple(labels)))
    assert 0 <= count <= g.m
    assert bad == sorted(bad)
    relabeled = Partition(tuple(10 - x for x in labels))
    assert disagreements(g, relabeled) == (count, bad)


@given(signed_graphs())
def test_all_positive_components_have_no_disagreements(g):
    pos = g.positive_edge_ids()
    sub = build_graph(g.n, [(g.edges[i].u, g.edges[i].v, "+") for i in pos])
    assert disagreements(sub, Partition(components(sub).component_of))[0] == 0
