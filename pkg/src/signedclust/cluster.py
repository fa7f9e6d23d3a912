from __future__ import annotations

from .core import Partition, SignedGraph, disagreements
from .decompose import components


def canonical_clustering(g: SignedGraph) -> Partition:
    """Partition by connected components of the positive subgraph.

    Optimal whenever :func:`~signedclust.detect.check_structure` succeeds;
    otherwise its disagreement count is only an upper bound.
    """
    return Partition(components(g, g.positive_edge_ids()).component_of)


def is_clusterable(g: SignedGraph) -> tuple[bool, Partition | None]:
    """Whether some partition has no disagreeing edge, and that partition if so."""
    p = canonical_clustering(g)
    count, _ = disagreements(g, p)
    return (True, p) if count == 0 else (False, None)
