"""Signed graphs whose weakly negative circles are pairwise edge-disjoint.

For that class the partition into positive components is an optimal
correlation clustering, and its disagreement count equals the number of
weakly negative circles.
"""

from .cluster import canonical_clustering, is_clusterable
from .core import (
    Circle,
    CircleClass,
    Edge,
    GraphError,
    InvalidCircle,
    LoopEdge,
    Partition,
    PartitionMismatch,
    Sign,
    SignedGraph,
    VertexOutOfRange,
    build_graph,
    circle_sign_class,
    disagreements,
    make_circle,
)
from .detect import (
    PreconditionViolated,
    StructureReport,
    WitnessPair,
    check_structure,
    find_witness_step4,
    find_witness_step5,
)
from .edgelist import ParseError, format_edge_list, parse_edge_list, read_edge_list, write_edge_list
from .gen import GenConfig, InfeasibleBudget, random_signed_graph, structured_signed_graph

__version__ = "0.1.0"
