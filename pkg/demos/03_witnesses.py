"""The two ways recognition can fail, each with its certificate."""

from signedclust import build_graph, check_structure

# %% a negative chord across a positive 4-cycle: the chord's endpoints are in
# one positive component but not joined by a unique positive path
chorded = build_graph(4, [(0, 1, "+"), (1, 2, "+"), (2, 3, "+"), (3, 0, "+"), (0, 2, "-")])
r = check_structure(chorded)
print(r.failed_step, r.witness)

# %% two negative chords over a positive path whose tree paths overlap in edge 1-2
overlapping = build_graph(4, [(0, 1, "+"), (1, 2, "+"), (2, 3, "+"), (0, 2, "-"), (1, 3, "-")])
r = check_structure(overlapping)
print(r.failed_step, r.witness)

# %% moving the second chord to 2-3 makes the tree plus chords a cactus
fixed = build_graph(4, [(0, 1, "+"), (1, 2, "+"), (2, 3, "+"), (0, 2, "-"), (2, 3, "-")])
r = check_structure(fixed)
print(r.verdict, r.canonical_clustering.clusters(), r.intra_component_negative_edge_ids)
