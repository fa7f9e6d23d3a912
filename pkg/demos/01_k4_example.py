"""K4 with two nonadjacent negative edges.

The four triangles are the weakly negative circles and every pair of them
shares an edge, so the lower bound w, the optimum Q and the circle count t
all differ.
"""

from signedclust import build_graph, canonical_clustering, check_structure, disagreements
from signedclust.oracle import enumerate_circles, stats

g = build_graph(4, [(0, 1, "-"), (0, 2, "+"), (0, 3, "+"), (1, 2, "+"), (1, 3, "+"), (2, 3, "-")])

# %% every circle of the graph and how many negative edges it carries
for c in enumerate_circles(g):
    negs = sum(g.edges[i].sign.value == "-" for i in c.edge_ids)
    print(f"circle {c.edge_ids}: {negs} negative")

# %% exact t, w, Q from brute force
s = stats(g)
print(f"t = {s.t}, w = {s.w}, Q = {s.q}")

# %% the recognizer refuses the graph and says why
report = check_structure(g)
print("structured:", report.verdict, "failed at", report.failed_step)
print("witness:", report.witness.circle_a.edge_ids, report.witness.circle_b.edge_ids,
      "share", sorted(report.witness.shared_edge_ids))

# %% deleting the two negative edges is still optimal here, by coincidence
p = canonical_clustering(g)
print("one cluster:", p.clusters(), "disagreements:", disagreements(g, p)[0])
