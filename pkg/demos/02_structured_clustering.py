"""Exact correlation clustering on the recognized class.

Build a graph whose weakly negative circles are pairwise edge-disjoint,
read the optimal clustering off its positive components, and confirm the
count with the exponential oracle.
"""

from signedclust import GenConfig, check_structure, disagreements, structured_signed_graph
from signedclust.oracle import stats

cfg = GenConfig(seed=11, n=9, m=14, negative_fraction="2/5", mode="structured")
g = structured_signed_graph(cfg)
for i, e in enumerate(g.edges):
    print(i, e.u, e.v, e.sign.value)

# %%
report = check_structure(g)
p = report.canonical_clustering
print("clusters:", p.clusters())
print("negative edges inside clusters:", report.intra_component_negative_edge_ids)

# %% brute force over all 21147 partitions of 9 vertices agrees
count, _ = disagreements(g, p)
s = stats(g)
print(f"disagreements = {count}; oracle t = {s.t}, w = {s.w}, Q = {s.q}")
assert count == s.q == s.w == s.t
