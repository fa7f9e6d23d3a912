"""Recognition time on sparse structured graphs of growing size."""

import time

from signedclust import GenConfig, check_structure, structured_signed_graph

for n in (1_000, 5_000, 10_000, 20_000):
    g = structured_signed_graph(GenConfig(seed=n, n=n, m=5 * n, negative_fraction="3/4", mode="structured"))
    start = time.perf_counter()
    r = check_structure(g)
    elapsed = time.perf_counter() - start
    print(f"n={n:>6} m={g.m:>7} structured={r.verdict} "
          f"intra negatives={len(r.intra_component_negative_edge_ids):>4} {elapsed:.3f} s")
