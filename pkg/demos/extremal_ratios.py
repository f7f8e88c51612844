"""Comets and the extremal ratio bounds, checked against every tree of one order.

Run with ``python demos/extremal_ratios.py``.
"""
from fractions import Fraction

from steinerk import (
    all_vertex_index,
    comet,
    enumerate_free_trees,
    global_local_bounds,
    internal_pair_ratio_bound,
    leaf_centroid_lower_bound,
    leaf_pair_ratio_bound,
)

n = 8
trees = [ct.tree for ct in enumerate_free_trees(n)]
print(f"{len(trees)} free trees on {n} vertices")

cm = comet(n, 4)
print(f"comet({n},4): edges {list(cm.tree.edges)}; a={cm.a} b={cm.b} c={cm.c} d={cm.d}")

for k in range(2, n + 1):
    best_leaf = best_int = None
    worst_centroid = None
    for t in trees:
        d = all_vertex_index(t, k).values
        cent = [v for v in range(n) if d[v] == min(d)]
        for v in t.leaves:
            for w in t.leaves - {v}:
                r = Fraction(d[v], d[w])
                best_leaf = r if best_leaf is None else max(best_leaf, r)
            for c in cent:
                r = Fraction(d[v], d[c])
                worst_centroid = r if worst_centroid is None else min(worst_centroid, r)
        for v in t.internals:
            for w in t.internals - {v}:
                r = Fraction(d[v], d[w])
                best_int = r if best_int is None else max(best_int, r)
    lp = leaf_pair_ratio_bound(n, k)
    ip = internal_pair_ratio_bound(n, k)
    lc = leaf_centroid_lower_bound(n, k)
    lo, hi = global_local_bounds(n, k)
    print(f"k={k}: leaf pair {best_leaf} (bound {lp.value}, r={lp.witness})  "
          f"internal pair {best_int} (bound {ip.value})  "
          f"leaf/centroid {worst_centroid} (bound {lc.value}, {lc.witness})  "
          f"SW/d in [{lo}, {hi}]")
    assert (best_leaf, best_int, worst_centroid) == (lp.value, ip.value, lc.value)
