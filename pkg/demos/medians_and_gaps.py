"""Steiner k-medians, the neighbour-count criterion and a median gap that is too large.

Run with ``python demos/medians_and_gaps.py``.
"""
from steinerk import IndexMode, Tree, check_gap_bounds, median_report, satisfactory

# Vertex 1 carries two leaves, and vertex 0 leads into a short arm 0-4-5.
t = Tree(6, [(0, 1), (1, 2), (1, 3), (0, 4), (4, 5)])

for k in range(2, t.n + 1):
    rep = median_report(t, k)
    print(f"k={k}: all {sorted(rep.median_all)}  leaf {sorted(rep.median_leaf)}  "
          f"internal {sorted(rep.median_internal)}  "
          f"gaps (L-I, L-A, I-A) = {rep.gap_leaf_internal}, {rep.gap_leaf_all}, {rep.gap_internal_all}")

# Membership in a median can be read off local split counts alone,
# without computing any index.
k = 3
for mode in IndexMode:
    ok = [v for v in range(t.n) if satisfactory(t, v, k, mode)]
    print(f"{mode.value:>8}: vertices passing the neighbour test at k={k}: {ok}")

# At k=3 the leaf median {1} and the internal median {0} are adjacent, yet the
# published distance bound for that pair evaluates to 0 here.
print("gap bounds respected at k=3:", check_gap_bounds(t, 3)._asdict())
