"""Steiner distances and the k-indices on a small caterpillar.

Run with ``python demos/steiner_indices.py``.
"""
from steinerk import (
    IndexMode,
    Tree,
    all_vertex_index,
    brute_vertex_index,
    steiner_distance,
    steiner_wiener,
)

# A caterpillar: spine 0-1-2-3 with two leaves on vertex 1 and one on vertex 2.
t = Tree(7, [(0, 1), (1, 2), (2, 3), (1, 4), (1, 5), (2, 6)])
print("leaves:", sorted(t.leaves), " internal:", sorted(t.internals))

# The Steiner distance of a set is the size of the smallest subtree holding it.
for s in ({0, 3}, {0, 3, 6}, {4, 5, 6}, set(range(7))):
    print(f"d({sorted(s)}) = {steiner_distance(t, s)}")

# SW_k sums d(S) over all k-subsets.  Each edge is counted once for every
# subset that has members on both of its sides, so this is linear in n.
for k in range(2, t.n + 1):
    print(f"SW_{k} = {steiner_wiener(t, k)}")

# d_k(v) sums d({v} + S) over (k-1)-subsets S.  The leaf and internal
# variants draw S from the leaves or internal vertices only.
k = 3
for mode in IndexMode:
    vec = all_vertex_index(t, k, mode)
    print(f"{mode.value:>8} d_{k}: {list(vec.values)}  minimisers {sorted(vec.argmin())}")

# The fast values agree with direct enumeration of all subsets.
assert all_vertex_index(t, k).values == tuple(brute_vertex_index(t, v, k) for v in range(t.n))

# Each k-subset is counted by each of its k members.
assert k * steiner_wiener(t, k) == sum(all_vertex_index(t, k).values)
print("handshake identity holds: k * SW_k == sum of d_k")
