"""Polynomial-time Steiner indices via edge contributions.

An edge ``e`` lies in the Steiner tree of ``S`` exactly when ``S`` meets both
components of ``T - e``.  Summing that indicator over edges turns every
exponential subset sum into a handful of binomials per edge.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import NotAnEdge
from .oracle import IndexMode, check_k
from .tree import Tree, edge_splits, split_across


def binomial(n: int, k: int) -> int:
    """C(n, k), taken to be 0 whenever k < 0, k > n or n < 0."""
    if k < 0 or n < 0 or k > n:
        return 0
    return math.comb(n, k)


@dataclass(frozen=True)
class IndexVector:
    values: tuple[int, ...]
    k: int
    mode: IndexMode

    def __getitem__(self, v: int) -> int:
        return self.values[v]

    def __len__(self) -> int:
        return len(self.values)

    def argmin(self) -> frozenset[int]:
        lo = min(self.values)
        return frozenset(v for v, x in enumerate(self.values) if x == lo)


def steiner_wiener(t: Tree, k: int) -> int:
    """Steiner k-Wiener index: sum of d(S) over all k-subsets S."""
    check_k(t, k)
    if t.n == 1:
        return 0
    total = binomial(t.n, k)
    return sum(total - binomial(s.size_u, k) - binomial(s.size_v, k) for s in edge_splits(t))


def _pool_counts(t: Tree, mode: IndexMode) -> tuple[int, int]:
    if mode is IndexMode.ALL:
        return t.n, 0
    if mode is IndexMode.LEAF:
        return len(t.leaves), 1
    return len(t.internals), 2


def _far_side(split, v: int, t: Tree, field: int) -> int:
    """Size/leaf/internal tally of the side of ``split`` not containing ``v``."""
    u, w = split.edge
    child, top = (w, u) if t._rooted[0][w] == u else (u, w)
    far = top if t.in_subtree(v, child) else child
    return split.side(far)[field]


def vertex_index(t: Tree, v: int, k: int, mode: IndexMode = IndexMode.ALL) -> int:
    """Steiner k-distance of ``v`` (or its leaf/internal variant)."""
    t.check_vertex(v)
    check_k(t, k)
    return _index_of(t, v, k, mode, edge_splits(t))


def _index_of(t: Tree, v: int, k: int, mode: IndexMode, splits) -> int:
    if t.n == 1:
        return 0
    size, field = _pool_counts(t, mode)
    if mode is IndexMode.ALL:
        # v is never in its own pool
        size -= 1
    full = binomial(size, k - 1)
    total = 0
    for s in splits:
        far = _far_side(s, v, t, field)
        total += full - binomial(size - far, k - 1)
    return total


def all_vertex_index(t: Tree, k: int, mode: IndexMode = IndexMode.ALL) -> IndexVector:
    check_k(t, k)
    splits = edge_splits(t)
    return IndexVector(tuple(_index_of(t, v, k, mode, splits) for v in range(t.n)), k, mode)


def across_edge_delta(t: Tree, x: int, y: int, k: int) -> int:
    """d_k(x) - d_k(y) for an edge xy, from the two component orders alone."""
    check_k(t, k)
    if not t.has_edge(x, y):
        t.check_vertex(x)
        t.check_vertex(y)
        raise NotAnEdge(f"({x}, {y}) is not an edge")
    s = split_across(t, x, y)
    return binomial(s.size_v - 1, k - 1) - binomial(s.size_u - 1, k - 1)
