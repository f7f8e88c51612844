"""Steiner k-medians, the neighbour-count centroid criterion and median gaps."""
from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .indices import all_vertex_index
from .oracle import IndexMode, check_k
from .tree import Tree, distances_from, split_across


@dataclass(frozen=True)
class MedianReport:
    k: int
    median_all: frozenset[int]
    median_leaf: frozenset[int]
    median_internal: frozenset[int]
    gap_leaf_internal: int
    gap_leaf_all: int
    gap_internal_all: int


class GapCheck(NamedTuple):
    leaf_internal: bool
    leaf_all: bool
    internal_all: bool


def median(t: Tree, k: int, mode: IndexMode = IndexMode.ALL) -> frozenset[int]:
    return all_vertex_index(t, k, mode).argmin()


def _side_count(t: Tree, x: int, y: int, mode: IndexMode) -> tuple[int, int]:
    """Pool members on x's and y's side of edge xy, endpoints included."""
    s = split_across(t, x, y)
    if mode is IndexMode.ALL:
        return s.size_u, s.size_v
    if mode is IndexMode.LEAF:
        return s.leaves_u, s.leaves_v
    return s.internals_u, s.internals_v


def satisfactory(t: Tree, v: int, k: int, mode: IndexMode = IndexMode.ALL) -> bool:
    """Neighbour-count test for ``v`` being a Steiner k-centroid of the given mode.

    For each neighbour ``u`` compare the pool sizes ``p_v`` and ``p_u`` of the
    two components of ``T - vu`` (for ``ALL`` these are the orders
    ``n_vu(v)``, ``n_vu(u)``).  With threshold ``h = k`` for ``ALL`` and
    ``h = k - 1`` otherwise, require ``p_v >= p_u`` or both ``< h``; when
    ``u`` is not itself a centroid, additionally ``p_v > p_u`` and
    ``p_v >= h``.

    Component counts include the endpoints.  Counting only ``C_v - v``
    misclassifies leaf ``v`` in LEAF mode and internal ``v`` in INTERNAL mode;
    ``P_3`` with ``k = 2`` is the smallest case.
    """
    t.check_vertex(v)
    check_k(t, k)
    return satisfactory_given(t, v, k, mode, median(t, k, mode))


def satisfactory_given(t: Tree, v: int, k: int, mode: IndexMode,
                       centroids: frozenset[int]) -> bool:
    """:func:`satisfactory` with the centroid set supplied by the caller."""
    if t.n == 1:
        return True
    h = k if mode is IndexMode.ALL else k - 1
    for u in t.adjacency[v]:
        pv, pu = _side_count(t, v, u, mode)
        if not (pv >= pu or (pv < h and pu < h)):
            return False
        if u not in centroids and not (pv > pu and pv >= h):
            return False
    return True


def set_gap(t: Tree, a: frozenset[int], b: frozenset[int]) -> int:
    """Minimum distance between a vertex of ``a`` and a vertex of ``b``."""
    if a & b:
        return 0
    return min(min(distances_from(t, x)[y] for y in b) for x in a)


def median_report(t: Tree, k: int) -> MedianReport:
    check_k(t, k)
    m_all = median(t, k, IndexMode.ALL)
    m_leaf = median(t, k, IndexMode.LEAF)
    m_int = median(t, k, IndexMode.INTERNAL)
    return MedianReport(k, m_all, m_leaf, m_int,
                        set_gap(t, m_leaf, m_int),
                        set_gap(t, m_leaf, m_all),
                        set_gap(t, m_int, m_all))


def gap_leaf_internal_bound(n: int, k: int, gap: int) -> int:
    return max(0, n + 1 - max(k, 3) - max(k + 1, gap + 2))


def gap_leaf_all_applies(n: int, k: int) -> bool:
    return 2 * k <= n + 1


def gap_leaf_all_bound_twice(n: int, k: int) -> int:
    """Twice the leaf/all gap bound, kept integral."""
    return max(0, n - 2 * max(k, 3) + 1)


def gap_internal_all_applies(n: int, k: int) -> bool:
    return 2 * k <= n - 1


def gap_internal_all_bound_twice(n: int, k: int, gap: int) -> int:
    return max(0, n - 2 * max(k + 1, gap + 2) + 1)


def check_gap_bounds(t: Tree, k: int, report: MedianReport | None = None) -> GapCheck:
    """Whether the observed median gaps respect the three distance bounds.

    Right-hand sides are clamped below at 0.  The leaf/all bound needs
    ``k <= (n+1)/2`` and the internal/all bound ``k <= (n-1)/2``; outside
    those ranges the corresponding entry is vacuously true.
    """
    rep = report if report is not None else median_report(t, k)
    n = t.n
    li = rep.gap_leaf_internal <= gap_leaf_internal_bound(n, k, rep.gap_leaf_internal)
    la = (not gap_leaf_all_applies(n, k)
          or 2 * rep.gap_leaf_all <= gap_leaf_all_bound_twice(n, k))
    ia = (not gap_internal_all_applies(n, k)
          or 2 * rep.gap_internal_all <= gap_internal_all_bound_twice(n, k, rep.gap_internal_all))
    return GapCheck(li, la, ia)
