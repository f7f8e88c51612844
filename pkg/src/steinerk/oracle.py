"""Brute-force Steiner indices by explicit subset enumeration.

Exponential in ``n``; these are the reference values the counting formulas
in :mod:`steinerk.indices` are checked against.  Keep ``n`` below ~14.
"""
from __future__ import annotations

import enum
from itertools import combinations

from .errors import KOutOfRange
from .tree import Tree, steiner_distance


class IndexMode(enum.Enum):
    """Which vertices the accompanying ``k - 1`` set is drawn from."""

    ALL = "all"
    LEAF = "leaf"
    INTERNAL = "internal"


def check_k(t: Tree, k: int) -> None:
    if not isinstance(k, int) or k < 2 or (k > t.n and t.n > 1):
        raise KOutOfRange(f"k={k!r} outside [2, {t.n}]")


def pool(t: Tree, v: int, mode: IndexMode) -> list[int]:
    if mode is IndexMode.ALL:
        return [u for u in range(t.n) if u != v]
    if mode is IndexMode.LEAF:
        return sorted(t.leaves)
    return sorted(t.internals)


def brute_vertex_index(t: Tree, v: int, k: int, mode: IndexMode = IndexMode.ALL) -> int:
    t.check_vertex(v)
    check_k(t, k)
    # LEAF/INTERNAL pools may contain v itself; {v} | S is then a (k-1)-set
    return sum(steiner_distance(t, (v, *s)) for s in combinations(pool(t, v, mode), k - 1))


def brute_steiner_wiener(t: Tree, k: int) -> int:
    check_k(t, k)
    return sum(steiner_distance(t, s) for s in combinations(range(t.n), k))
