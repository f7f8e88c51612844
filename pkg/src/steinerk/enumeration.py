"""Non-isomorphic free trees via canonical level sequences.

The generator is the Wright-Richmond-Odlyzko-McKay successor scheme: rooted
level sequences are walked in decreasing lexicographic order and only the
ones that are canonical for their free tree (rooted at the center, with the
first principal subtree no larger than the remainder) are emitted.
"""
from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import CapExceeded, EntryOutOfRange
from .tree import Tree

DEFAULT_CAP = 14


@dataclass(frozen=True)
class CanonicalTree:
    level_sequence: tuple[int, ...]
    tree: Tree

    @property
    def n(self) -> int:
        return self.tree.n


def tree_from_levels(levels: Sequence[int]) -> Tree:
    """Decode a preorder level sequence (root at level 0); ids follow preorder."""
    edges = []
    last_at = {}
    for i, lv in enumerate(levels):
        if i:
            edges.append((last_at[lv - 1], i))
        last_at[lv] = i
    return Tree(len(levels), edges)


def _split(layout: list[int]) -> tuple[list[int], list[int]]:
    # first principal subtree (relevelled to start at 0) and what remains
    m = len(layout)
    for i in range(2, len(layout)):
        if layout[i] == 1:
            m = i
            break
    left = [x - 1 for x in layout[1:m]]
    rest = [0] + layout[m:]
    return left, rest


def _is_free_canonical(layout: list[int]) -> bool:
    left, rest = _split(layout)
    lh, rh = max(left), max(rest)
    if rh != lh:
        return rh > lh
    if len(left) != len(rest):
        return len(left) < len(rest)
    return left <= rest


def _next_rooted(pred: list[int], p: int | None = None) -> list[int] | None:
    if p is None:
        p = len(pred) - 1
        while pred[p] == 1:
            p -= 1
    if p == 0:
        return None
    q = p - 1
    while pred[q] != pred[p] - 1:
        q -= 1
    out = list(pred)
    for i in range(p, len(out)):
        out[i] = out[i - p + q]
    return out


def _next_free(candidate: list[int]) -> list[int] | None:
    if _is_free_canonical(candidate):
        return candidate
    left, _ = _split(candidate)
    p = len(left)
    nxt = _next_rooted(candidate, p)
    if nxt is not None and candidate[p] > 2:
        new_left, _ = _split(nxt)
        h = max(new_left)
        tail = list(range(1, h + 2))
        nxt[-len(tail):] = tail
    return nxt


def enumerate_free_trees(n: int, cap: int = DEFAULT_CAP) -> Iterator[CanonicalTree]:
    """Yield one :class:`CanonicalTree` per isomorphism class on ``n`` vertices."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if n > cap:
        raise CapExceeded(f"n={n} exceeds the enumeration cap {cap}")
    if n <= 2:
        levels = list(range(n))
        yield CanonicalTree(tuple(levels), tree_from_levels(levels))
        return
    layout: list[int] | None = list(range(n // 2 + 1)) + list(range(1, (n + 1) // 2))
    while layout is not None:
        layout = _next_free(layout)
        if layout is not None:
            yield CanonicalTree(tuple(layout), tree_from_levels(layout))
            layout = _next_rooted(layout)


def _rooted_levels(t: Tree, root: int) -> list[int]:
    adj = t.adjacency

    def walk(v: int, parent: int, depth: int) -> list[int]:
        subs = sorted((walk(c, v, depth + 1) for c in adj[v] if c != parent), reverse=True)
        seq = [depth]
        for s in subs:
            seq.extend(s)
        return seq

    return walk(root, -1, 0)


def canonical_levels(t: Tree) -> tuple[int, ...]:
    """The level sequence :func:`enumerate_free_trees` emits for ``t``'s class."""
    if t.n <= 2:
        return tuple(range(t.n))
    found = {tuple(seq) for seq in (_rooted_levels(t, r) for r in range(t.n))
             if _is_free_canonical(seq)}
    # exactly one survivor per isomorphism class; max() keeps this total anyway
    return max(found)


def canonicalize(t: Tree) -> CanonicalTree:
    levels = canonical_levels(t)
    return CanonicalTree(levels, tree_from_levels(levels))


def prufer_decode(seq: Sequence[int], n: int | None = None) -> Tree:
    """Standard Prüfer decoding: repeatedly join the smallest leaf to the next entry."""
    n = len(seq) + 2 if n is None else n
    if n < 2 or len(seq) != n - 2:
        raise EntryOutOfRange(f"a Prüfer sequence for n={n} has length {max(n - 2, 0)}")
    degree = [1] * n
    for x in seq:
        if not (isinstance(x, int) and 0 <= x < n):
            raise EntryOutOfRange(f"entry {x!r} not in [0, {n})")
        degree[x] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
    return Tree(n, edges)
