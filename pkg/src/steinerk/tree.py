"""Immutable trees on dense vertex ids, Steiner subtrees and edge splits.

Vertices are the integers ``0 .. n-1``.  A :class:`Tree` validates itself on
construction, so every function downstream can assume a spanning tree.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .errors import MalformedInput, NotAnEdge, NotATree, VertexOutOfRange


@dataclass(frozen=True)
class VertexClass:
    leaves: frozenset[int]
    internals: frozenset[int]


@dataclass(frozen=True)
class EdgeSplit:
    """Component statistics of ``T - uv``.

    ``size_u`` is the order of the component containing ``u``, which is the
    number of vertices strictly closer to ``u`` than to ``v``.  The leaf and
    internal tallies classify vertices by their role in the whole tree.
    """

    edge: tuple[int, int]
    size_u: int
    size_v: int
    leaves_u: int
    leaves_v: int
    internals_u: int
    internals_v: int

    def side(self, x: int) -> tuple[int, int, int]:
        """(size, leaves, internals) of the component containing endpoint ``x``."""
        u, v = self.edge
        if x == u:
            return self.size_u, self.leaves_u, self.internals_u
        if x == v:
            return self.size_v, self.leaves_v, self.internals_v
        raise VertexOutOfRange(f"{x} is not an endpoint of {self.edge}")


@dataclass(frozen=True)
class Tree:
    n: int
    edges: tuple[tuple[int, int], ...]

    def __init__(self, n: int, edges: Iterable[Sequence[int]]):
        edges = tuple((int(u), int(v)) for u, v in edges)
        object.__setattr__(self, "n", int(n))
        object.__setattr__(self, "edges", edges)
        self._validate()

    def _validate(self) -> None:
        n = self.n
        if n < 1:
            raise NotATree(f"vertex count must be >= 1, got {n}")
        if len(self.edges) != n - 1:
            raise NotATree(f"expected {n - 1} edges for n={n}, got {len(self.edges)}")
        seen = set()
        for u, v in self.edges:
            if not (0 <= u < n and 0 <= v < n):
                raise NotATree(f"edge ({u}, {v}) has an endpoint outside [0, {n})")
            if u == v:
                raise NotATree(f"self-loop at {u}")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise NotATree(f"duplicate edge {key}")
            seen.add(key)
        # n-1 distinct edges + connected => acyclic
        order = self._bfs_order(0)
        if len(order) != n:
            raise NotATree("edge list is disconnected (and therefore has a cycle)")

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return tuple(tuple(sorted(a)) for a in adj)

    def _bfs_order(self, root: int) -> list[int]:
        adj = self.adjacency
        seen = [False] * self.n
        seen[root] = True
        order = [root]
        for x in order:
            for y in adj[x]:
                if not seen[y]:
                    seen[y] = True
                    order.append(y)
        return order

    def degree(self, v: int) -> int:
        self.check_vertex(v)
        return len(self.adjacency[v])

    def check_vertex(self, v: int) -> None:
        if not (isinstance(v, int) and 0 <= v < self.n):
            raise VertexOutOfRange(f"vertex {v!r} not in [0, {self.n})")

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.n and v in self.adjacency[u]

    @cached_property
    def vertex_class(self) -> VertexClass:
        # n = 1: the lone vertex counts as a leaf
        if self.n == 1:
            return VertexClass(frozenset({0}), frozenset())
        leaves = frozenset(v for v in range(self.n) if len(self.adjacency[v]) == 1)
        return VertexClass(leaves, frozenset(range(self.n)) - leaves)

    @property
    def leaves(self) -> frozenset[int]:
        return self.vertex_class.leaves

    @property
    def internals(self) -> frozenset[int]:
        return self.vertex_class.internals

    def is_leaf(self, v: int) -> bool:
        return v in self.vertex_class.leaves

    @cached_property
    def _rooted(self) -> tuple[list[int], list[int], list[int], list[int], list[int]]:
        """Parent, preorder, entry/exit times and subtree sizes for root 0."""
        n = self.n
        adj = self.adjacency
        parent = [-1] * n
        tin = [0] * n
        tout = [0] * n
        preorder = []
        stack = [(0, iter(adj[0]))]
        preorder.append(0)
        clock = 1
        while stack:
            x, it = stack[-1]
            for y in it:
                if y != parent[x]:
                    parent[y] = x
                    tin[y] = clock
                    clock += 1
                    preorder.append(y)
                    stack.append((y, iter(adj[y])))
                    break
            else:
                stack.pop()
                tout[x] = clock
        size = [1] * n
        for x in reversed(preorder):
            if parent[x] >= 0:
                size[parent[x]] += size[x]
        return parent, preorder, tin, tout, size

    def in_subtree(self, v: int, c: int) -> bool:
        """Whether ``v`` lies in the subtree of ``c`` when rooted at vertex 0."""
        _, _, tin, tout, _ = self._rooted
        return tin[c] <= tin[v] < tout[c]

    def __repr__(self) -> str:
        return f"Tree(n={self.n}, edges={list(self.edges)})"


def parse_tree(text: str) -> Tree:
    """Parse the edge-list text format.

    ``#`` lines are comments.  The first remaining line holds ``n``, followed
    by ``n - 1`` lines of two whitespace-separated vertex ids.
    """
    rows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        rows.append((lineno, line.split()))
    if not rows:
        raise MalformedInput("empty input: expected a vertex count")
    lineno, head = rows[0]
    if len(head) != 1:
        raise MalformedInput(f"line {lineno}: expected a single vertex count")
    try:
        n = int(head[0])
    except ValueError:
        raise MalformedInput(f"line {lineno}: bad vertex count {head[0]!r}") from None
    edges = []
    for lineno, parts in rows[1:]:
        if len(parts) != 2:
            raise MalformedInput(f"line {lineno}: expected 'u v', got {' '.join(parts)!r}")
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise MalformedInput(f"line {lineno}: non-integer vertex id") from None
    return Tree(n, edges)


def format_tree(t: Tree) -> str:
    lines = [str(t.n)] + [f"{u} {v}" for u, v in t.edges]
    return "\n".join(lines) + "\n"


def path_tree(n: int) -> Tree:
    return Tree(n, [(i, i + 1) for i in range(n - 1)])


def star_tree(n: int) -> Tree:
    """Star with center 0."""
    return Tree(n, [(0, i) for i in range(1, n)])


def steiner_distance(t: Tree, s: Iterable[int]) -> int:
    """Edge count of the minimal subtree spanning ``s``.

    Repeatedly strips leaves that are not terminals; what survives is the
    Steiner tree.
    """
    terminals = set(s)
    if not terminals:
        raise ValueError("steiner_distance needs a nonempty vertex set")
    for v in terminals:
        t.check_vertex(v)
    if len(terminals) == 1:
        return 0
    adj = t.adjacency
    deg = [len(a) for a in adj]
    removed = [False] * t.n
    queue = deque(v for v in range(t.n) if deg[v] == 1 and v not in terminals)
    alive = t.n
    while queue:
        x = queue.popleft()
        removed[x] = True
        alive -= 1
        for y in adj[x]:
            if not removed[y]:
                deg[y] -= 1
                if deg[y] == 1 and y not in terminals:
                    queue.append(y)
    return alive - 1


def distances_from(t: Tree, source: int) -> list[int]:
    t.check_vertex(source)
    dist = [-1] * t.n
    dist[source] = 0
    queue = deque([source])
    adj = t.adjacency
    while queue:
        x = queue.popleft()
        for y in adj[x]:
            if dist[y] < 0:
                dist[y] = dist[x] + 1
                queue.append(y)
    return dist


def pairwise_distance(t: Tree, u: int, v: int) -> int:
    t.check_vertex(v)
    return distances_from(t, u)[v]


def edge_splits(t: Tree) -> list[EdgeSplit]:
    """One :class:`EdgeSplit` per edge, in the tree's edge order.  O(n)."""
    parent, preorder, _, _, size = t._rooted
    leaves = t.leaves
    leaf_sub = [0] * t.n
    for x in reversed(preorder):
        if x in leaves:
            leaf_sub[x] += 1
        if parent[x] >= 0:
            leaf_sub[parent[x]] += leaf_sub[x]
    n, total_leaves = t.n, len(leaves)
    out = []
    for u, v in t.edges:
        if parent[v] == u:
            sv, lv = size[v], leaf_sub[v]
            su, lu = n - sv, total_leaves - lv
        else:
            su, lu = size[u], leaf_sub[u]
            sv, lv = n - su, total_leaves - lu
        out.append(EdgeSplit((u, v), su, sv, lu, lv, su - lu, sv - lv))
    return out


def split_across(t: Tree, x: int, y: int) -> EdgeSplit:
    """The split of edge ``xy`` oriented so that ``edge == (x, y)``."""
    t.check_vertex(x)
    t.check_vertex(y)
    if not t.has_edge(x, y):
        raise NotAnEdge(f"({x}, {y}) is not an edge")
    parent, _, _, _, size = t._rooted
    child = y if parent[y] == x else x
    inside = [w for w in range(t.n) if t.in_subtree(w, child)]
    leaves_in = sum(1 for w in inside if w in t.leaves)
    total_leaves = len(t.leaves)
    s_child, l_child = size[child], leaves_in
    s_other, l_other = t.n - s_child, total_leaves - l_child
    if child == x:
        sx, lx, sy, ly = s_child, l_child, s_other, l_other
    else:
        sx, lx, sy, ly = s_other, l_other, s_child, l_child
    return EdgeSplit((x, y), sx, sy, lx, ly, sx - lx, sy - ly)
