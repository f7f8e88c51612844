"""Comets, closed-form Steiner distances and the extremal ratio bounds.

All ratios are :class:`fractions.Fraction` (always in lowest terms), so bound
attainment can be checked with equality rather than a tolerance.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import KOutOfRange, ParameterOutOfRange
from .indices import binomial as C
from .tree import Tree

Ratio = Fraction


@dataclass(frozen=True)
class CometSpec:
    """An r-comet: path ``b=0, 1, ..., d=r-1`` with ``n - r`` leaves hung on ``d``.

    ``a`` is the first pendant leaf (``r``); ``c`` is ``b``'s neighbour and is
    ``None`` when ``r == 1``.
    """

    n: int
    r: int
    tree: Tree
    a: int
    b: int
    c: int | None
    d: int


@dataclass(frozen=True)
class PendantPath:
    """Path on ``a + b + 1`` vertices plus one leaf ``w`` hung on ``v``.

    ``v`` has ``a`` path vertices on one side and ``b`` on the other.
    """

    a: int
    b: int

    @property
    def n(self) -> int:
        return self.a + self.b + 2

    @property
    def v(self) -> int:
        return self.a

    @property
    def w(self) -> int:
        return self.a + self.b + 1

    @property
    def tree(self) -> Tree:
        m = self.a + self.b + 1
        return Tree(m + 1, [(i, i + 1) for i in range(m - 1)] + [(self.a, m)])


@dataclass(frozen=True)
class RatioBound:
    value: Fraction
    witness: Union[int, str]
    extremal: Union[CometSpec, PendantPath]


def comet(n: int, r: int) -> CometSpec:
    if n < 2 or not 1 <= r <= n - 1:
        raise ParameterOutOfRange(f"comet needs n >= 2 and 1 <= r <= n-1, got n={n}, r={r}")
    edges = [(i, i + 1) for i in range(r - 1)]
    edges += [(r - 1, j) for j in range(r, n)]
    return CometSpec(n, r, Tree(n, edges), a=r, b=0, c=1 if r >= 2 else None, d=r - 1)


def _check_k(n: int, k: int) -> None:
    if not 2 <= k <= n:
        raise KOutOfRange(f"k={k} outside [2, {n}]")


def path_vertex_distance_closed(a: int, b: int, k: int) -> int:
    """d_k of a vertex with ``a`` and ``b`` vertices on either side, on a path of order a+b+1."""
    if a < 0 or b < 0 or not 2 <= k <= a + b + 1:
        raise ParameterOutOfRange(f"need a, b >= 0 and 2 <= k <= a+b+1, got {a}, {b}, {k}")
    return ((k - 1) * C(a + b + 1, k) - (k - 1) * C(b + 1, k) - (k - 1) * C(a + 1, k)
            - C(a + b, k) + b * C(b, k - 1) + a * C(a, k - 1))


def pendant_path_distance_closed(a: int, b: int, k: int) -> int:
    """d_k of ``v`` in :class:`PendantPath` ``(a, b)``; written F(a, b) in the bounds below."""
    if a < 0 or b < 0 or not 2 <= k <= a + b + 2:
        raise ParameterOutOfRange(f"need a, b >= 0 and 2 <= k <= a+b+2, got {a}, {b}, {k}")
    return ((k - 2) * C(a + b + 2, k) - (k - 2 - b) * C(b + 1, k - 1)
            - (k - 2 - a) * C(a + 1, k - 1) - (k - 1) * C(b + 1, k)
            - (k - 1) * C(a + 1, k) + C(a + b, k - 2))


def comet_leaf_denominator(n: int, r: int, k: int) -> int:
    """d_k of a pendant leaf ``a`` on the r-comet."""
    if not 1 <= r <= n - 1:
        raise ParameterOutOfRange(f"r={r} outside [1, {n - 1}]")
    _check_k(n, k)
    return C(n - r, k) + (n - r - 1) * C(n - 2, k - 2) + r * C(n - 1, k - 1) - C(n - 1, k)


def comet_internal_denominator(n: int, r: int, k: int) -> int:
    """d_k of the attachment vertex ``d`` on the (r+2)-comet."""
    if not 1 <= r <= n - 3:
        raise ParameterOutOfRange(f"r={r} outside [1, {n - 3}]")
    _check_k(n, k)
    return ((n - r - 2) * C(n - 2, k - 2) + (r + 1) * C(n - 1, k - 1)
            + C(n - r - 2, k) - C(n - 1, k))


def leaf_pair_ratio(n: int, r: int, k: int) -> Fraction:
    """d_k(b) / d_k(a) on the r-comet, from the closed form."""
    num = C(n - 2, k) - C(n - r, k) - C(r - 1, k)
    return 1 + Fraction(num, comet_leaf_denominator(n, r, k))


def internal_pair_ratio(n: int, r: int, k: int) -> Fraction:
    """d_k(c) / d_k(d) on the (r+2)-comet, from the closed form."""
    num = C(n - 2, k) - C(n - r - 2, k) - C(r + 1, k)
    return 1 + Fraction(num, comet_internal_denominator(n, r, k))


def leaf_pair_ratio_bound(n: int, k: int) -> RatioBound:
    """Largest d_k(v)/d_k(w) over leaf pairs of order-n trees.

    Every r in 1..n-1 is evaluated.  The witness is the smallest maximising
    r >= 2: r = 2 always gives exactly 1 and r = 1 never exceeds it, while the
    1-comet has no second leaf to play ``b``.
    """
    if n < 3:
        raise ParameterOutOfRange(f"leaf pair bound needs n >= 3, got {n}")
    _check_k(n, k)
    values = {r: leaf_pair_ratio(n, r, k) for r in range(1, n)}
    best = max(values.values())
    r = min(r for r, x in values.items() if x == best and r >= 2)
    return RatioBound(best, r, comet(n, r))


def internal_pair_ratio_bound(n: int, k: int) -> RatioBound:
    """Largest d_k(v)/d_k(w) over internal pairs; extremal tree is the (r+2)-comet."""
    if n < 4:
        raise ParameterOutOfRange(f"internal pair bound needs n >= 4, got {n}")
    _check_k(n, k)
    values = {r: internal_pair_ratio(n, r, k) for r in range(1, n - 2)}
    best = max(values.values())
    r = min(r for r, x in values.items() if x == best)
    return RatioBound(best, r, comet(n, r + 2))


def leaf_centroid_lower_bound(n: int, k: int) -> RatioBound:
    """Smallest d_k(w)/d_k(v) with ``w`` a leaf and ``v`` a Steiner k-centroid.

    The witness is the regime tag: ``"k=n"``, ``"k=n-1"``, ``"small-even"``,
    ``"small-odd"`` or ``"large"``.
    """
    if n < 3:
        raise ParameterOutOfRange(f"leaf-centroid bound needs n >= 3, got {n}")
    _check_k(n, k)
    top = C(n - 2, k - 1)
    if k == n:
        return RatioBound(1 + Fraction(top, n - 1), "k=n", PendantPath(n - 2, 0))
    if k == n - 1:
        return RatioBound(1 + Fraction(top, 2 * (n - 2) + (n - 3) * (n - 1)), "k=n-1",
                          PendantPath(n - 2, 0))
    if 2 * k <= n + 2:
        if n % 2 == 0:
            shape, tag = PendantPath(n // 2, n // 2 - 2), "small-even"
        else:
            shape, tag = PendantPath((n - 1) // 2, (n - 3) // 2), "small-odd"
    else:
        shape, tag = PendantPath(k - 1, n - k - 1), "large"
    return RatioBound(1 + Fraction(top, pendant_path_distance_closed(shape.a, shape.b, k)),
                      tag, shape)


def global_local_bounds(n: int, k: int) -> tuple[Fraction, Fraction]:
    """(n/k, (n-1)/(k-1)): range of SW_k(T) / d_k(v) for a Steiner k-centroid v."""
    _check_k(n, k)
    return Fraction(n, k), Fraction(n - 1, k - 1)
