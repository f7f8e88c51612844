"""Exhaustive checking of the Steiner-distance theorems over all small free trees.

Every check runs over each non-isomorphic tree of order ``2..n_max`` and each
admissible ``k``.  Per-tree checks report one case per (tree, k); ratio checks
aggregate over all trees of one order and report one case per (n, k).
"""
from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Sequence, Union

from . import extremal
from .enumeration import DEFAULT_CAP, CanonicalTree, enumerate_free_trees
from .errors import CapExceeded, UnknownCheck
from .indices import IndexVector, all_vertex_index, across_edge_delta, binomial, steiner_wiener
from .medians import (
    MedianReport,
    gap_internal_all_applies,
    gap_internal_all_bound_twice,
    gap_leaf_all_applies,
    gap_leaf_all_bound_twice,
    gap_leaf_internal_bound,
    median_report,
    satisfactory_given,
)
from .oracle import IndexMode, brute_steiner_wiener, brute_vertex_index
from .tree import split_across

KPolicy = Union[str, Sequence[int]]


def _fmt(x) -> str:
    if isinstance(x, Fraction):
        return f"{x.numerator}/{x.denominator}"
    return str(x)


def _half(x: int):
    return x // 2 if x % 2 == 0 else Fraction(x, 2)


@dataclass
class Violation:
    tree: tuple[int, ...]
    k: int
    params: dict
    observed: str
    bound: str


@dataclass
class Witness:
    n: int
    k: int
    tree: tuple[int, ...]
    params: dict
    value: str


@dataclass
class CheckResult:
    name: str
    trees_examined: int = 0
    cases_checked: int = 0
    cases_skipped: int = 0
    violations: list[Violation] = field(default_factory=list)
    witnesses: list[Witness] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_dict(self, include_timing: bool = False) -> dict:
        d = {
            "name": self.name,
            "passed": self.passed,
            "trees_examined": self.trees_examined,
            "cases_checked": self.cases_checked,
            "cases_skipped": self.cases_skipped,
            "violations": [asdict(v) for v in self.violations],
            "witnesses": [asdict(w) for w in self.witnesses],
        }
        if include_timing:
            d["elapsed"] = round(self.elapsed, 6)
        return d

    def _merge(self, other: "CheckResult") -> None:
        self.trees_examined += other.trees_examined
        self.cases_checked += other.cases_checked
        self.cases_skipped += other.cases_skipped
        self.violations.extend(other.violations)
        self.witnesses.extend(other.witnesses)
        self.elapsed += other.elapsed


@dataclass
class VerificationReport:
    n_max: int
    k_policy: KPolicy
    checks: list[CheckResult]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def __getitem__(self, name: str) -> CheckResult:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def to_dict(self, include_timing: bool = False) -> dict:
        return {
            "n_max": self.n_max,
            "k_policy": self.k_policy if isinstance(self.k_policy, str) else list(self.k_policy),
            "passed": self.passed,
            "checks": [c.to_dict(include_timing) for c in self.checks],
        }

    def to_json(self, include_timing: bool = False) -> str:
        """Stable serialisation; identical arguments give identical text unless timing is included."""
        return json.dumps(self.to_dict(include_timing), indent=2, sort_keys=True) + "\n"


class _Ctx:
    """Per-tree cache of index vectors and medians."""

    def __init__(self, ct: CanonicalTree):
        self.ct = ct
        self.t = ct.tree
        self.n = ct.tree.n
        self._vec: dict[tuple[int, IndexMode], IndexVector] = {}
        self._rep: dict[int, MedianReport] = {}
        self._sw: dict[int, int] = {}

    def vec(self, k: int, mode: IndexMode = IndexMode.ALL) -> tuple[int, ...]:
        key = (k, mode)
        if key not in self._vec:
            self._vec[key] = all_vertex_index(self.t, k, mode)
        return self._vec[key].values

    def centroids(self, k: int, mode: IndexMode = IndexMode.ALL) -> frozenset[int]:
        self.vec(k, mode)
        return self._vec[(k, mode)].argmin()

    def report(self, k: int) -> MedianReport:
        if k not in self._rep:
            self._rep[k] = median_report(self.t, k)
        return self._rep[k]

    def sw(self, k: int) -> int:
        if k not in self._sw:
            self._sw[k] = steiner_wiener(self.t, k)
        return self._sw[k]

    def triples(self):
        adj = self.t.adjacency
        for y in range(self.n):
            for x in adj[y]:
                for z in adj[y]:
                    if x < z:
                        yield x, y, z


# ----------------------------------------------------------------------------
# per-tree checks: (ctx, k, result) -> None
# ----------------------------------------------------------------------------

def _violate(res: CheckResult, ctx: _Ctx, k: int, params: dict, observed, bound) -> None:
    res.violations.append(Violation(ctx.ct.level_sequence, k, params, _fmt(observed), _fmt(bound)))


def _check_oracle(ctx: _Ctx, k: int, res: CheckResult) -> None:
    t = ctx.t
    for mode in IndexMode:
        fast = ctx.vec(k, mode)
        for v in range(ctx.n):
            slow = brute_vertex_index(t, v, k, mode)
            if fast[v] != slow:
                _violate(res, ctx, k, {"mode": mode.value, "v": v}, fast[v], slow)
    slow = brute_steiner_wiener(t, k)
    if ctx.sw(k) != slow:
        _violate(res, ctx, k, {"index": "steiner_wiener"}, ctx.sw(k), slow)
    res.cases_checked += 1


def _check_handshake(ctx: _Ctx, k: int, res: CheckResult) -> None:
    lhs, rhs = k * ctx.sw(k), sum(ctx.vec(k))
    if lhs != rhs:
        _violate(res, ctx, k, {}, lhs, rhs)
    res.cases_checked += 1


def _check_lower_bound(ctx: _Ctx, k: int, res: CheckResult) -> None:
    floor = (k - 1) * binomial(ctx.n - 1, k - 1)
    for v, x in enumerate(ctx.vec(k)):
        if x < floor:
            _violate(res, ctx, k, {"v": v}, x, floor)
    res.cases_checked += 1


def _check_across_edge(ctx: _Ctx, k: int, res: CheckResult) -> None:
    d = ctx.vec(k)
    for x, y in ctx.t.edges:
        delta = across_edge_delta(ctx.t, x, y, k)
        if delta != d[x] - d[y]:
            _violate(res, ctx, k, {"x": x, "y": y}, delta, d[x] - d[y])
    res.cases_checked += 1


def _concavity(mode: IndexMode) -> Callable[[_Ctx, int, CheckResult], None]:
    def check(ctx: _Ctx, k: int, res: CheckResult) -> None:
        if ctx.n < 3:
            res.cases_skipped += 1
            return
        d = ctx.vec(k, mode)
        for x, y, z in ctx.triples():
            lhs, rhs = 2 * d[y], d[x] + d[z]
            if lhs > rhs:
                _violate(res, ctx, k, {"x": x, "y": y, "z": z}, lhs, rhs)
                continue
            if mode is IndexMode.ALL:
                fx = split_across(ctx.t, x, y).size_u - 1
                fz = split_across(ctx.t, z, y).size_u - 1
                fy = ctx.n - fx - fz - 3
                predicted = fy + fz < k - 2 and fx + fy < k - 2
                if (lhs == rhs) != predicted:
                    _violate(res, ctx, k, {"x": x, "y": y, "z": z, "equality": "mismatch",
                                           "F": [fx, fy, fz]}, lhs, rhs)
                elif lhs == rhs and not res.witnesses:
                    res.witnesses.append(Witness(ctx.n, k, ctx.ct.level_sequence,
                                                 {"x": x, "y": y, "z": z, "F": [fx, fy, fz]},
                                                 f"{lhs}={rhs}"))
        res.cases_checked += 1
    return check


def _median_criterion(mode: IndexMode) -> Callable[[_Ctx, int, CheckResult], None]:
    def check(ctx: _Ctx, k: int, res: CheckResult) -> None:
        cents = ctx.centroids(k, mode)
        for v in range(ctx.n):
            pred = satisfactory_given(ctx.t, v, k, mode, cents)
            if pred != (v in cents):
                _violate(res, ctx, k, {"v": v, "mode": mode.value}, pred, v in cents)
        res.cases_checked += 1
    return check


def _check_gap_li(ctx: _Ctx, k: int, res: CheckResult) -> None:
    g = ctx.report(k).gap_leaf_internal
    rhs = gap_leaf_internal_bound(ctx.n, k, g)
    if g > rhs:
        _violate(res, ctx, k, {"leaf_median": sorted(ctx.report(k).median_leaf),
                               "internal_median": sorted(ctx.report(k).median_internal)}, g, rhs)
    res.cases_checked += 1


def _check_gap_la(ctx: _Ctx, k: int, res: CheckResult) -> None:
    if not gap_leaf_all_applies(ctx.n, k):
        res.cases_skipped += 1
        return
    g = ctx.report(k).gap_leaf_all
    rhs2 = gap_leaf_all_bound_twice(ctx.n, k)
    if 2 * g > rhs2:
        _violate(res, ctx, k, {"leaf_median": sorted(ctx.report(k).median_leaf),
                               "median": sorted(ctx.report(k).median_all)}, g, _half(rhs2))
    res.cases_checked += 1


def _check_gap_ia(ctx: _Ctx, k: int, res: CheckResult) -> None:
    if not gap_internal_all_applies(ctx.n, k):
        res.cases_skipped += 1
        return
    g = ctx.report(k).gap_internal_all
    rhs2 = gap_internal_all_bound_twice(ctx.n, k, g)
    if 2 * g > rhs2:
        _violate(res, ctx, k, {"internal_median": sorted(ctx.report(k).median_internal),
                               "median": sorted(ctx.report(k).median_all)}, g, _half(rhs2))
    res.cases_checked += 1


def _check_global_local(ctx: _Ctx, k: int, res: CheckResult) -> None:
    lo, hi = extremal.global_local_bounds(ctx.n, k)
    d, sw = ctx.vec(k), ctx.sw(k)
    is_star = max(len(a) for a in ctx.t.adjacency) == ctx.n - 1
    for v in sorted(ctx.centroids(k)):
        ratio = Fraction(sw, d[v])
        if not lo <= ratio <= hi:
            _violate(res, ctx, k, {"v": v}, ratio, f"[{_fmt(lo)}, {_fmt(hi)}]")
        if k <= ctx.n - 1 and (ratio == hi) != is_star:
            _violate(res, ctx, k, {"v": v, "star": is_star, "attains_upper": ratio == hi},
                     ratio, hi)
        if k == ctx.n and ratio != 1:
            _violate(res, ctx, k, {"v": v}, ratio, 1)
        if is_star and k <= ctx.n - 1 and ratio == hi:
            res.witnesses.append(Witness(ctx.n, k, ctx.ct.level_sequence, {"v": v}, _fmt(ratio)))
    res.cases_checked += 1


# ----------------------------------------------------------------------------
# per-order ratio checks: (ctxs, n, ks, result) -> None
# ----------------------------------------------------------------------------

def _extreme_pair(ctxs: list[_Ctx], k: int, pool_of, maximize: bool, second_pool_of=None):
    best = None
    for ctx in ctxs:
        d = ctx.vec(k)
        first = sorted(pool_of(ctx, k))
        second = sorted(second_pool_of(ctx, k)) if second_pool_of else first
        for w in first:
            for v in second:
                if v == w:
                    continue
                r = Fraction(d[v], d[w]) if second_pool_of is None else Fraction(d[w], d[v])
                if best is None or (r > best[0] if maximize else r < best[0]):
                    best = (r, ctx, w, v)
    return best


def _leaves(ctx: _Ctx, k: int):
    return ctx.t.leaves


def _internals(ctx: _Ctx, k: int):
    return ctx.t.internals


def _comet_ratio(cm: extremal.CometSpec, k: int, num_vertex: int, den_vertex: int) -> Fraction:
    d = all_vertex_index(cm.tree, k).values
    return Fraction(d[num_vertex], d[den_vertex])


def _check_leaf_pair(ctxs: list[_Ctx], n: int, ks: list[int], res: CheckResult) -> None:
    for k in ks:
        if n < 3:
            res.cases_skipped += 1
            continue
        bound = extremal.leaf_pair_ratio_bound(n, k)
        best = _extreme_pair(ctxs, k, _leaves, maximize=True)
        _settle_pair(res, n, k, bound, best, "w", "v")
        cm = bound.extremal
        stated = _comet_ratio(cm, k, cm.b, cm.a)
        if stated != bound.value:
            res.violations.append(Violation((), k, {"n": n, "stated_graph": f"comet({n},{cm.r})"},
                                            _fmt(stated), _fmt(bound.value)))
        res.cases_checked += 1


def _check_internal_pair(ctxs: list[_Ctx], n: int, ks: list[int], res: CheckResult) -> None:
    for k in ks:
        if n < 4:
            res.cases_skipped += 1
            continue
        bound = extremal.internal_pair_ratio_bound(n, k)
        best = _extreme_pair(ctxs, k, _internals, maximize=True)
        _settle_pair(res, n, k, bound, best, "w", "v")
        cm = bound.extremal
        stated = _comet_ratio(cm, k, cm.c, cm.d)
        if stated != bound.value:
            res.violations.append(Violation((), k, {"n": n, "stated_graph": f"comet({n},{cm.r})"},
                                            _fmt(stated), _fmt(bound.value)))
        res.cases_checked += 1


def _check_leaf_centroid(ctxs: list[_Ctx], n: int, ks: list[int], res: CheckResult) -> None:
    for k in ks:
        if n < 3:
            res.cases_skipped += 1
            continue
        bound = extremal.leaf_centroid_lower_bound(n, k)
        best = _extreme_pair(ctxs, k, _leaves, maximize=False,
                             second_pool_of=lambda c, kk: c.centroids(kk))
        _settle_pair(res, n, k, bound, best, "w", "v")
        shape = bound.extremal
        d = all_vertex_index(shape.tree, k).values
        stated = Fraction(d[shape.w], d[shape.v])
        if d[shape.v] != min(d) or stated != bound.value:
            res.violations.append(Violation((), k, {"n": n, "stated_graph": asdict(shape),
                                                    "v_is_centroid": d[shape.v] == min(d)},
                                            _fmt(stated), _fmt(bound.value)))
        res.cases_checked += 1


def _settle_pair(res: CheckResult, n: int, k: int, bound: extremal.RatioBound, best,
                 first: str, second: str) -> None:
    value, ctx, a, b = best
    params = {first: a, second: b, "bound_witness": bound.witness}
    if value != bound.value:
        res.violations.append(Violation(ctx.ct.level_sequence, k, {"n": n, **params},
                                        _fmt(value), _fmt(bound.value)))
    res.witnesses.append(Witness(n, k, ctx.ct.level_sequence, params, _fmt(value)))


PER_TREE: dict[str, Callable] = {
    "oracle_equivalence": _check_oracle,
    "handshake": _check_handshake,
    "vertex_lower_bound": _check_lower_bound,
    "across_edge": _check_across_edge,
    "concavity_all": _concavity(IndexMode.ALL),
    "concavity_leaf": _concavity(IndexMode.LEAF),
    "concavity_internal": _concavity(IndexMode.INTERNAL),
    "median_criterion_all": _median_criterion(IndexMode.ALL),
    "median_criterion_leaf": _median_criterion(IndexMode.LEAF),
    "median_criterion_internal": _median_criterion(IndexMode.INTERNAL),
    "gap_leaf_internal": _check_gap_li,
    "gap_leaf_all": _check_gap_la,
    "gap_internal_all": _check_gap_ia,
    "global_local": _check_global_local,
}

PER_ORDER: dict[str, Callable] = {
    "leaf_pair_ratio": _check_leaf_pair,
    "internal_pair_ratio": _check_internal_pair,
    "leaf_centroid_ratio": _check_leaf_centroid,
}

CHECKS: tuple[str, ...] = tuple(PER_TREE) + tuple(PER_ORDER)


def resolve_checks(checks: Union[str, Iterable[str]]) -> list[str]:
    if isinstance(checks, str):
        checks = CHECKS if checks == "all" else [c for c in checks.split(",") if c]
    names = list(checks)
    if not names:
        raise UnknownCheck("at least one check must be selected")
    for name in names:
        if name not in CHECKS:
            raise UnknownCheck(f"unknown check {name!r}; choose from {', '.join(CHECKS)}")
    # canonical order, duplicates dropped
    return [c for c in CHECKS if c in set(names)]


def _ks_for(n: int, k_policy: KPolicy) -> list[int]:
    if k_policy == "all":
        return list(range(2, n + 1))
    return sorted({k for k in k_policy if 2 <= k <= n})


def _run_order(n: int, names: list[str], k_policy: KPolicy) -> dict[str, CheckResult]:
    ctxs = [_Ctx(ct) for ct in enumerate_free_trees(n)]
    ks = _ks_for(n, k_policy)
    out = {}
    for name in names:
        res = CheckResult(name)
        start = time.perf_counter()
        res.trees_examined = len(ctxs)
        if name in PER_ORDER:
            if ks:
                PER_ORDER[name](ctxs, n, ks, res)
        else:
            fn = PER_TREE[name]
            for ctx in ctxs:
                for k in ks:
                    fn(ctx, k, res)
        res.elapsed = time.perf_counter() - start
        out[name] = res
    return out


def verify(n_max: int, checks: Union[str, Iterable[str]] = "all", k_policy: KPolicy = "all",
           cap: int = DEFAULT_CAP, workers: int = 1) -> VerificationReport:
    """Run the selected checks over every free tree of order 2..``n_max``.

    ``workers > 1`` farms orders out to processes; results are merged in order
    so the report does not depend on scheduling.
    """
    if n_max > cap:
        raise CapExceeded(f"n_max={n_max} exceeds the enumeration cap {cap}")
    names = resolve_checks(checks)
    if not isinstance(k_policy, str):
        k_policy = sorted(set(int(k) for k in k_policy))
    elif k_policy != "all":
        raise ValueError(f"k_policy must be 'all' or a list of ints, got {k_policy!r}")
    orders = list(range(2, n_max + 1))
    if workers > 1 and len(orders) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_run_order, orders, [names] * len(orders),
                                  [k_policy] * len(orders)))
    else:
        parts = [_run_order(n, names, k_policy) for n in orders]
    merged = [CheckResult(name) for name in names]
    for part in parts:
        for res in merged:
            res._merge(part[res.name])
    return VerificationReport(n_max, k_policy, merged)
