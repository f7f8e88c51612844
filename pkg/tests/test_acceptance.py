"""Acceptance criteria, each checked exhaustively with exact arithmetic.

Every test prints one ``CRITERION <n> PASS|FAIL`` line.  Values come from the
brute-force oracle wherever the criterion allows it, so the fast formulas are
never checked against themselves.
"""
from __future__ import annotations

import json
from fractions import Fraction
from functools import lru_cache

import pytest

from oracles import closer_count, prufer_census
from steinerk import (
    IndexMode,
    PendantPath,
    all_vertex_index,
    brute_steiner_wiener,
    brute_vertex_index,
    check_gap_bounds,
    comet,
    comet_internal_denominator,
    comet_leaf_denominator,
    enumerate_free_trees,
    format_tree,
    global_local_bounds,
    internal_pair_ratio_bound,
    leaf_centroid_lower_bound,
    leaf_pair_ratio_bound,
    path_tree,
    path_vertex_distance_closed,
    pendant_path_distance_closed,
    satisfactory,
    star_tree,
    steiner_wiener,
)
from steinerk.cli import run

N_MAX = 9


def announce(capsys, num: int, title: str, ok: bool, detail: str = "") -> None:
    with capsys.disabled():
        print(f"\nCRITERION {num:>2} {'PASS' if ok else 'FAIL'}: {title}"
              + (f" ({detail})" if detail else ""))
    assert ok, detail


@lru_cache(maxsize=None)
def trees(n: int):
    return tuple(ct.tree for ct in enumerate_free_trees(n))


def family(lo: int = 2, hi: int = N_MAX):
    for n in range(lo, hi + 1):
        yield from trees(n)


@lru_cache(maxsize=None)
def brute(t, k: int, mode: IndexMode = IndexMode.ALL) -> tuple[int, ...]:
    return tuple(brute_vertex_index(t, v, k, mode) for v in range(t.n))


def argmin(vals) -> set[int]:
    m = min(vals)
    return {i for i, x in enumerate(vals) if x == m}


def test_criterion_01_oracle_equivalence(capsys):
    bad, cases = [], 0
    for t in family():
        for k in range(2, t.n + 1):
            for mode in IndexMode:
                cases += 1
                if all_vertex_index(t, k, mode).values != brute(t, k, mode):
                    bad.append((t.edges, k, mode.value))
            if steiner_wiener(t, k) != brute_steiner_wiener(t, k):
                bad.append((t.edges, k, "wiener"))
    n_trees = sum(1 for _ in family())
    announce(capsys, 1, "fast indices equal the brute oracle", not bad,
             f"{n_trees} trees, {cases} (tree, k, mode) cases, {len(bad)} mismatches")


def test_criterion_02_handshake(capsys):
    bad = [(t.edges, k) for t in family() for k in range(2, t.n + 1)
           if k * brute_steiner_wiener(t, k) != sum(brute(t, k))]
    announce(capsys, 2, "k * SW_k equals the sum of d_k", not bad, f"{len(bad)} mismatches")


def test_criterion_03_concavity(capsys):
    violations, eq_mismatch, triples = 0, 0, 0
    for t in family(3):
        n = t.n
        for k in range(2, n + 1):
            for mode in IndexMode:
                d = brute(t, k, mode)
                for y in range(n):
                    nb = t.adjacency[y]
                    for i, x in enumerate(nb):
                        for z in nb[i + 1:]:
                            triples += 1
                            if 2 * d[y] > d[x] + d[z]:
                                violations += 1
                            if mode is IndexMode.ALL:
                                fx = closer_count(n, t.edges, x, y) - 1
                                fz = closer_count(n, t.edges, z, y) - 1
                                fy = n - 3 - fx - fz
                                predicted = fy + fz < k - 2 and fx + fy < k - 2
                                if (2 * d[y] == d[x] + d[z]) != predicted:
                                    eq_mismatch += 1
    announce(capsys, 3, "concavity in all modes with the equality condition",
             violations == 0 and eq_mismatch == 0,
             f"{triples} triples, {violations} violations, {eq_mismatch} equality mismatches")


def test_criterion_04_median_criterion(capsys):
    bad, cases = 0, 0
    for t in family():
        for k in range(2, t.n + 1):
            for mode in IndexMode:
                cent = argmin(brute(t, k, mode))
                for v in range(t.n):
                    cases += 1
                    bad += satisfactory(t, v, k, mode) != (v in cent)
    announce(capsys, 4, "satisfactory iff argmin", bad == 0, f"{cases} cases, {bad} disagreements")


def test_criterion_05_gap_bounds(capsys):
    failures: dict[str, list] = {"leaf_internal": [], "leaf_all": [], "internal_all": []}
    cases = 0
    for t in family(2, 10):
        for k in range(2, t.n + 1):
            cases += 1
            res = check_gap_bounds(t, k)
            for name, ok in res._asdict().items():
                if not ok:
                    failures[name].append((t.n, k, t.edges))
    first = {name: f[0] for name, f in failures.items() if f}
    detail = (f"{cases} (tree, k) cases; failures " +
              ", ".join(f"{name}={len(f)}" for name, f in failures.items()) +
              (f"; first counterexamples {first}" if first else ""))
    announce(capsys, 5, "median gap bounds hold for n <= 10",
             not any(failures.values()), detail)


def _extreme(n, k, pick, better):
    best = None
    for t in trees(n):
        d = brute(t, k)
        for num, den in pick(t, d):
            if num != den:
                r = Fraction(d[num], d[den])
                if best is None or better(r, best):
                    best = r
    return best


def _pairs(pool):
    return lambda t, d: [(a, b) for a in pool(t) for b in pool(t)]


def test_criterion_06_pair_ratio_attainment(capsys):
    bad = []
    for n in range(4, N_MAX + 1):
        for k in range(2, n + 1):
            top = _extreme(n, k, _pairs(lambda t: sorted(t.leaves)), lambda a, b: a > b)
            lb = leaf_pair_ratio_bound(n, k)
            c = lb.extremal
            on_comet = Fraction(brute(c.tree, k)[c.b], brute(c.tree, k)[c.a])
            if not top == lb.value == on_comet:
                bad.append(("leaf", n, k, top, lb.value, on_comet))
            top = _extreme(n, k, _pairs(lambda t: sorted(t.internals)), lambda a, b: a > b)
            ib = internal_pair_ratio_bound(n, k)
            c = ib.extremal
            on_comet = Fraction(brute(c.tree, k)[c.c], brute(c.tree, k)[c.d])
            if not top == ib.value == on_comet:
                bad.append(("internal", n, k, top, ib.value, on_comet))
    lb, ib = leaf_pair_ratio_bound(5, 3), internal_pair_ratio_bound(6, 2)
    examples = (lb.value == Fraction(18, 17) and lb.extremal == comet(5, 3)
                and ib.value == Fraction(4, 3) and ib.extremal == comet(6, 3))
    announce(capsys, 6, "leaf-pair and internal-pair maxima equal the bounds",
             not bad and examples, f"{len(bad)} mismatches")


def test_criterion_07_leaf_centroid_attainment(capsys):
    bad = []
    for n in range(4, N_MAX + 1):
        for k in range(2, n + 1):
            low = _extreme(n, k, lambda t, d: [(w, v) for w in sorted(t.leaves)
                                               for v in sorted(argmin(d))],
                           lambda a, b: a < b)
            b = leaf_centroid_lower_bound(n, k)
            shape = b.extremal
            d = brute(shape.tree, k)
            on_shape = Fraction(d[shape.w], d[shape.v])
            if not (low == b.value == on_shape and shape.v in argmin(d)):
                bad.append((n, k, low, b.value, on_shape))
    e1, e2 = leaf_centroid_lower_bound(5, 4), leaf_centroid_lower_bound(6, 2)
    examples = (e1.value == Fraction(15, 14) and e1.extremal.tree == path_tree(5)
                and e2.value == Fraction(3, 2) and e2.extremal == PendantPath(3, 1))
    announce(capsys, 7, "leaf-vs-centroid minimum equals the bound on the stated graph",
             not bad and examples, f"{len(bad)} mismatches")


def test_criterion_08_global_local(capsys):
    bad = []
    for t in family():
        n = t.n
        is_star = max(map(len, t.adjacency)) == n - 1
        for k in range(2, n + 1):
            lo, hi = global_local_bounds(n, k)
            sw, d = brute_steiner_wiener(t, k), brute(t, k)
            for v in argmin(d):
                r = Fraction(sw, d[v])
                if not lo <= r <= hi:
                    bad.append((n, k, "range", r))
                if k == n and r != 1:
                    bad.append((n, k, "k=n", r))
                if k < n and (r == hi) != is_star:
                    bad.append((n, k, "attainment", r))
    s5 = star_tree(5)
    example = Fraction(brute_steiner_wiener(s5, 3), brute(s5, 3)[0]) == 2 == Fraction(24, 12)
    announce(capsys, 8, "n/k <= SW_k/d_k(centroid) <= (n-1)/(k-1), star-only attainment",
             not bad and example, f"{len(bad)} problems")


def test_criterion_09_closed_forms(capsys):
    bad = []
    for a in range(7):
        for b in range(7):
            p = path_tree(a + b + 1)
            for k in range(2, a + b + 2):
                if path_vertex_distance_closed(a, b, k) != brute_vertex_index(p, a, k):
                    bad.append(("path", a, b, k))
            pp = PendantPath(a, b)
            for k in range(2, pp.n + 1):
                if pendant_path_distance_closed(a, b, k) != brute_vertex_index(pp.tree, pp.v, k):
                    bad.append(("pendant", a, b, k))
    for n in range(4, 11):
        for k in range(2, n + 1):
            for r in range(1, n):
                c = comet(n, r)
                if comet_leaf_denominator(n, r, k) != brute_vertex_index(c.tree, c.a, k):
                    bad.append(("leaf-denominator", n, r, k))
            for r in range(1, n - 2):
                c = comet(n, r + 2)
                if comet_internal_denominator(n, r, k) != brute_vertex_index(c.tree, c.d, k):
                    bad.append(("internal-denominator", n, r, k))
    announce(capsys, 9, "closed forms match brute force", not bad, f"{len(bad)} mismatches")


@pytest.mark.slow
def test_criterion_10_enumeration_census(capsys):
    expected = [1, 1, 2, 3, 6, 11, 23, 47]
    generated = [sum(1 for _ in enumerate_free_trees(n)) for n in range(2, 10)]
    census = [prufer_census(n) for n in range(2, 10)]
    announce(capsys, 10, "free-tree counts certified by Prüfer bucketing",
             generated == census == expected, f"generated {generated}, census {census}")


def test_criterion_11_cli(capsys, tmp_path):
    p4, s5 = tmp_path / "path4.tree", tmp_path / "star5.tree"
    p4.write_text(format_tree(path_tree(4)))
    s5.write_text(format_tree(star_tree(5)))
    problems = []

    def value(argv):
        code = run(argv)
        out = capsys.readouterr().out.splitlines()
        return code, json.loads(out[0])["result"]["value"] if out else None

    if value(["dist", "--tree", str(p4), "--set", "0,3"]) != (0, "3"):
        problems.append("dist")
    if value(["wiener", "--tree", str(s5), "--k", "3"]) != (0, "24"):
        problems.append("wiener")
    code = run(["verify", "--nmax", "8", "--checks", "all"])
    summary = [json.loads(line)["result"] for line in capsys.readouterr().out.splitlines()]
    failing = [r["check"] for r in summary if not r["passed"]]
    if code != 0:
        problems.append(f"verify exit {code}, failing checks {failing}")
    if len(summary) != 17:
        problems.append("verify summary count")
    announce(capsys, 11, "CLI examples and verify --nmax 8", not problems, "; ".join(problems))
