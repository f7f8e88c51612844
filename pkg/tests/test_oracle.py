from itertools import combinations

import pytest
from hypothesis import given, settings

from conftest import tree_and_k
from oracles import steiner_by_path_union
from steinerk import (
    IndexMode,
    KOutOfRange,
    binomial,
    brute_steiner_wiener,
    brute_vertex_index,
    path_tree,
    star_tree,
)


@pytest.mark.parametrize("tree, v, k, mode, expected", [
    (path_tree(5), 2, 2, IndexMode.ALL, 6),
    (path_tree(4), 0, 2, IndexMode.LEAF, 3),
    (path_tree(4), 1, 2, IndexMode.INTERNAL, 1),
    (star_tree(5), 0, 3, IndexMode.ALL, 12),
    (star_tree(5), 1, 3, IndexMode.ALL, 15),
])
def test_vertex_index_examples(tree, v, k, mode, expected):
    assert brute_vertex_index(tree, v, k, mode) == expected


def test_wiener_examples(path4, star5):
    assert brute_steiner_wiener(path4, 2) == 10
    assert brute_steiner_wiener(star5, 3) == 24
    for n in range(2, 7):
        assert brute_steiner_wiener(path_tree(n), n) == n - 1


@pytest.mark.parametrize("n", range(3, 9))
def test_star_wiener_formula(n):
    s = star_tree(n)
    for k in range(2, n):
        expected = k * binomial(n - 1, k) + (k - 1) * binomial(n - 1, k - 1)
        assert brute_steiner_wiener(s, k) == expected


@pytest.mark.parametrize("k", [0, 1, 5])
def test_k_out_of_range(path4, k):
    with pytest.raises(KOutOfRange):
        brute_vertex_index(path4, 0, k)
    with pytest.raises(KOutOfRange):
        brute_steiner_wiener(path4, k)


@settings(max_examples=60, deadline=None)
@given(tree_and_k(max_n=7))
def test_wiener_matches_path_union(tk):
    t, k = tk
    expected = sum(steiner_by_path_union(t.n, t.edges, s) for s in combinations(range(t.n), k))
    assert brute_steiner_wiener(t, k) == expected


@settings(max_examples=60, deadline=None)
@given(tree_and_k(max_n=8))
def test_handshake(tk):
    t, k = tk
    total = sum(brute_vertex_index(t, v, k) for v in range(t.n))
    assert total == k * brute_steiner_wiener(t, k)
