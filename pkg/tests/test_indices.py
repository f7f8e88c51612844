from math import factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import tree_and_k
from steinerk import (
    IndexMode,
    NotAnEdge,
    across_edge_delta,
    all_vertex_index,
    binomial,
    brute_steiner_wiener,
    brute_vertex_index,
    path_tree,
    star_tree,
    steiner_wiener,
    vertex_index,
)


def factorial_binomial(n: int, k: int) -> int:
    if k < 0 or n < 0 or k > n:
        return 0
    return factorial(n) // (factorial(k) * factorial(n - k))


def test_binomial_examples():
    assert binomial(5, 2) == 10
    assert binomial(3, 5) == 0
    assert binomial(-1, 0) == 0
    assert binomial(4, -1) == 0
    big = binomial(68, 34)
    assert big == factorial_binomial(68, 34) == 28453041475240576740
    assert big.bit_length() > 64


@given(st.integers(-3, 120), st.integers(-3, 120))
def test_binomial_matches_factorial_ratio(n, k):
    assert binomial(n, k) == factorial_binomial(n, k)


@given(st.integers(1, 120), st.integers(1, 120))
def test_pascal(n, k):
    assert binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k)


def test_wiener_examples(path4, star5):
    assert steiner_wiener(star5, 3) == 24
    assert steiner_wiener(path4, 2) == 10
    assert steiner_wiener(path4, 4) == 3


def test_vertex_index_examples(path4, star5):
    assert vertex_index(star5, 0, 3) == 12
    assert vertex_index(star5, 2, 3) == 15
    assert vertex_index(path4, 0, 2, IndexMode.LEAF) == 3


def test_all_vertex_index_examples(path4, star5):
    vec = all_vertex_index(path4, 2)
    assert list(vec.values) == [6, 4, 4, 6]
    assert vec.argmin() == {1, 2}
    assert list(all_vertex_index(star5, 3).values) == [12, 15, 15, 15, 15]
    t = path_tree(6)
    assert set(all_vertex_index(t, 6).values) == {5}


def test_across_edge_examples(path4, star5):
    assert across_edge_delta(path4, 1, 2, 2) == 0
    assert across_edge_delta(path4, 0, 1, 2) == 2
    assert across_edge_delta(star5, 3, 0, 3) == 3
    assert across_edge_delta(star5, 0, 3, 3) == -3
    with pytest.raises(NotAnEdge):
        across_edge_delta(path4, 0, 2, 2)


@settings(max_examples=120, deadline=None)
@given(tree_and_k(max_n=9))
def test_fast_matches_brute(tk):
    t, k = tk
    assert steiner_wiener(t, k) == brute_steiner_wiener(t, k)
    for mode in IndexMode:
        vec = all_vertex_index(t, k, mode)
        assert vec.values == tuple(brute_vertex_index(t, v, k, mode) for v in range(t.n))


@settings(max_examples=80, deadline=None)
@given(tree_and_k(max_n=10))
def test_across_edge_matches_difference(tk):
    t, k = tk
    vec = all_vertex_index(t, k).values
    for x, y in t.edges:
        assert across_edge_delta(t, x, y, k) == vec[x] - vec[y]
        assert across_edge_delta(t, y, x, k) == vec[y] - vec[x]


@pytest.mark.parametrize("n", range(3, 10))
def test_star_center_meets_lower_bound(n):
    s = star_tree(n)
    for k in range(2, n + 1):
        assert vertex_index(s, 0, k) == (k - 1) * binomial(n - 1, k - 1)


def test_large_tree_exact():
    # n = 200 path: pairwise sum is C(n+1, 3)
    assert steiner_wiener(path_tree(200), 2) == binomial(201, 3)
    assert steiner_wiener(path_tree(200), 200) == 199
