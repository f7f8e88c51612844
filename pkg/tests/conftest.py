import os
import sys

import pytest
from hypothesis import strategies as st

sys.path.insert(0, os.path.dirname(__file__))

from steinerk import Tree, path_tree, prufer_decode, star_tree  # noqa: E402


@pytest.fixture
def path4() -> Tree:
    return path_tree(4)


@pytest.fixture
def path5() -> Tree:
    return path_tree(5)


@pytest.fixture
def star5() -> Tree:
    return star_tree(5)


@st.composite
def labeled_trees(draw, min_n: int = 2, max_n: int = 9) -> Tree:
    """Uniform-ish labeled trees via random Prüfer sequences."""
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    seq = draw(st.lists(st.integers(0, n - 1), min_size=n - 2, max_size=n - 2))
    return prufer_decode(seq, n)


@st.composite
def tree_and_k(draw, min_n: int = 2, max_n: int = 9):
    t = draw(labeled_trees(min_n, max_n))
    k = draw(st.integers(min_value=2, max_value=max(2, t.n)))
    return t, k
