"""Shared oracles: independent recomputations the library is checked against."""

import itertools
from math import factorial

import pytest

from sylvshift.trees import Bst, node_count, psylv

# The 10-node tree used across the golden tests, spelled out by hand:
# root 4; left 2(left 1(left 1), right 4); right 5(left 5(left 5),
# right 6(right 7)).
EQ1_WORD = (5, 4, 5, 1, 7, 6, 1, 5, 2, 4)
EQ1_STR = "4(2(1(1(_,_),_),4(_,_)),5(5(5(_,_),_),6(_,7(_,_))))"


def multiset_words(symbols) -> set[tuple[int, ...]]:
    """All distinct arrangements of a multiset of symbols."""
    return set(itertools.permutations(symbols))


def brute_readings(t: Bst) -> set[tuple[int, ...]]:
    """Readings computed straight from the definition: every arrangement of
    the labels whose insertion reproduces the tree."""
    from sylvshift.trees import labels

    return {w for w in multiset_words(labels(t)) if psylv(w) == t}


def hook_length_extensions(t: Bst) -> int:
    """Linear extensions of the children-before-parents forest order."""

    def sizes(node: Bst) -> list[int]:
        if node is None:
            return []
        return [node_count(node)] + sizes(node.left) + sizes(node.right)

    n = node_count(t)
    prod = 1
    for s in sizes(t):
        prod *= s
    return factorial(n) // prod


def standard_trees(n: int) -> list[Bst]:
    from sylvshift.verify import standard_trees as st

    return st(n)


@pytest.fixture
def eq1_tree():
    return psylv(EQ1_WORD)
