import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import EQ1_STR, EQ1_WORD, brute_readings, hook_length_extensions, standard_trees
from sylvshift.errors import CapExceededError, LocatorError, ParseError
from sylvshift.trees import (
    Node,
    canonical_reading,
    complete_subtree,
    infix,
    insert,
    is_bst,
    is_standard_tree,
    labels,
    left_child_path,
    left_minimal,
    node_count,
    parse_tree,
    postfix,
    psylv,
    reading_count,
    readings,
    remove_subtree,
    right_maximal,
    subtree_locators,
    tree_art,
    tree_dot,
    tree_str,
)

words = st.lists(st.integers(1, 4), max_size=7).map(tuple)


def test_insert_examples():
    assert insert(None, 4) == Node(4)
    assert insert(Node(2), 1) == Node(2, Node(1), None)
    assert insert(Node(2), 3) == Node(2, None, Node(3))


def test_insert_equal_goes_left():
    assert insert(Node(2), 2) == Node(2, Node(2), None)


def test_psylv_goldens(eq1_tree):
    assert tree_str(eq1_tree) == EQ1_STR
    assert tree_str(psylv((1, 3, 2, 5, 4))) == "4(2(1(_,_),3(_,_)),5(_,_))"
    assert tree_str(psylv((2, 3, 5, 4, 1))) == "1(_,4(3(2(_,_),_),5(_,_)))"
    assert psylv(()) is None


def test_infix_golden(eq1_tree):
    assert [a for a, _ in infix(eq1_tree)] == [1, 1, 2, 4, 4, 5, 5, 5, 6, 7]
    assert infix(Node(3)) == [(3, "")]
    assert infix(None) == []


def test_postfix_golden():
    assert [a for a, _ in postfix(psylv((2, 3, 5, 4, 1)))] == [2, 3, 5, 4, 1]
    chain = psylv(tuple(range(1, 7)))
    assert [a for a, _ in postfix(chain)] == list(range(1, 7))
    assert postfix(None) == []


def test_postfix_visits_descendants_first(eq1_tree):
    order = postfix(eq1_tree)
    for i, (_, loc) in enumerate(order):
        for _, later in order[i + 1 :]:
            assert not (later != loc and later.startswith(loc))


def test_readings_examples():
    assert readings(psylv((1, 3, 2))) == {(1, 3, 2), (3, 1, 2)}
    assert readings(psylv((2, 1))) == {(2, 1)}
    assert readings(Node(5)) == {(5,)}
    assert readings(None) == {()}


def test_readings_match_bruteforce_exhaustively():
    # every word over {1,2,3} up to length 5, both inclusions at once
    for length in range(0, 6):
        for w in itertools.product((1, 2, 3), repeat=length):
            t = psylv(w)
            assert readings(t) == brute_readings(t)


def test_readings_count_matches_hook_formula():
    for n in range(1, 7):
        for t in standard_trees(n):
            assert len(readings(t)) == hook_length_extensions(t) == reading_count(t)


def test_reading_count_exact_on_multiset_trees():
    # node orders and words are in bijection even with repeated labels
    for length in range(0, 7):
        for w in itertools.product((1, 2, 3), repeat=length):
            t = psylv(w)
            assert len(readings(t)) == reading_count(t)


def test_readings_cap():
    with pytest.raises(CapExceededError):
        readings(psylv((1, 3, 2)), cap=1)


def test_canonical_reading():
    assert canonical_reading(psylv((2, 3, 5, 4, 1))) == (2, 3, 5, 4, 1)
    assert canonical_reading(psylv((1, 3, 2))) == (1, 3, 2)
    assert canonical_reading(None) == ()


def test_left_child_path(eq1_tree):
    chain = psylv(tuple(range(1, 6)))
    path = left_child_path(chain)
    assert path == ["", "L", "LL", "LLL", "LLLL"]
    assert [complete_subtree(chain, p).label for p in path] == [5, 4, 3, 2, 1]
    assert left_child_path(Node(1)) == [""]
    assert [complete_subtree(eq1_tree, p).label for p in left_child_path(eq1_tree)] == [4, 2, 1, 1]
    with pytest.raises(LocatorError):
        left_child_path(None)


def test_complete_subtree(eq1_tree):
    assert tree_str(complete_subtree(eq1_tree, "R")) == "5(5(5(_,_),_),6(_,7(_,_)))"
    assert complete_subtree(eq1_tree, "") == eq1_tree
    assert complete_subtree(Node(9), "") == Node(9)
    with pytest.raises(LocatorError):
        complete_subtree(eq1_tree, "RRRR")
    with pytest.raises(LocatorError):
        complete_subtree(eq1_tree, "RRL")
    with pytest.raises(LocatorError):
        complete_subtree(None, "L")


def test_left_minimal_right_maximal(eq1_tree):
    root_only = [""]
    assert left_minimal(eq1_tree, root_only) == complete_subtree(eq1_tree, "L")
    assert right_maximal(eq1_tree, root_only) == complete_subtree(eq1_tree, "R")

    whole = [loc for _, loc in infix(eq1_tree)]
    assert left_minimal(eq1_tree, whole) is None
    assert right_maximal(eq1_tree, whole) is None

    b = subtree_locators(eq1_tree, "L")  # the subtree 2(1(1),4)
    assert right_maximal(eq1_tree, b) is None  # its node 4 has no right child
    assert left_minimal(eq1_tree, b) is None  # the deep node 1 has no left child either


def test_left_minimal_validates():
    t = psylv((1, 3, 2, 5, 4))
    with pytest.raises(LocatorError):
        left_minimal(t, [])
    with pytest.raises(LocatorError):
        left_minimal(t, ["L", "R"])  # two roots
    with pytest.raises(LocatorError):
        left_minimal(t, ["LLLL"])


def test_remove_subtree(eq1_tree):
    pruned = remove_subtree(eq1_tree, "R")
    assert tree_str(pruned) == "4(2(1(1(_,_),_),4(_,_)),_)"
    assert remove_subtree(eq1_tree, "") is None
    assert node_count(remove_subtree(eq1_tree, "LL")) == node_count(eq1_tree) - 2


def test_tree_text_roundtrip(eq1_tree):
    assert parse_tree(EQ1_STR) == eq1_tree
    assert parse_tree("_") is None
    big = psylv((1, 3, 12, 5))
    assert parse_tree(tree_str(big)) == big
    for bad in ("", "4(", "4(1(_,_)", "4(_;_)", "x(_,_)"):
        with pytest.raises(ParseError):
            parse_tree(bad)


def test_emitters_smoke(eq1_tree):
    dot = tree_dot(eq1_tree)
    assert dot.startswith("digraph") and dot.count("->") == 9
    assert "7" in tree_art(eq1_tree)
    assert tree_art(None) == "(empty)"


@given(words)
def test_psylv_is_bst_and_infix_sorted(w):
    t = psylv(w)
    assert is_bst(t)
    ls = labels(t)
    assert ls == sorted(ls)
    assert node_count(t) == len(w)


@given(words)
def test_word_is_reading_of_its_tree(w):
    t = psylv(w)
    rs = readings(t)
    assert w in rs
    for r in rs:
        assert psylv(r) == t


def test_standard_tree_counts_are_catalan():
    catalan = [1, 1, 2, 5, 14, 42, 132]
    for n in range(1, 7):
        assert len(standard_trees(n)) == catalan[n]
        assert all(is_standard_tree(t) for t in standard_trees(n))
