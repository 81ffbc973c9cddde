"""Cocharge sequences of standard words and standard trees.

The sequence labels the symbols 1..n of a standard word: symbol 1 gets 0,
and symbol i+1 gets the label of i plus one exactly when i+1 occurs earlier
in the word than i (equivalently: scanning backwards from i, cyclically,
i+1 is found before crossing the word's start marker). Each term repeats or
increments its predecessor, so the i-th term lies in 0..i-1.

The sequence is constant on insertion-equivalence classes of standard
words, and one cyclic shift moves every component by at most 1, so the max
componentwise gap between two standard trees lower-bounds their distance in
the cyclic shift graph.
"""

from __future__ import annotations

from typing import Union

from .errors import InternalError, NotStandardError
from .trees import (
    DEFAULT_READINGS_CAP,
    Bst,
    canonical_reading,
    is_standard_tree,
    node_count,
    readings,
)
from .words import Word, is_standard

TreeLike = Union[Bst, "SylvElement"]  # noqa: F821  (import cycle; duck-typed below)


def cochseq_word(u: Word) -> tuple[int, ...]:
    """Cocharge sequence of a non-empty standard word."""
    if not is_standard(u) or not u:
        raise NotStandardError(f"cocharge sequence needs a non-empty standard word, got {u}")
    pos = {a: i for i, a in enumerate(u)}
    seq = [0]
    for i in range(2, len(u) + 1):
        seq.append(seq[-1] + (1 if pos[i] < pos[i - 1] else 0))
    return tuple(seq)


def _as_tree(t: TreeLike) -> Bst:
    return t.tree if hasattr(t, "tree") else t


def cochseq_tree(t: TreeLike, check_all_readings: bool = False,
                 cap: int = DEFAULT_READINGS_CAP) -> tuple[int, ...]:
    """Cocharge sequence of a standard tree, via its canonical reading.

    With check_all_readings the (exponential) full set of readings is
    enumerated and required to agree; a disagreement would contradict the
    class-invariance of the sequence and raises InternalError.
    """
    tree = _as_tree(t)
    if tree is None or not is_standard_tree(tree):
        raise NotStandardError("cocharge sequence needs a non-empty standard tree")
    seq = cochseq_word(canonical_reading(tree))
    if check_all_readings:
        for r in readings(tree, cap):
            if cochseq_word(r) != seq:
                raise InternalError(
                    f"readings of one tree disagree on cocharge: {r} gives "
                    f"{cochseq_word(r)}, expected {seq}")
    return seq


def cocharge_total(u: Word) -> int:
    """Sum of the cocharge sequence (the classical single statistic)."""
    return sum(cochseq_word(u))


def cocharge_lower_bound(s: TreeLike, t: TreeLike) -> int:
    """Max componentwise gap of the two sequences; a cyclic-shift-distance lower bound."""
    st, tt = _as_tree(s), _as_tree(t)
    if node_count(st) != node_count(tt):
        raise NotStandardError("lower bound needs standard trees of equal size")
    a = cochseq_tree(st)
    b = cochseq_tree(tt)
    return max(abs(x - y) for x, y in zip(a, b))
