"""The binary search tree monoid of rank n.

Elements are identified with their insertion trees; two words represent the
same element exactly when their trees are equal. An independent oracle
decides the same relation by closing a word under the defining rewriting
moves: adjacent symbols c, a with a < c may swap whenever some later symbol
b satisfies a <= b < c.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .errors import BudgetExceededError, RankError
from .trees import Bst, canonical_reading, labels, node_count, psylv
from .words import Word, check_rank, evaluation

DEFAULT_REWRITE_BUDGET = 1_000_000


@dataclass(frozen=True)
class SylvElement:
    rank: int
    tree: Bst

    def __post_init__(self):
        check_rank(labels(self.tree), self.rank)

    def __mul__(self, other: "SylvElement") -> "SylvElement":
        return multiply(self, other)

    def __len__(self) -> int:
        return node_count(self.tree)

    def canonical_reading(self) -> Word:
        return canonical_reading(self.tree)

    def evaluation(self) -> tuple[int, ...]:
        return evaluation_of(self)


def identity(n: int) -> SylvElement:
    return SylvElement(n, None)


def element_of(w: Word, n: int) -> SylvElement:
    check_rank(w, n)
    return SylvElement(n, psylv(w))


def equivalent(u: Word, v: Word, n: int) -> bool:
    """True iff u and v insert to the same tree."""
    check_rank(u, n)
    check_rank(v, n)
    return psylv(u) == psylv(v)


def multiply(s: SylvElement, t: SylvElement) -> SylvElement:
    """Concatenate representatives and re-insert; independent of reading choice."""
    if s.rank != t.rank:
        raise RankError(f"rank mismatch: {s.rank} vs {t.rank}")
    return SylvElement(s.rank, psylv(canonical_reading(s.tree) + canonical_reading(t.tree)))


def evaluation_of(s: SylvElement) -> tuple[int, ...]:
    return evaluation(labels(s.tree), s.rank)


def single_rewrites(w: Word) -> set[Word]:
    """Words one defining-relation application away from w (either direction).

    A swap of positions i, i+1 is allowed iff the two symbols differ and some
    symbol strictly to the right of the pair lies in [min, max).
    """
    out: set[Word] = set()
    for i in range(len(w) - 1):
        s, t = w[i], w[i + 1]
        if s == t:
            continue
        a, c = (s, t) if s < t else (t, s)
        if any(a <= w[j] < c for j in range(i + 2, len(w))):
            out.add(w[:i] + (t, s) + w[i + 2 :])
    return out


def rewrite_class(u: Word, n: int, budget: int = DEFAULT_REWRITE_BUDGET) -> set[Word]:
    """Breadth-first closure of u under the defining relations."""
    check_rank(u, n)
    seen = {u}
    queue = deque([u])
    while queue:
        w = queue.popleft()
        for nxt in single_rewrites(w):
            if nxt not in seen:
                seen.add(nxt)
                if len(seen) > budget:
                    raise BudgetExceededError(budget)
                queue.append(nxt)
    return seen


def rewrite_equivalent(u: Word, v: Word, n: int, budget: int = DEFAULT_REWRITE_BUDGET) -> bool:
    """Decide equality of [u] and [v] purely by rewriting.

    The moves preserve length and evaluation, so mismatches there settle the
    question immediately and the search space is finite.
    """
    check_rank(u, n)
    check_rank(v, n)
    if len(u) != len(v) or evaluation(u, n) != evaluation(v, n):
        return False
    if u == v:
        return True
    seen = {u}
    queue = deque([u])
    while queue:
        w = queue.popleft()
        for nxt in single_rewrites(w):
            if nxt == v:
                return True
            if nxt not in seen:
                seen.add(nxt)
                if len(seen) > budget:
                    raise BudgetExceededError(budget)
                queue.append(nxt)
    return False
