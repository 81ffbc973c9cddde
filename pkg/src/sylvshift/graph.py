"""Cyclic shift graphs restricted to one evaluation class.

Two elements are adjacent when one factors as x*y and the other as y*x.
Working over words: every neighbor of s arises by splitting some reading of
s at some point and swapping the halves. All neighbors share s's
evaluation, so each evaluation class spans a (conjecturally connected)
finite subgraph that can be searched exhaustively at desk scale.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache

from .errors import CapExceededError, DisconnectedError, RankError
from .monoid import SylvElement
from .trees import Bst, Node, canonical_reading, psylv, readings, reading_str, tree_str
from .words import Word, word_str

MAX_VERTICES = 20_000
MAX_READINGS = 100_000


@dataclass(frozen=True)
class ShiftWitness:
    """Word pair certifying one edge: xy reads the source, yx the target."""

    x: Word
    y: Word

    def validates(self, source: Bst, target: Bst) -> bool:
        return psylv(self.x + self.y) == source and psylv(self.y + self.x) == target

    def swapped(self) -> "ShiftWitness":
        return ShiftWitness(self.y, self.x)


def neighbors(s: SylvElement, cap: int = MAX_READINGS) -> dict[SylvElement, ShiftWitness]:
    """Every element one cyclic shift away from s (s itself included), with one witness each."""
    out: dict[SylvElement, ShiftWitness] = {}
    for w in sorted(readings(s.tree, cap)):
        for k in range(len(w) + 1):
            x, y = w[:k], w[k:]
            t = SylvElement(s.rank, psylv(y + x))
            if t not in out:
                out[t] = ShiftWitness(x, y)
    return out


@lru_cache(maxsize=None)
def _trees_on(items: tuple[tuple[int, int], ...]) -> tuple[Bst, ...]:
    """All distinct right-strict trees on the multiset given as ((value, count), ...).

    The root's value splits the multiset deterministically (equal values go
    left), so no tree is produced twice.
    """
    if not items:
        return (None,)
    out: list[Bst] = []
    for i, (v, c) in enumerate(items):
        left_items = items[:i] + (((v, c - 1),) if c > 1 else ())
        right_items = items[i + 1 :]
        for left in _trees_on(left_items):
            for right in _trees_on(right_items):
                out.append(Node(v, left, right))
    return tuple(out)


def trees_with_evaluation(e: tuple[int, ...]) -> list[Bst]:
    items = tuple((i + 1, c) for i, c in enumerate(e) if c > 0)
    return list(_trees_on(items))


class ComponentGraph:
    """The subgraph induced by all elements with one fixed evaluation.

    Vertices are sorted by canonical reading; edges carry one witness,
    oriented from the lower-index endpoint. Self-loops are dropped.
    """

    def __init__(self, rank: int, evaluation: tuple[int, ...],
                 vertices: list[SylvElement], adj: list[list[int]],
                 witnesses: dict[tuple[int, int], ShiftWitness]):
        self.rank = rank
        self.evaluation = evaluation
        self.vertices = vertices
        self.index = {v: i for i, v in enumerate(vertices)}
        self.adj = adj
        self.witnesses = witnesses
        self.parts = self._parts()

    @property
    def connected(self) -> bool:
        return len(self.parts) <= 1

    def edge_count(self) -> int:
        return len(self.witnesses)

    def _parts(self) -> list[list[int]]:
        unseen = set(range(len(self.vertices)))
        parts = []
        while unseen:
            start = min(unseen)
            comp = [start]
            unseen.discard(start)
            queue = deque([start])
            while queue:
                u = queue.popleft()
                for v in self.adj[u]:
                    if v in unseen:
                        unseen.discard(v)
                        comp.append(v)
                        queue.append(v)
            parts.append(sorted(comp))
        return parts


def component(e: tuple[int, ...], n: int, max_vertices: int = MAX_VERTICES,
              max_readings: int = MAX_READINGS) -> ComponentGraph:
    """Build the evaluation-class graph for e over the rank-n alphabet."""
    if len(e) != n:
        raise RankError(f"evaluation has length {len(e)}, rank is {n}")
    if any(c < 0 for c in e):
        raise RankError(f"negative multiplicity in {e}")
    trees = trees_with_evaluation(e)
    if len(trees) > max_vertices:
        raise CapExceededError("component vertices", max_vertices)
    vertices = sorted((SylvElement(n, t) for t in trees),
                      key=lambda s: canonical_reading(s.tree))
    index = {v: i for i, v in enumerate(vertices)}
    adj: list[set[int]] = [set() for _ in vertices]
    witnesses: dict[tuple[int, int], ShiftWitness] = {}
    for i, s in enumerate(vertices):
        for t, wit in neighbors(s, max_readings).items():
            j = index[t]
            if i == j:
                continue
            adj[i].add(j)
            adj[j].add(i)
            key = (min(i, j), max(i, j))
            if key not in witnesses:
                witnesses[key] = wit if i < j else wit.swapped()
    return ComponentGraph(n, e, vertices, [sorted(a) for a in adj], witnesses)


def bfs_distances(g: ComponentGraph, source: SylvElement) -> dict[SylvElement, int]:
    if source not in g.index:
        raise ValueError("source vertex not in component")
    dist = {g.index[source]: 0}
    queue = deque([g.index[source]])
    while queue:
        u = queue.popleft()
        for v in g.adj[u]:
            if v not in dist:
                dist[v] = dist[u] + 1
                queue.append(v)
    return {g.vertices[i]: d for i, d in dist.items()}


def distance(g: ComponentGraph, s: SylvElement, t: SylvElement) -> int:
    if t not in g.index:
        raise ValueError("target vertex not in component")
    d = bfs_distances(g, s)
    if t not in d:
        raise DisconnectedError(g.parts)
    return d[t]


def diameter(g: ComponentGraph) -> tuple[int, tuple[SylvElement, SylvElement]]:
    """Exact diameter by BFS from every vertex, with one extremal pair."""
    if not g.connected:
        raise DisconnectedError(g.parts)
    if len(g.vertices) == 0:
        raise ValueError("empty graph has no diameter")
    best = 0
    pair = (g.vertices[0], g.vertices[0])
    for s in g.vertices:
        d = bfs_distances(g, s)
        for t in g.vertices[g.index[s] + 1 :]:
            if d[t] > best:
                best = d[t]
                pair = (s, t)
    return best, pair


def graph_dot(g: ComponentGraph, tree_labels: bool = False, name: str = "shifts") -> str:
    """Graphviz DOT; vertex labels are canonical readings unless tree_labels."""
    fmt = (lambda v: tree_str(v.tree)) if tree_labels else (lambda v: reading_str(v.tree))
    lines = [f"graph {name} {{", "  node [shape=box];"]
    for i, v in enumerate(g.vertices):
        lines.append(f'  v{i} [label="{fmt(v)}"];')
    for (i, j), wit in sorted(g.witnesses.items()):
        lines.append(f'  v{i} -- v{j} [label="{word_str(wit.x)}|{word_str(wit.y)}"];')
    lines.append("}")
    return "\n".join(lines)


def component_tsv(g: ComponentGraph) -> str:
    """One TSV row: evaluation, vertex count, edge count, diameter, extremal pair."""
    d, (a, b) = diameter(g)
    cols = [
        ",".join(str(c) for c in g.evaluation),
        str(len(g.vertices)),
        str(g.edge_count()),
        str(d),
        reading_str(a.tree),
        reading_str(b.tree),
    ]
    return "\t".join(cols)
