"""Exhaustive desk-scale verification suites.

Each suite checks one family of claims by brute force and returns a report
with replayable counterexamples on failure. The CLI exposes them under
`sylvshift verify`; the heavier suites split their work across processes
when asked, and reports are canonicalized so runs are reproducible.
"""

from __future__ import annotations

import itertools
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .cocharge import cochseq_word, cocharge_lower_bound
from .graph import bfs_distances, component, diameter, neighbors
from .monoid import SylvElement, element_of, multiply, rewrite_class
from .pathsynth import CASE_TAGS, shift_path
from .trees import canonical_reading, psylv, tree_str
from .words import parse_word, word_str


@dataclass
class SuiteReport:
    name: str
    passed: bool = True
    lines: list[str] = field(default_factory=list)
    failures: list[str] = field(default_factory=list)

    def fail(self, message: str) -> None:
        self.passed = False
        self.failures.append(message)

    def render(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        out = [f"{status} {self.name}: " + ("; ".join(self.lines) or "ok")]
        out.extend(f"  counterexample: {f}" for f in self.failures[:10])
        if len(self.failures) > 10:
            out.append(f"  ... and {len(self.failures) - 10} more")
        return "\n".join(out)


def _progress(msg: str) -> None:
    print(msg, file=sys.stderr, flush=True)


def _all_words(rank: int, length: int):
    return itertools.product(range(1, rank + 1), repeat=length)


def standard_trees(n: int) -> list:
    """All standard trees on n nodes, in a fixed order."""
    return sorted({psylv(p) for p in itertools.permutations(range(1, n + 1))},
                  key=canonical_reading)


def suite_oracle(rank: int = 4, maxlen: int = 6, budget: int = 1_000_000) -> SuiteReport:
    """Rewriting closure classes coincide with insertion fibers, all words checked."""
    rep = SuiteReport(f"oracle(rank={rank}, maxlen={maxlen})")
    classes = 0
    words_total = 0
    for length in range(1, maxlen + 1):
        fibers: dict = {}
        for w in _all_words(rank, length):
            fibers.setdefault(psylv(w), set()).add(w)
            words_total += 1
        for tree, fiber in fibers.items():
            closure = rewrite_class(min(fiber), rank, budget)
            if closure != fiber:
                extra = closure - fiber
                missing = fiber - closure
                rep.fail(
                    f"word {word_str(min(fiber))}: closure has {len(extra)} strays "
                    f"(e.g. {sorted(extra)[:1]}), misses {len(missing)} "
                    f"(e.g. {sorted(missing)[:1]})")
            classes += 1
        _progress(f"oracle: length {length}/{maxlen} done ({classes} classes)")
    rep.lines.append(f"{words_total} words in {classes} classes agree")
    return rep


def suite_cocharge_congruence(nmax: int = 7) -> SuiteReport:
    """All standard words with one insertion tree share one cocharge sequence."""
    rep = SuiteReport(f"cocharge-congruence(n<={nmax})")
    checked = 0
    for n in range(1, nmax + 1):
        fibers: dict = {}
        for p in itertools.permutations(range(1, n + 1)):
            fibers.setdefault(psylv(p), []).append(p)
        for tree, fiber in fibers.items():
            seqs = {cochseq_word(w) for w in fiber}
            if len(seqs) != 1:
                rep.fail(f"tree {tree_str(tree)} has readings with sequences {sorted(seqs)}")
            checked += len(fiber)
        _progress(f"cocharge-congruence: n={n} done ({len(fibers)} trees)")
    rep.lines.append(f"{checked} standard words grouped and checked")
    return rep


def suite_cocharge_shift(maxlen: int = 6) -> SuiteReport:
    """One cyclic shift moves every cocharge component by at most 1; appending
    a single non-1 symbol at the front instead of the back raises exactly its
    own component by 1."""
    rep = SuiteReport(f"cocharge-shift(len<={maxlen})")
    pairs = 0
    for n in range(1, maxlen + 1):
        for w in itertools.permutations(range(1, n + 1)):
            base = cochseq_word(w)
            for k in range(n + 1):
                shifted = cochseq_word(w[k:] + w[:k])
                if any(abs(a - b) > 1 for a, b in zip(base, shifted)):
                    rep.fail(f"split {word_str(w)} at {k}: {base} vs {shifted}")
                pairs += 1
            a = w[-1]
            if n >= 2 and a != 1:
                front = cochseq_word((a,) + w[:-1])
                want = tuple(c + (1 if i == a - 1 else 0) for i, c in enumerate(base))
                if front != want:
                    rep.fail(
                        f"{word_str(w)}: front-rotated sequence {front}, expected {want}")
    rep.lines.append(f"{pairs} shifted pairs within componentwise distance 1")
    return rep


def suite_connectivity(rank: int = 4, maxlen: int = 6,
                       max_vertices: int = 20_000, max_readings: int = 100_000) -> SuiteReport:
    """Every evaluation class up to the given rank and length is connected."""
    rep = SuiteReport(f"connectivity(rank<={rank}, len<={maxlen})")
    built = 0
    for n in range(1, rank + 1):
        for length in range(0, maxlen + 1):
            for e in _evaluations(n, length):
                g = component(e, n, max_vertices, max_readings)
                if not g.connected:
                    rep.fail(f"evaluation {e} at rank {n}: {len(g.parts)} parts")
                built += 1
        _progress(f"connectivity: rank {n} done ({built} components so far)")
    rep.lines.append(f"{built} evaluation classes, all connected")
    return rep


def _evaluations(n: int, total: int):
    """All length-n vectors of non-negative ints summing to total."""
    if n == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _evaluations(n - 1, total - first):
            yield (first,) + rest


def suite_diameter_bounds(nmax: int = 5) -> SuiteReport:
    """Exact standard-component diameters, reported and bounded by n-1..n."""
    rep = SuiteReport(f"diameter-bounds(n<={nmax})")
    for n in range(2, nmax + 1):
        g = component((1,) * n, n)
        d, (a, b) = diameter(g)
        rep.lines.append(
            f"n={n}: diameter {d} "
            f"({word_str(canonical_reading(a.tree))} .. {word_str(canonical_reading(b.tree))})")
        if not n - 1 <= d <= n:
            rep.fail(f"n={n}: diameter {d} outside [{n - 1}, {n}]")
        _progress(f"diameter-bounds: n={n} -> {d}")
    return rep


def suite_distance_lower_bound(nmax: int = 5) -> SuiteReport:
    """BFS distances dominate the cocharge bound; the two chain trees sit >= n-1 apart."""
    rep = SuiteReport(f"distance-lower-bound(n<={nmax})")
    pairs = 0
    for n in range(2, nmax + 1):
        g = component((1,) * n, n)
        up = element_of(tuple(range(1, n + 1)), n)
        down = element_of(tuple(range(n, 0, -1)), n)
        dists = {v: bfs_distances(g, v) for v in g.vertices}
        if dists[up][down] < n - 1:
            rep.fail(f"n={n}: chain distance {dists[up][down]} < {n - 1}")
        for s in g.vertices:
            for t in g.vertices:
                bound = cocharge_lower_bound(s.tree, t.tree)
                if dists[s][t] < bound:
                    rep.fail(
                        f"n={n}: distance({word_str(canonical_reading(s.tree))}, "
                        f"{word_str(canonical_reading(t.tree))}) = {dists[s][t]} < bound {bound}")
                pairs += 1
        _progress(f"distance-lower-bound: n={n} done")
    rep.lines.append(f"{pairs} standard pairs dominate their cocharge bound")
    return rep


def _path_worker(args: tuple[int, str]) -> tuple[int, set, list[str]]:
    """Run shift_path from one source tree to every standard target; for --jobs."""
    n, source_word = args
    source = psylv(parse_word(source_word))
    tags: set[str] = set()
    failures: list[str] = []
    count = 0
    for target in standard_trees(n):
        try:
            cert = shift_path(SylvElement(n, source), SylvElement(n, target))
        except Exception as exc:  # noqa: BLE001  (reported, not swallowed)
            failures.append(f"path {source_word} -> {tree_str(target)}: {exc}")
            continue
        ok = (len(cert.steps) == n and cert.steps[-1].post.tree == target
              and cert.verify())
        if not ok:
            failures.append(f"path {source_word} -> {tree_str(target)}: invalid certificate")
        tags.update(s.case_tag for s in cert.steps)
        count += 1
    return count, tags, failures


def suite_path(nmax: int = 5, jobs: int = 1) -> SuiteReport:
    """Certified n-step chains exist between all standard pairs; full coverage of cases."""
    rep = SuiteReport(f"path(n<={nmax})")
    seen_tags: set[str] = set()
    total = 0
    for n in range(1, nmax + 1):
        work = [(n, word_str(canonical_reading(t))) for t in standard_trees(n)]
        if jobs > 1 and len(work) > 1:
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                results = list(pool.map(_path_worker, work))
        else:
            results = [_path_worker(w) for w in work]
        for count, tags, failures in results:
            total += count
            seen_tags |= tags
            for f in failures:
                rep.fail(f)
        _progress(f"path: n={n} done ({total} pairs so far)")
    missing = [t for t in CASE_TAGS if t not in seen_tags]
    if nmax >= 4 and missing:
        rep.fail(f"cases never exercised: {missing}")
    rep.lines.append(f"{total} ordered pairs, cases seen: {sorted(seen_tags)}")
    return rep


EXAMPLE_CHAIN = ("13254", "54132", "12543", "41235", "12354", "23541")


def suite_example_path() -> SuiteReport:
    """The worked 5-node chain: tree-by-tree golden match plus edge validation."""
    rep = SuiteReport("example-path")
    words = [tuple(int(c) for c in w) for w in EXAMPLE_CHAIN]
    cert = shift_path(element_of(words[0], 5), element_of(words[-1], 5))
    for i, step in enumerate(cert.steps):
        want = psylv(words[i + 1])
        if step.post.tree != want:
            rep.fail(f"step {i}: got {tree_str(step.post.tree)}, want {tree_str(want)}")
    if not cert.verify():
        rep.fail("certificate fails re-verification")
    for a, b in zip(words, words[1:]):
        nbrs = neighbors(element_of(a, 5))
        if element_of(b, 5) not in nbrs:
            rep.fail(f"{word_str(a)} and {word_str(b)} are not one shift apart")
    rep.lines.append("5-step chain matches the worked example and all edges validate")
    return rep


def suite_induced(nmax: int = 4) -> SuiteReport:
    """Neighbor sets of standard elements do not depend on the ambient rank."""
    rep = SuiteReport(f"induced-subgraph(n<={nmax})")
    checked = 0
    for m in range(1, nmax):
        for n in range(m + 1, nmax + 1):
            for t in standard_trees(m):
                low = {x.tree for x in neighbors(SylvElement(m, t))}
                high = {x.tree for x in neighbors(SylvElement(n, t))}
                if low != high:
                    rep.fail(f"tree {tree_str(t)}: ranks {m} and {n} disagree")
                checked += 1
    rep.lines.append(f"{checked} elements agree across ranks")
    return rep


def suite_monoid(rank: int = 3, maxlen: int = 4, assoc_total: int = 6) -> SuiteReport:
    """Product well-defined on classes, and associative over small elements."""
    rep = SuiteReport(f"monoid(rank={rank}, len<={maxlen})")
    fibers: dict = {}
    for length in range(0, maxlen + 1):
        for w in _all_words(rank, length):
            fibers.setdefault(psylv(w), []).append(w)
    classes = list(fibers.values())
    checked = 0
    for cu in classes:
        for cv in classes:
            trees = {psylv(u + v) for u in cu for v in cv}
            if len(trees) != 1:
                rep.fail(f"classes of {word_str(cu[0])} and {word_str(cv[0])}: "
                         f"{len(trees)} product trees")
            checked += 1
    rep.lines.append(f"{checked} class pairs multiply consistently")

    from .graph import trees_with_evaluation

    elems: list[SylvElement] = []
    for total in range(0, assoc_total + 1):
        for e in _evaluations(rank, total):
            elems.extend(SylvElement(rank, t) for t in trees_with_evaluation(e))
    triples = 0
    for a in elems:
        for b in elems:
            if len(a) + len(b) > assoc_total:
                continue
            ab = multiply(a, b)
            for c in elems:
                if len(a) + len(b) + len(c) > assoc_total:
                    continue
                if multiply(ab, c) != multiply(a, multiply(b, c)):
                    rep.fail("associativity broke on "
                             f"{tree_str(a.tree)}, {tree_str(b.tree)}, {tree_str(c.tree)}")
                triples += 1
    rep.lines.append(f"{triples} triples associate")
    return rep


SUITES = {
    "oracle": suite_oracle,
    "cocharge-congruence": suite_cocharge_congruence,
    "cocharge-shift": suite_cocharge_shift,
    "connectivity": suite_connectivity,
    "diameter-bounds": suite_diameter_bounds,
    "distance-lower-bound": suite_distance_lower_bound,
    "path": suite_path,
    "example-path": suite_example_path,
    "induced-subgraph": suite_induced,
    "monoid": suite_monoid,
}
