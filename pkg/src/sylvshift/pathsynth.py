"""Constructive cyclic-shift paths between standard trees.

Given standard trees T and U on n nodes, builds a chain of exactly n cyclic
shifts T = T_0 ~ T_1 ~ ... ~ T_n = U. The chain follows the postfix
traversal u_1..u_n of U: after step h, the complete subtrees of U rooted at
the already-visited nodes that are topmost among them appear intact in T_h,
newest at the root and the rest in order down the path of left child nodes.
Every step is certified by the word pair (x, y) of its shift and every
claimed structural fact is checked at runtime; a violation raises
InternalError instead of producing an unverified path.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .errors import InternalError, NotStandardError, RankError
from .graph import ShiftWitness
from .monoid import SylvElement
from .trees import (
    Bst,
    canonical_reading,
    complete_subtree,
    is_standard_tree,
    labels,
    node_count,
    parse_tree,
    postfix,
    psylv,
    remove_subtree,
    tree_str,
)
from .words import parse_word, word_str

CASE_TAGS = ("base", "case1", "case2a", "case2b", "case3", "case4a", "case4b")


@dataclass(frozen=True)
class PathStep:
    pre: SylvElement
    witness: ShiftWitness
    post: SylvElement
    case_tag: str


@dataclass(frozen=True)
class PathCertificate:
    steps: tuple[PathStep, ...]

    @property
    def source(self) -> SylvElement:
        return self.steps[0].pre

    @property
    def target(self) -> SylvElement:
        return self.steps[-1].post

    def __len__(self) -> int:
        return len(self.steps)

    def verify(self) -> bool:
        """Recheck every claim in the certificate from scratch."""
        if not self.steps:
            return False
        target = self.target.tree
        if len(self.steps) != node_count(target):
            return False
        prev = self.source.tree
        for h, step in enumerate(self.steps, start=1):
            if step.pre.tree != prev:
                return False
            if step.case_tag not in CASE_TAGS:
                return False
            if not step.witness.validates(step.pre.tree, step.post.tree):
                return False
            if not verify_step_invariants(step.post.tree, target, h):
                return False
            prev = step.post.tree
        return prev == target


def _node_at(t: Bst, loc: str) -> Bst:
    cur = t
    for step in loc:
        if cur is None:
            return None
        cur = cur.left if step == "L" else cur.right
    return cur


def _matches(node: Bst, pattern: Bst) -> bool:
    """Pattern occurs at node: labels and parent-child shape agree on the
    pattern's span; the host may carry extra nodes below the pattern's frontier."""
    if pattern is None:
        return True
    if node is None or node.label != pattern.label:
        return False
    return _matches(node.left, pattern.left) and _matches(node.right, pattern.right)


def _spine_len(pattern: Bst, side: str) -> int:
    k = 0
    cur = pattern
    while cur is not None:
        cur = cur.left if side == "L" else cur.right
        if cur is not None:
            k += 1
    return k


def _find_loc(t: Bst, a: int) -> str | None:
    """Locator of the node labelled a in a standard (distinct-label) tree."""
    loc = ""
    cur = t
    while cur is not None:
        if a == cur.label:
            return loc
        if a < cur.label:
            cur, loc = cur.left, loc + "L"
        else:
            cur, loc = cur.right, loc + "R"
    return None


def visited_tops(target: Bst, h: int) -> list[tuple[int, int, str]]:
    """Topmost already-visited nodes after h postfix steps, as (step, label, locator).

    Returned in visiting order; the last entry is always the h-th visited
    node itself, which never lies below an earlier one.
    """
    nodes = postfix(target)
    if not 1 <= h <= len(nodes):
        raise ValueError(f"step {h} outside 1..{len(nodes)}")
    visited = nodes[:h]
    locs = [loc for _, loc in visited]
    tops = [
        (i + 1, lab, loc)
        for i, (lab, loc) in enumerate(visited)
        if not any(other != loc and loc.startswith(other) for other in locs)
    ]
    if tops[-1][0] != h:
        raise InternalError(f"node visited at step {h} lies below an earlier one")
    return tops


def verify_step_invariants(t: Bst, target: Bst, h: int) -> bool:
    """Check the two chain invariants of the construction at step h.

    After h steps: the complete subtree of target at the h-th postfix node
    appears at the root of t, and the subtrees at all topmost visited nodes
    appear, newest first, along t's path of left child nodes.
    """
    expected = [complete_subtree(target, loc) for _, _, loc in reversed(visited_tops(target, h))]
    if not _matches(t, expected[0]):
        return False
    idx = 0
    cur = t
    while cur is not None:
        if idx < len(expected) and cur.label == expected[idx].label:
            if not _matches(cur, expected[idx]):
                return False
            idx += 1
        cur = cur.left
    return idx == len(expected)


def classify_step(target: Bst, h: int) -> str:
    """Which of the four step shapes relates the h-th and (h+1)-th postfix nodes."""
    nodes = postfix(target)
    n = len(nodes)
    if not 1 <= h < n:
        raise ValueError(f"step {h} outside 1..{n - 1}")
    _, loc_h = nodes[h - 1]
    _, loc_next = nodes[h]
    parent_next = _node_at(target, loc_next)
    conds = {
        # previous node is a left child; next node lies in its parent's right subtree
        "case1": bool(loc_h) and loc_h[-1] == "L" and loc_next.startswith(loc_h[:-1] + "R"),
        # previous node is the right child of the next one, which has a left subtree
        "case2": loc_h == loc_next + "R" and parent_next.left is not None,
        # previous node is the left child of the next one
        "case3": loc_h == loc_next + "L",
        # previous node is the right child of the next one, which has no left subtree
        "case4": loc_h == loc_next + "R" and parent_next.left is None,
    }
    hits = [name for name, hit in conds.items() if hit]
    if len(hits) != 1:
        raise InternalError(f"postfix step {h} fits {hits or 'no'} cases, expected exactly one")
    return hits[0]


def base_step(t: Bst, u1: int) -> tuple[ShiftWitness, Bst]:
    """First shift: rotate a reading of t so u1 comes last, making it the root."""
    if t is None or not is_standard_tree(t):
        raise NotStandardError("base step needs a non-empty standard tree")
    w = canonical_reading(t)
    if u1 not in w:
        raise ValueError(f"symbol {u1} does not label any node")
    i = w.index(u1)
    x, y = w[: i + 1], w[i + 1 :]
    return ShiftWitness(x, y), psylv(y + x)


def induction_step(t: Bst, target: Bst, h: int) -> tuple[ShiftWitness, Bst, str]:
    """One shift extending the chain from step h to step h+1.

    Requires the step-h invariants on t; locates the next postfix node of
    target inside t, reads off the displaced subtrees, and returns the
    witness, the shifted tree, and the sub-case actually taken.
    """
    nodes = postfix(target)
    u_next, loc_next = nodes[h]
    _, loc_h = nodes[h - 1]
    case = classify_step(target, h)

    bh = complete_subtree(target, loc_h)
    if not _matches(t, bh):
        raise InternalError(f"step {h}: newest built subtree is not at the root")
    r_bh = canonical_reading(bh)
    lm = "L" * _spine_len(bh, "L")  # leftmost node of the root copy of bh
    rm = "R" * _spine_len(bh, "R")
    u_loc = _find_loc(t, u_next)
    if u_loc is None:
        raise InternalError(f"step {h}: symbol {u_next} missing from the tree")

    if case in ("case1", "case3"):
        r_root = rm + "R"
        if _node_at(t, r_root) is None or not u_loc.startswith(r_root):
            raise InternalError(
                f"step {h}: next node {u_next} is not in the right-maximal subtree")
        if u_next <= labels(bh)[-1]:
            raise InternalError(
                f"step {h}: next node {u_next} is not above the built subtree's labels")
        u_node = _node_at(t, u_loc)
        delta = canonical_reading(remove_subtree(_node_at(t, r_root), u_loc[len(r_root):]))
        lam = canonical_reading(_node_at(t, lm + "L"))
        if case == "case1":
            x = canonical_reading(u_node.left) + canonical_reading(u_node.right) + (u_next,)
            tag = "case1"
        else:
            if u_node.left is not None:
                raise InternalError(f"step {h}: next node {u_next} should have no left subtree")
            x = canonical_reading(u_node.right) + (u_next,)
            tag = "case3"
        y = delta + lam + r_bh

    elif case == "case2":
        bg = _node_at(target, loc_next).left  # older built pattern: left subtree of u_next
        r_bg = canonical_reading(bg)
        if not (labels(bg)[-1] + 1 == u_next == labels(bh)[0] - 1):
            raise InternalError(
                f"step {h}: {u_next} is not the unique value between the two built subtrees")
        delta = canonical_reading(_node_at(t, rm + "R"))
        lslot = lm + "L"
        if u_loc == lslot:
            # next node sits on the left spine, directly between the two patterns
            g_root = u_loc + "L"
            if not _matches(_node_at(t, g_root), bg):
                raise InternalError(
                    f"step {h}: expected the older built subtree directly below {u_next}")
            lam = canonical_reading(_node_at(t, g_root + "L" * _spine_len(bg, "L") + "L"))
            x = lam + r_bg + (u_next,)
            y = delta + r_bh
            tag = "case2a"
        else:
            # patterns adjacent on the spine; next node hangs off the older one's right
            g_root = lslot
            if not _matches(_node_at(t, g_root), bg):
                raise InternalError(
                    f"step {h}: expected the older built subtree directly below the newest one")
            if u_loc != g_root + "R" * _spine_len(bg, "R") + "R":
                raise InternalError(
                    f"step {h}: {u_next} is not the right-maximal subtree of the older pattern")
            u_node = _node_at(t, u_loc)
            if u_node.left is not None or u_node.right is not None:
                raise InternalError(
                    f"step {h}: right-maximal subtree at {u_next} is not a single node")
            lam = canonical_reading(_node_at(t, g_root + "L" * _spine_len(bg, "L") + "L"))
            x = (u_next,)
            y = lam + r_bg + delta + r_bh
            tag = "case2b"

    else:  # case4
        lslot = lm + "L"
        if _node_at(t, lslot) is None or not u_loc.startswith(lslot):
            raise InternalError(
                f"step {h}: next node {u_next} is not in the left-minimal subtree")
        if u_next != labels(bh)[0] - 1:
            raise InternalError(
                f"step {h}: {u_next} is not the value just below the built subtree")
        rel = u_loc[len(lslot):]
        u_node = _node_at(t, u_loc)
        if u_node.right is not None:
            raise InternalError(f"step {h}: next node {u_next} should have no right subtree")
        delta = canonical_reading(_node_at(t, rm + "R"))
        if rel == "":
            x = canonical_reading(u_node.left) + (u_next,)
            y = delta + r_bh
            tag = "case4a"
        else:
            if set(rel) != {"R"}:
                raise InternalError(
                    f"step {h}: {u_next} is not the maximum of the left-minimal subtree")
            lam = canonical_reading(remove_subtree(_node_at(t, lslot), rel))
            x = canonical_reading(u_node.left) + (u_next,)
            y = lam + delta + r_bh
            tag = "case4b"

    if psylv(x + y) != t:
        raise InternalError(f"step {h} ({tag}): assembled factorization is not a reading")
    t_next = psylv(y + x)
    if not verify_step_invariants(t_next, target, h + 1):
        raise InternalError(f"step {h} ({tag}): chain invariants fail afterwards")
    return ShiftWitness(x, y), t_next, tag


def shift_path(start: SylvElement, target: SylvElement) -> PathCertificate:
    """Certified chain of exactly n cyclic shifts from start to target."""
    if start.rank != target.rank:
        raise RankError(f"rank mismatch: {start.rank} vs {target.rank}")
    s_tree, u_tree = start.tree, target.tree
    if s_tree is None or u_tree is None:
        raise NotStandardError("paths need non-empty trees")
    if not (is_standard_tree(s_tree) and is_standard_tree(u_tree)):
        raise NotStandardError("paths are defined for standard trees only")
    n = node_count(u_tree)
    if node_count(s_tree) != n:
        raise NotStandardError("trees must have the same number of nodes")

    rank = start.rank
    nodes = postfix(u_tree)
    steps: list[PathStep] = []
    cur = s_tree

    witness, nxt = base_step(cur, nodes[0][0])
    if not verify_step_invariants(nxt, u_tree, 1):
        raise InternalError("chain invariants fail after the base step")
    steps.append(PathStep(SylvElement(rank, cur), witness, SylvElement(rank, nxt), "base"))
    cur = nxt

    for h in range(1, n):
        witness, nxt, tag = induction_step(cur, u_tree, h)
        steps.append(PathStep(SylvElement(rank, cur), witness, SylvElement(rank, nxt), tag))
        cur = nxt

    if cur != u_tree:
        raise InternalError("path did not terminate at the target tree")
    return PathCertificate(tuple(steps))


def certificate_obj(cert: PathCertificate) -> dict:
    """JSON-ready dict; words and trees use the package's text formats."""
    return {
        "rank": cert.source.rank,
        "steps": [
            {
                "step": i,
                "case": s.case_tag,
                "pre": tree_str(s.pre.tree),
                "post": tree_str(s.post.tree),
                "x": word_str(s.witness.x),
                "y": word_str(s.witness.y),
            }
            for i, s in enumerate(cert.steps)
        ],
    }


def certificate_json(cert: PathCertificate) -> str:
    return json.dumps(certificate_obj(cert), indent=2)


def certificate_from_obj(obj: dict) -> PathCertificate:
    rank = obj["rank"]
    steps = tuple(
        PathStep(
            SylvElement(rank, parse_tree(s["pre"])),
            ShiftWitness(parse_word(s["x"]), parse_word(s["y"])),
            SylvElement(rank, parse_tree(s["post"])),
            s["case"],
        )
        for s in obj["steps"]
    )
    return PathCertificate(steps)


def transcript(cert: PathCertificate) -> str:
    """Human-readable step-by-step listing of the chain."""
    lines = []
    for i, step in enumerate(cert.steps):
        lines.append(
            f"T{i} = {word_str(canonical_reading(step.pre.tree))}"
            f"  =  {tree_str(step.pre.tree)}")
        lines.append(
            f"   ~  x={word_str(step.witness.x) or 'e'}"
            f"  y={word_str(step.witness.y) or 'e'}   [{step.case_tag}]")
    last = cert.steps[-1].post
    lines.append(
        f"T{len(cert.steps)} = {word_str(canonical_reading(last.tree))}"
        f"  =  {tree_str(last.tree)}")
    return "\n".join(lines)
