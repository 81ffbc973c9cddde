import json

import pytest

from conftest import standard_trees
from sylvshift.errors import NotStandardError, RankError
from sylvshift.graph import neighbors
from sylvshift.monoid import SylvElement, element_of
from sylvshift.pathsynth import (
    CASE_TAGS,
    base_step,
    certificate_from_obj,
    certificate_json,
    classify_step,
    induction_step,
    shift_path,
    transcript,
    verify_step_invariants,
    visited_tops,
)
from sylvshift.trees import psylv
from sylvshift.words import parse_word

U5 = psylv(parse_word("23541"))
CHAIN_WORDS = ["13254", "54132", "12543", "41235", "12354", "23541"]
CHAIN_TREES = [psylv(parse_word(w)) for w in CHAIN_WORDS]


def test_classify_steps_of_worked_example():
    assert classify_step(U5, 1) == "case3"
    assert classify_step(U5, 2) == "case1"
    assert classify_step(U5, 3) == "case2"
    assert classify_step(U5, 4) == "case4"
    with pytest.raises(ValueError):
        classify_step(U5, 5)


def test_classify_covers_all_consecutive_pairs():
    for n in range(2, 7):
        for t in standard_trees(n):
            for h in range(1, n):
                assert classify_step(t, h) in ("case1", "case2", "case3", "case4")


def test_visited_tops():
    # after 3 postfix steps of U5 (nodes 2, 3, 5), nodes 3 and 5 are topmost
    tops = visited_tops(U5, 3)
    assert [(i, lab) for i, lab, _ in tops] == [(2, 3), (3, 5)]
    assert [lab for _, lab, _ in visited_tops(U5, 5)] == [1]


def test_base_step_examples():
    wit, t1 = base_step(CHAIN_TREES[0], 2)
    assert (wit.x, wit.y) == ((1, 3, 2), (5, 4))
    assert t1 == CHAIN_TREES[1]

    single = psylv((1,))
    wit, t1 = base_step(single, 1)
    assert t1 == single and wit.x == (1,) and wit.y == ()

    wit, t1 = base_step(psylv((2, 1)), 2)
    assert t1 == psylv((1, 2)) and (wit.x, wit.y) == ((2,), (1,))


def test_induction_steps_match_worked_example():
    expected = [
        ((5, 4, 3), (1, 2), "case3"),
        ((5,), (4, 1, 2, 3), "case1"),
        ((4,), (1, 2, 3, 5), "case2b"),
        ((1,), (2, 3, 5, 4), "case4a"),
    ]
    for h, (x, y, tag) in enumerate(expected, start=1):
        wit, nxt, got_tag = induction_step(CHAIN_TREES[h], U5, h)
        assert (wit.x, wit.y, got_tag) == (x, y, tag)
        assert nxt == CHAIN_TREES[h + 1]


def test_step_invariants_on_worked_example():
    for h in range(1, 6):
        assert verify_step_invariants(CHAIN_TREES[h], U5, h)
    # a tree whose root is not the newest built subtree fails
    assert not verify_step_invariants(CHAIN_TREES[0], U5, 1)


def test_shift_path_golden():
    cert = shift_path(element_of(parse_word("13254"), 5), element_of(parse_word("23541"), 5))
    assert [s.post.tree for s in cert.steps] == CHAIN_TREES[1:]
    assert [s.case_tag for s in cert.steps] == ["base", "case3", "case1", "case2b", "case4a"]
    assert cert.verify()
    text = transcript(cert)
    assert "13254" in text and "[case2b]" in text


def test_worked_example_words_are_shift_neighbors():
    for a, b in zip(CHAIN_WORDS, CHAIN_WORDS[1:]):
        s = element_of(parse_word(a), 5)
        t = element_of(parse_word(b), 5)
        assert t in neighbors(s)


def test_trivial_paths():
    single = element_of((1,), 1)
    cert = shift_path(single, single)
    assert len(cert.steps) == 1
    assert cert.steps[0].witness.x == (1,) and cert.steps[0].witness.y == ()

    cert = shift_path(element_of((1, 2), 2), element_of((2, 1), 2))
    assert len(cert.steps) == 2
    assert cert.target == element_of((2, 1), 2)
    assert cert.verify()


def test_shift_path_exhaustive_small():
    for n in range(1, 5):
        trees = standard_trees(n)
        for t in trees:
            for u in trees:
                cert = shift_path(SylvElement(n, t), SylvElement(n, u))
                assert len(cert.steps) == n
                assert cert.steps[0].pre.tree == t
                assert cert.steps[-1].post.tree == u
                assert cert.verify()


def test_case_coverage_through_n6():
    seen = set()
    for n in range(1, 7):
        trees = standard_trees(n)
        for t in trees:
            for u in trees:
                cert = shift_path(SylvElement(n, t), SylvElement(n, u))
                seen.update(s.case_tag for s in cert.steps)
                assert cert.steps[-1].post.tree == u
    assert seen == set(CASE_TAGS)


def test_path_length_dominates_bfs_distance():
    from sylvshift.graph import bfs_distances, component

    for n in range(2, 6):
        g = component((1,) * n, n)
        for s in g.vertices:
            dists = bfs_distances(g, s)
            for t in g.vertices:
                assert dists[t] <= n


def test_input_validation():
    with pytest.raises(RankError):
        shift_path(element_of((1,), 1), element_of((1,), 2))
    with pytest.raises(NotStandardError):
        shift_path(element_of((1, 1), 2), element_of((1, 2), 2))
    with pytest.raises(NotStandardError):
        shift_path(element_of((1,), 3), element_of((1, 2), 3))
    with pytest.raises(NotStandardError):
        shift_path(element_of((), 1), element_of((), 1))


def test_certificate_json_roundtrip():
    cert = shift_path(element_of(parse_word("13254"), 5), element_of(parse_word("23541"), 5))
    obj = json.loads(certificate_json(cert))
    back = certificate_from_obj(obj)
    assert back == cert
    assert back.verify()
    assert [s["case"] for s in obj["steps"]] == ["base", "case3", "case1", "case2b", "case4a"]


def test_tampered_certificates_fail():
    from sylvshift.pathsynth import PathCertificate, PathStep, certificate_obj

    cert = shift_path(element_of(parse_word("13254"), 5), element_of(parse_word("23541"), 5))
    assert not PathCertificate(()).verify()

    # break one witness
    obj = certificate_obj(cert)
    obj["steps"][2]["x"] = "55"
    assert not certificate_from_obj(obj).verify()

    # break the chaining
    steps = list(cert.steps)
    steps[1] = PathStep(steps[0].pre, steps[1].witness, steps[1].post, steps[1].case_tag)
    assert not PathCertificate(tuple(steps)).verify()

    # drop a step
    assert not PathCertificate(cert.steps[1:]).verify()
