import random

import pytest

from transmarkov.braid import BraidWord, self_linking
from transmarkov.moves import (
    TOPOLOGICAL,
    DestabNeg,
    MoveCertificate,
    StabNeg,
    verify_certificate,
)
from transmarkov.search import (
    FOUND,
    NOT_FOUND,
    PRUNED,
    SearchBudget,
    fuzz_pair,
    reduce_to_standard_unknot,
    search,
    standard_unknot,
)


def w(n, *letters):
    return BraidWord(n, tuple(letters))


def test_budget_validation():
    b = SearchBudget()
    assert (b.max_strands, b.max_moves, b.max_nodes, b.max_class_sweep) == (8, 12, 200_000, 5000)
    for bad in [dict(max_strands=0), dict(max_moves=-1), dict(max_nodes=1.5),
                dict(max_class_sweep=True), dict(max_seconds=0)]:
        with pytest.raises(ValueError):
            SearchBudget(**bad)
    with pytest.raises(ValueError):
        SearchBudget.from_mapping({"max_steps": 3})
    assert SearchBudget.from_mapping({"max_moves": 3}).max_moves == 3
    with pytest.raises(ValueError):
        search(w(9), w(9), SearchBudget())


def test_identical_endpoints():
    out = search(w(3, 1, -2), w(3, 1, -2))
    assert out.status == FOUND and out.certificate.steps == ()


def test_pruned_by_self_linking():
    out = search(w(2, 1), w(2, -1))
    assert out.status == PRUNED and "self_linking" in out.reason
    assert search(w(2, 1, 1, 1), w(3, 1, 2)).status == PRUNED


def test_conjugate_endpoints_need_no_markov_moves():
    out = search(w(3, 1, 2, -1, -1), w(3, 2, -1, -1, 1))
    assert out.found and out.certificate.markov_moves == 0
    assert verify_certificate(out.certificate)


def test_worked_example():
    out = search(w(4, -1, 2, -3), w(3, -1, -2))
    assert out.found
    cert = out.certificate
    assert verify_certificate(cert) and cert.markov_moves <= 12
    assert not any(isinstance(m, (StabNeg, DestabNeg)) for m in cert.steps)


def test_topological_mode_allows_negative_moves():
    out = search(w(2, 1), w(2, -1), mode=TOPOLOGICAL)
    assert out.found
    assert any(isinstance(m, (StabNeg, DestabNeg)) for m in out.certificate.steps)
    assert verify_certificate(out.certificate)


def test_not_found_on_tiny_budget():
    with pytest.raises(ValueError):
        search(w(2, -1), w(3, -1, 2), SearchBudget(max_strands=2))
    out = search(w(4, -1, 2, -3), w(3, -1, -2), SearchBudget(max_nodes=1))
    assert out.status == NOT_FOUND and out.nodes_tried >= 1


def test_reduce_to_standard_unknot():
    out = reduce_to_standard_unknot(w(4, -1, 2, -3))
    assert out.found and out.certificate.end == w(3, -1, -2)
    out = reduce_to_standard_unknot(w(2, -1))
    assert out.found and out.certificate.steps == ()
    assert standard_unknot(4) == w(4, -1, -2, -3)
    assert self_linking(standard_unknot(5)) == -9
    with pytest.raises(ValueError):
        reduce_to_standard_unknot(w(2, 1, 1, 1))
    with pytest.raises(ValueError):
        reduce_to_standard_unknot(w(2, 1, 1))
    bm = w(3, *(1,) * 5, *(2,) * 4, *(1,) * 6, -2)
    with pytest.raises(ValueError):
        reduce_to_standard_unknot(bm)


def test_fuzz_pairs_replay():
    rng = random.Random(3)
    for _ in range(20):
        a, b, steps = fuzz_pair(rng)
        assert verify_certificate(MoveCertificate(a, tuple(steps), b))


def test_small_fuzz_run():
    rng = random.Random(99)
    found = 0
    for _ in range(15):
        a, b, _ = fuzz_pair(rng)
        out = search(a, b, SearchBudget(max_seconds=30))
        assert out.status != PRUNED
        if out.found:
            assert verify_certificate(out.certificate)
            found += 1
    assert found >= 14
