import itertools
import json
import random

import pytest
from hypothesis import given, settings, strategies as st

from conftest import FIGURE_EIGHT, TREFOIL, load_fixture
from leadsto.corpus import projection_corpus, random_diagram
from leadsto.decide import (
    NO,
    UNDECIDED,
    YES,
    AssignmentCertificate,
    MinorCertificate,
    PartDecision,
    StructuralNo,
    combine_parts,
    decide,
    decide_torus,
    decide_twist,
    oracle_decide,
    oracle_report,
    verify_decision,
)
from leadsto.diagram import CrossingState, apply_assignment, connected_sum, parse_pd, unknot
from leadsto.invariants import BudgetExceeded, Torus2, Twist, reference_signature, signature_of
from leadsto.tait import torus_diagram, twist_diagram


def brute_least(d, ref):
    """Lexicographically least assignment reaching ref, by plain enumeration."""
    for states in itertools.product(list(CrossingState), repeat=d.n):
        r = apply_assignment(d, states)
        if not r.is_split and r.n_components == ref.components and signature_of(r) == ref:
            return states
    return None


def test_oracle_examples():
    dec = oracle_decide(torus_diagram(5), Torus2(3))
    assert dec.answer == YES
    res = apply_assignment(torus_diagram(5), dec.certificate.states)
    assert signature_of(res) == reference_signature(Torus2(3))
    assert oracle_decide(unknot(), Torus2(3)).answer == NO
    no = oracle_decide(torus_diagram(7), Twist(4))
    assert no.answer == NO and no.certificate.reason == "exhausted-assignments"


def test_oracle_smoothing_two_crossings_reaches_trefoil():
    d = torus_diagram(5)
    ref = reference_signature(Torus2(3))
    for i, j in itertools.combinations(range(5), 2):
        for s in (CrossingState.SMOOTH_A, CrossingState.SMOOTH_B):
            states = [s if k in (i, j) else CrossingState.KEEP for k in range(5)]
            r = apply_assignment(d, states)
            if signature_of(r) == ref:
                return
    pytest.fail("no two-crossing smoothing of T(2,5) gives T(2,3)")


def test_oracle_explicit_target_diagram():
    d = torus_diagram(5)
    assert oracle_decide(d, parse_pd(TREFOIL)).answer == YES
    assert oracle_decide(d, parse_pd(FIGURE_EIGHT)).answer == NO


def test_oracle_budget():
    assert oracle_decide(torus_diagram(5), Torus2(3), budget=4).answer == UNDECIDED
    with pytest.raises(BudgetExceeded):
        oracle_report(torus_diagram(5), budget=4)


@pytest.mark.parametrize("target", [Torus2(2), Torus2(3), Torus2(4), Twist(4)])
def test_oracle_matches_plain_enumeration(target):
    ref = reference_signature(target)
    rng = random.Random(7)
    for _ in range(12):
        d = random_diagram(rng.randint(1, 5), rng)
        dec = oracle_decide(d, target)
        want = brute_least(d, ref)
        if want is None:
            assert dec.answer == NO
        else:
            assert dec.answer == YES and dec.certificate.states == want


def test_oracle_chunked_matches_small():
    """Diagrams above the block size are searched in chunks."""
    d = torus_diagram(9)
    dec = oracle_decide(d, Torus2(7))
    assert dec.answer == YES
    assert signature_of(apply_assignment(d, dec.certificate.states)) == reference_signature(Torus2(7))


def test_oracle_report_trefoil():
    entries = oracle_report(parse_pd(TREFOIL))
    assert sum(e.count for e in entries) == 64
    sigs = {e.signature for e in entries if not e.split}
    assert signature_of(unknot()) in sigs
    assert reference_signature(Torus2(2)) in sigs
    assert reference_signature(Torus2(3)) in sigs
    assert signature_of(unknot(2)) in {e.signature for e in entries if e.split}


def test_oracle_report_kink_and_unknot():
    entries = oracle_report(parse_pd("X[1,1,2,2]"))
    assert {(e.signature.components, e.split) for e in entries} == {(1, False), (2, True)}
    assert [e.count for e in oracle_report(unknot())] == [1]


def test_decide_torus_examples():
    d = decide_torus(torus_diagram(7), 5)
    assert d.answer == YES and d.via == "minor"
    assert isinstance(d.certificate, MinorCertificate) and d.certificate.witness.target == "C"
    assert verify_decision(d)

    s = decide_torus(load_fixture("trefoil_sum.pd"), 3)
    assert s.answer == YES and verify_decision(s)

    t = decide_torus(parse_pd(TREFOIL), 5)
    assert t.answer == NO and t.certificate.reason == "exhausted-assignments"


def test_decide_twist_examples():
    d = decide_twist(torus_diagram(9), 5)
    assert d.answer == NO and d.certificate.reason == "torus-minimal-projection"
    y = decide_twist(twist_diagram(6), 6)
    assert y.answer == YES and verify_decision(y)
    f = decide_twist(parse_pd(FIGURE_EIGHT), 4)
    assert f.answer == YES and f.via == "empty-sequence"
    assert all(s == CrossingState.KEEP for s in f.certificate.states)


def test_twist_three_routes_to_torus():
    d = decide_twist(torus_diagram(5), 3)
    assert d.answer == YES and d.notes and verify_decision(d)
    with pytest.raises(ValueError):
        decide_twist(torus_diagram(5), 2)
    with pytest.raises(ValueError):
        decide_torus(torus_diagram(5), 2)


def test_combine_parts():
    d = parse_pd(TREFOIL)
    yes = PartDecision(d, YES, AssignmentCertificate((), d), "oracle")
    no = PartDecision(d, NO, StructuralNo("exhausted-assignments"), "oracle")
    und = PartDecision(d, UNDECIDED, None, "oracle")
    t = Torus2(3)
    assert combine_parts([no, yes], t).answer == YES
    assert combine_parts([no, yes], t).responsible == 1
    assert combine_parts([no, no], t).answer == NO
    assert combine_parts([und, no], t).answer == UNDECIDED
    assert combine_parts([], t).answer == NO


def test_undecided_when_over_budget():
    big = connected_sum(parse_pd(FIGURE_EIGHT), parse_pd(FIGURE_EIGHT))
    dec = decide_torus(big, 5, budget=2)
    assert dec.answer == UNDECIDED


def test_decision_json():
    dec = decide(torus_diagram(7), Torus2(5))
    doc = json.loads(json.dumps(dec.to_json()))
    assert doc["schema"] == "leadsto.decision/1"
    assert doc["answer"] == "yes" and doc["target"] == {"family": "torus", "m": 5}
    assert doc["certificate"]["kind"] == "minor-witness" and doc["certificate"]["part"] == 0
    assert doc["parts"][0]["crossings"] == 7
    no = decide(torus_diagram(9), Twist(5)).to_json()
    assert no["certificate"] == {"kind": "structural-no", "reason": "torus-minimal-projection", "part": 0}


def test_verify_rejects_tampered():
    dec = decide_torus(torus_diagram(7), 5)
    bad_states = AssignmentCertificate((CrossingState.SMOOTH_A,) * 7, unknot())
    part = PartDecision(dec.parts[0].diagram, YES, bad_states, "oracle")
    assert not verify_decision(type(dec)(YES, dec.target, (part,), 0))


def test_empty_sequence_consistency():
    for t in (Torus2(3), Torus2(5), Twist(4), Twist(6)):
        dec = decide(t.diagram(), t)
        assert dec.answer == YES and dec.via == "empty-sequence"


@settings(max_examples=25)
@given(st.integers(1, 6), st.integers(0, 10**6), st.sampled_from([3, 4, 5]))
def test_decide_matches_oracle_random(n, seed, m):
    d = random_diagram(n, random.Random(seed))
    assert decide_torus(d, m).answer == oracle_decide(d, Torus2(m)).answer
    if m >= 4:
        assert decide_twist(d, m).answer == oracle_decide(d, Twist(m)).answer


def test_composite_monotonicity():
    parts = [d for n in (2, 3, 4) for d in projection_corpus(n)][::3]
    rng = random.Random(3)
    for _ in range(12):
        a, b = rng.sample(parts, 2)
        s = connected_sum(a, b)
        for t in (Torus2(3), Twist(4)):
            want = YES if YES in (decide(a, t).answer, decide(b, t).answer) else NO
            assert decide(s, t).answer == want
