import json
import random

import pytest
from hypothesis import given, strategies as st

from conftest import FIGURE_EIGHT, FIXTURES, KNOT_5_1, KNOT_5_2, KNOT_6_1, TREFOIL
from leadsto.corpus import random_diagram
from leadsto.diagram import mirror, parse_pd, projection, unknot
from leadsto.invariants import (
    BudgetExceeded,
    InvariantSignature,
    LaurentPoly,
    Target,
    Torus2,
    Twist,
    bracket_state_sum,
    kauffman_bracket,
    reference_signature,
    signature_of,
    signature_table,
    writhe,
    writhes,
)
from leadsto.planegraph import plane_isomorphic
from leadsto.tait import torus_diagram, twist_diagram
from oracles import braid_closure, state_sum_bracket

P = LaurentPoly.from_dict


def test_laurent_arithmetic():
    a = P({1: 1})
    assert a * a.inverted() == P({0: 1})
    assert (a + a.inverted()) ** 2 == P({2: 1, 0: 2, -2: 1})
    assert a - a == LaurentPoly()
    assert str(P({7: 1, 3: -1, -5: -1})) == "A^7 - A^3 - A^-5"
    assert P({3: -2, 5: 1}).unit_normalized() == P({0: 2, 2: -1})
    assert P({2: 1, 0: -1}).evaluate(2.0) == 3.0


def test_bracket_examples():
    assert kauffman_bracket(unknot()) == P({0: 1})
    assert kauffman_bracket(unknot(2)) == P({2: -1, -2: -1})
    t = parse_pd(TREFOIL)
    assert kauffman_bracket(t) == state_sum_bracket(t) == P({7: 1, 3: -1, -5: -1})
    assert bracket_state_sum(t) == kauffman_bracket(t)


def test_bracket_budget():
    with pytest.raises(BudgetExceeded):
        kauffman_bracket(torus_diagram(5), budget=4)
    with pytest.raises(BudgetExceeded):
        signature_of(torus_diagram(5), budget=4)


@given(st.integers(1, 8), st.integers(0, 10**6))
def test_bracket_matches_state_sum(n, seed):
    d = random_diagram(n, random.Random(seed))
    want = state_sum_bracket(d)
    assert kauffman_bracket(d) == want
    assert bracket_state_sum(d) == want


def test_writhe():
    assert writhe(parse_pd(TREFOIL)) == -3
    assert writhe(mirror(parse_pd(TREFOIL))) == 3
    assert writhe(parse_pd(FIGURE_EIGHT)) == 0
    assert sorted(writhes(torus_diagram(2))) == [-2, 2]


def test_signature_kink_invariance():
    assert signature_of(parse_pd("X[1,1,2,2]")) == signature_of(unknot())
    assert signature_of(parse_pd("X[1,2,2,1]")) == signature_of(unknot())


def test_signature_distinguishes():
    assert signature_of(parse_pd(TREFOIL)) != signature_of(parse_pd(FIGURE_EIGHT))
    assert signature_of(unknot()) != signature_of(unknot(2))


def test_signature_mirror_agnostic():
    d = torus_diagram(4)
    assert signature_of(d) == signature_of(mirror(d))
    t = parse_pd(TREFOIL)
    assert signature_of(t) == signature_of(mirror(t))


def test_signature_json_roundtrip():
    s = signature_of(parse_pd(TREFOIL))
    assert InvariantSignature.from_json(json.loads(json.dumps(s.to_json()))) == s


# Reidemeister moves realised on braid words.

@pytest.mark.parametrize("word,strands", [
    ((1, 1, 1), 2),
    ((1, -2, 1, -2), 3),
    ((1, 1, 2, -1, 2), 3),
    ((1, 2, 1, 2, 1, 2), 3),
])
def test_reidemeister_invariance(word, strands):
    base = signature_of(braid_closure(word, strands))
    # R2: insert sigma_1 sigma_1^-1
    assert signature_of(braid_closure((1, -1) + word, strands)) == base
    # R1 via Markov stabilization, both signs
    for s in (strands, -strands):
        assert signature_of(braid_closure(word + (s,), strands + 1)) == base
    # conjugation (planar isotopy plus R2/R3 on the closure)
    assert signature_of(braid_closure(word[1:] + word[:1], strands)) == base


def test_reidemeister_three():
    a = braid_closure((1, 2, 1, 2, 2), 3)
    b = braid_closure((2, 1, 2, 2, 2), 3)
    assert signature_of(a) == signature_of(b)
    c = braid_closure((1, 2, 1, -2), 3)
    d = braid_closure((2, 1, 2, -2), 3)
    assert signature_of(c) == signature_of(d)


@pytest.mark.parametrize("m", range(2, 9))
def test_braid_closure_is_torus(m):
    b = braid_closure((1,) * m, 2)
    assert plane_isomorphic(projection(b).graph, projection(torus_diagram(m)).graph)
    assert signature_of(b) == reference_signature(Torus2(m))


def test_knot_table_identifications():
    assert signature_of(parse_pd(KNOT_5_1)) == reference_signature(Torus2(5))
    assert signature_of(parse_pd(KNOT_6_1)) == reference_signature(Twist(6))
    assert signature_of(parse_pd(FIGURE_EIGHT)) == reference_signature(Twist(4))
    assert signature_of(parse_pd(KNOT_5_2)) == reference_signature(Twist(5))
    assert signature_of(parse_pd(TREFOIL)) == reference_signature(Torus2(3))


def test_reference_components():
    for m in range(2, 9):
        assert reference_signature(Torus2(m)).components == (1 if m % 2 else 2)
    for m in range(3, 9):
        assert reference_signature(Twist(m)).components == 1
    assert reference_signature(Torus2(2)) == signature_of(braid_closure((1, 1), 2))


def test_reference_table_regression():
    targets = [Torus2(m) for m in range(2, 9)] + [Twist(m) for m in range(4, 9)]
    frozen = json.loads((FIXTURES / "reference_signatures.json").read_text())
    assert json.loads(signature_table(targets)) == frozen
    sigs = [reference_signature(t) for t in targets]
    assert len(set(sigs)) == len(sigs)


def test_twist_three_is_trefoil():
    assert reference_signature(Twist(3)) == reference_signature(Torus2(3))


def test_target_validation():
    with pytest.raises(ValueError):
        Torus2(1)
    with pytest.raises(ValueError):
        Twist(2)
    with pytest.raises(ValueError):
        Target("pretzel", 5)
    assert str(Torus2(5)) == "T(2,5)" and str(Twist(6)) == "Twist(6)"
    assert twist_diagram(6).n == 6
