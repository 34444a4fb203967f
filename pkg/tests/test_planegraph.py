import random

import pytest
from hypothesis import given, strategies as st

from leadsto.corpus import biconnected_maps, connected_maps, random_map
from leadsto.planegraph import (
    MinorWitness,
    PlaneMultigraph,
    blocks,
    bond_graph,
    bond_plus,
    canonical_code,
    circumference,
    cycle_graph,
    cycle_plus,
    dual,
    faces,
    find_bond_minor,
    find_bplus_minor,
    find_cplus_minor,
    find_cycle_minor,
    find_theta,
    find_theta_minor,
    is_biconnected,
    join_in_common_face,
    plane_isomorphic,
    theta_graph,
    to_dot,
    verify_minor_witness,
    wheel_graph,
)
from oracles import MinorClosure, brute_force_map_count


def _path(k):
    rot = [[0]] + [[2 * i - 1, 2 * i] for i in range(1, k)] + [[2 * k - 1]]
    return PlaneMultigraph.from_rotation(rot)


def test_faces_examples():
    assert sorted(len(f) for f in faces(cycle_graph(3))) == [3, 3]
    assert sorted(len(f) for f in faces(bond_graph(5))) == [2] * 5
    loop = PlaneMultigraph.from_rotation([(0, 1)])
    assert len(faces(loop)) == 2


def test_euler_on_builders():
    for g in (cycle_graph(3), bond_graph(5), cycle_plus(5), bond_plus(5),
              theta_graph(2, 2, 3), wheel_graph(4)):
        assert g.euler_ok()


def test_dual_examples():
    for m in range(2, 9):
        assert plane_isomorphic(dual(cycle_graph(m)), bond_graph(m))
    assert plane_isomorphic(dual(bond_plus(5)), cycle_plus(5))
    loop = PlaneMultigraph.from_rotation([(0, 1)])
    d = dual(loop)
    assert (d.n_vertices, d.n_edges) == (2, 1)


def test_dual_rejects_disconnected():
    g = PlaneMultigraph.from_rotation([(0,), (1,), (2,), (3,)])
    with pytest.raises(ValueError):
        dual(g)


@given(st.integers(1, 14), st.integers(0, 10**6))
def test_dual_involution(n, seed):
    g = random_map(n, random.Random(seed))
    assert plane_isomorphic(dual(dual(g)), g, mirror=False)
    assert dual(g).n_edges == g.n_edges
    assert g.n_vertices - g.n_edges + g.n_faces == 2


def test_blocks_examples():
    bowtie = join_in_common_face(join_in_common_face(cycle_graph(3), 0, 0), 0, 0)
    two_triangles = PlaneMultigraph.from_rotation(
        [(0, 5, 6, 11), (1, 2), (3, 4), (7, 8), (9, 10)])
    assert len(blocks(two_triangles)) == 2
    assert len(blocks(cycle_graph(5))) == 1
    assert [b.kind for b in blocks(_path(3))] == ["bridge"] * 3
    assert len(blocks(bowtie)) == 3


@given(st.integers(1, 14), st.integers(0, 10**6))
def test_blocks_cover_edges(n, seed):
    g = random_map(n, random.Random(seed))
    bs = blocks(g)
    covered = sorted(e for b in bs for e in b.edges)
    assert covered == list(range(g.n_edges))
    for i, a in enumerate(bs):
        for b in bs[i + 1:]:
            assert len(a.vertices & b.vertices) <= 1


def test_circumference_examples():
    for n in range(3, 9):
        assert circumference(cycle_graph(n))[0] == n
    for m in range(2, 7):
        assert circumference(bond_graph(m))[0] == 2
    assert circumference(cycle_plus(5))[0] == 5
    assert circumference(_path(4))[0] == 0


def test_cycle_minor_examples():
    w = find_cycle_minor(cycle_graph(7), 5)
    assert w is not None and verify_minor_witness(cycle_graph(7), w)
    assert find_cycle_minor(_path(5), 3) is None


def test_bond_and_theta_examples():
    g = cycle_plus(5)
    assert find_theta(g, 4) is not None
    assert find_theta(theta_graph(2, 2, 2), 3) is None
    assert find_theta(theta_graph(2, 2, 3), 3) is not None
    assert find_theta(cycle_graph(6), 2) is None
    for host, search in ((bond_graph(6), lambda h: find_bond_minor(h, 4)),
                         (bond_plus(6), lambda h: find_bplus_minor(h, 5)),
                         (cycle_plus(6), lambda h: find_cplus_minor(h, 6))):
        w = search(host)
        assert w is not None and verify_minor_witness(host, w)


def test_verify_rejects_bad_witness():
    g = cycle_graph(5)
    w = find_cycle_minor(g, 5)
    bad = MinorWitness(w.target, w.k, w.branch_sets, w.edge_map[:-1] + (w.edge_map[0],))
    assert not verify_minor_witness(g, bad)
    split = MinorWitness("C", 3, (frozenset({0, 2}), frozenset({1}), frozenset({3, 4})), (0, 1, 2))
    assert not verify_minor_witness(g, split)
    assert MinorWitness.from_json(w.to_json()) == w


def test_theta_paths_disjoint():
    th = find_theta(wheel_graph(5), 3)
    assert th is not None
    inner = [set(vs[1:-1]) for vs, _ in th.paths]
    assert not (inner[0] & inner[1]) and not (inner[0] & inner[2]) and not (inner[1] & inner[2])
    edges = [e for _, es in th.paths for e in es]
    assert len(edges) == len(set(edges))
    assert max(th.lengths) >= 3


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_map_enumeration_counts(n):
    """Map generation matches orbit counting over all rotation systems."""
    assert len(connected_maps(n)) == brute_force_map_count(n, mirror=True)


def test_biconnected_maps_are_biconnected():
    for n in range(2, 9):
        for g in biconnected_maps(n):
            assert is_biconnected(g) and g.n_edges == n
            assert all(a != b for a, b in g.edges)


def test_biconnected_counts_against_filter():
    """2-connected maps equal the 2-connected loopless members of all maps."""
    for n in range(2, 7):
        want = {canonical_code(g) for g in connected_maps(n)
                if is_biconnected(g) and all(a != b for a, b in g.edges) and g.n_vertices >= 2}
        got = {canonical_code(g) for g in biconnected_maps(n)}
        assert got == want


def test_minor_searches_match_closure_small():
    closure = MinorClosure()
    for n in range(2, 8):
        for g in biconnected_maps(n):
            for k in range(2, n + 2):
                assert (find_cycle_minor(g, k) is not None) == (closure.best(g, "C") >= k)
                assert (find_bond_minor(g, k) is not None) == (closure.best(g, "B") >= k)
            for c in range(1, n + 1):
                assert (find_theta_minor(g, c) is not None) == (closure.best(g, "C+") >= c + 1)


def test_dot_output():
    g = cycle_graph(4)
    w = find_cycle_minor(g, 3)
    text = to_dot(g, "G", w)
    assert text.startswith("graph G {") and "cluster_0" in text and text.rstrip().endswith("}")
