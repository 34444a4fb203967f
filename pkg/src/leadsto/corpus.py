"""Exhaustive and random generators for plane maps and link projections.

Maps are generated edge by edge and deduplicated by their canonical code
(reflections identified). Every connected link projection with n crossings
is the medial graph of a connected plane map with n edges, so the projection
corpus is the set of medials, deduplicated again at the projection level.
"""

from __future__ import annotations

import random
from functools import lru_cache

from leadsto.diagram import CrossingState, Diagram, apply_assignment, projection
from leadsto.planegraph import (
    PlaneMultigraph,
    add_pendant,
    canonical_code,
    cycle_graph,
    insert_edge,
    subdivide,
)
from leadsto.tait import diagram_from_plane_graph

__all__ = [
    "face_corners",
    "connected_maps",
    "biconnected_maps",
    "projection_corpus",
    "random_map",
    "random_diagram",
]

_POINT = PlaneMultigraph(1, ((),))


def face_corners(g: PlaneMultigraph) -> list[list[tuple[int, int]]]:
    """Corners ``(vertex, index)`` of every face, in walk order."""
    if g.n_edges == 0:
        return [[(v, -1)] for v in range(g.n_vertices)]
    pos = {}
    for v, rot in enumerate(g.rotation):
        for i, d in enumerate(rot):
            pos[d] = (v, i)
    return [[pos[d ^ 1] for d in walk] for walk in g.face_walks]


def _extensions(g: PlaneMultigraph, loops: bool = True, pendants: bool = True):
    for corners in face_corners(g):
        for i, c1 in enumerate(corners):
            if pendants:
                yield add_pendant(g, c1)
            for c2 in corners[i:]:
                if c1[0] == c2[0] and not loops:
                    continue
                if c1 == c2 and g.n_edges == 0:
                    yield insert_edge(g, (c1[0], -1), (c1[0], -1))
                    continue
                yield insert_edge(g, c1, c2)


def _dedupe(graphs) -> list[PlaneMultigraph]:
    seen = {}
    for g in graphs:
        code = canonical_code(g, mirror=True)
        if code not in seen:
            seen[code] = g
    return [seen[k] for k in sorted(seen, key=repr)]


@lru_cache(maxsize=None)
def connected_maps(n_edges: int) -> tuple[PlaneMultigraph, ...]:
    """All connected plane maps with ``n_edges`` edges, up to reflection."""
    if n_edges == 0:
        return (_POINT,)
    out = []
    for g in connected_maps(n_edges - 1):
        out.extend(_extensions(g))
    return tuple(_dedupe(out))


@lru_cache(maxsize=None)
def biconnected_maps(n_edges: int) -> tuple[PlaneMultigraph, ...]:
    """Loopless 2-connected plane maps with ``n_edges`` >= 2 edges, up to reflection."""
    if n_edges < 2:
        return ()
    if n_edges == 2:
        return (cycle_graph(2),)
    out = []
    for g in biconnected_maps(n_edges - 1):
        out.extend(_extensions(g, loops=False, pendants=False))
        out.extend(subdivide(g, e) for e in range(g.n_edges))
    return tuple(_dedupe(out))


@lru_cache(maxsize=None)
def projection_corpus(n_crossings: int) -> tuple[Diagram, ...]:
    """One alternating diagram for every connected projection with n crossings."""
    seen = {}
    for g in connected_maps(n_crossings):
        if g.n_edges == 0:
            continue
        d = diagram_from_plane_graph(g)
        code = canonical_code(projection(d).graph, mirror=True)
        if code not in seen:
            seen[code] = d
    return tuple(seen[k] for k in sorted(seen, key=repr))


def random_map(n_edges: int, rng: random.Random) -> PlaneMultigraph:
    """A connected plane map grown by random chords, loops and pendants."""
    g = _POINT
    for _ in range(n_edges):
        corners = face_corners(g)
        face = rng.choice(corners)
        c1 = rng.choice(face)
        if g.n_edges and rng.random() < 0.25:
            g = add_pendant(g, c1)
        else:
            c2 = rng.choice(face)
            g = insert_edge(g, c1, c2)
    return g


def random_diagram(n_crossings: int, rng: random.Random) -> Diagram:
    """Medial of a random map with random over/under choices."""
    d = diagram_from_plane_graph(random_map(n_crossings, rng))
    states = [rng.choice((CrossingState.KEEP, CrossingState.EXCHANGE)) for _ in range(d.n)]
    return apply_assignment(d, states)
