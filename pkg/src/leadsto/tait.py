"""Checkerboard colourings, Tait graphs, strength, and strong decomposition.

Edge ``i`` of each Tait graph corresponds to crossing ``i`` of the
projection. The face-vertex rotations follow the face walks of the crossing
graph, which is the same convention :func:`planegraph.dual` uses, so the
white graph equals ``dual(gray)`` up to vertex numbering.
"""

from __future__ import annotations

from dataclasses import dataclass

from leadsto.diagram import (
    Diagram,
    NonPlanarError,
    Projection,
    projection,
    serialize_pd,
)
from leadsto.planegraph import (
    PlaneMultigraph,
    blocks,
    cycle_graph,
    cycle_plus,
    is_biconnected,
)

__all__ = [
    "Checkerboard",
    "TaitGraphPair",
    "StrengthWitness",
    "checkerboard",
    "tait_graphs",
    "is_strong",
    "is_strong_geometric",
    "strength_witness",
    "strong_decomposition",
    "is_torus_minimal_projection",
    "is_cycle",
    "is_bond",
    "diagram_from_plane_graph",
    "torus_diagram",
    "twist_diagram",
]

GRAY, WHITE = 1, 0


def _as_projection(p) -> Projection:
    return projection(p) if isinstance(p, Diagram) else p


@dataclass(frozen=True)
class Checkerboard:
    """``colour[f]`` for every face of the crossing graph (face-walk order)."""

    projection: Projection
    colour: tuple[int, ...]

    @property
    def gray_faces(self) -> tuple[int, ...]:
        return tuple(f for f, c in enumerate(self.colour) if c == GRAY)

    @property
    def white_faces(self) -> tuple[int, ...]:
        return tuple(f for f, c in enumerate(self.colour) if c == WHITE)

    def corner_colour(self, crossing: int, corner: int) -> int:
        g = self.projection.graph
        x = g.rotation[crossing][corner]
        return self.colour[g.face_of_dart[g.sigma[x]]]


def checkerboard(p) -> Checkerboard:
    """Two-colour the faces; the face on the far side of arc 0 (dart 1) is white."""
    p = _as_projection(p)
    if not p.crossings or not p.is_connected:
        raise ValueError("checkerboard needs a connected projection with crossings")
    g = p.graph
    colour = [-1] * g.n_faces
    base = g.face_of_dart[1]
    colour[base] = WHITE
    stack = [base]
    while stack:
        f = stack.pop()
        for d in g.face_walks[f]:
            h = g.face_of_dart[d ^ 1]
            want = 1 - colour[f]
            if colour[h] < 0:
                colour[h] = want
                stack.append(h)
            elif colour[h] != want:
                raise NonPlanarError("faces are not 2-colourable; rotation system is corrupt")
    return Checkerboard(p, tuple(colour))


@dataclass(frozen=True)
class TaitGraphPair:
    gray: PlaneMultigraph
    white: PlaneMultigraph
    gray_faces: tuple[int, ...]   # vertex i of gray is face gray_faces[i]
    white_faces: tuple[int, ...]

    def crossing_of_edge(self, e: int) -> int:
        return e

    def __iter__(self):
        return iter((self.gray, self.white))


def _tait_graph(p: Projection, cb: Checkerboard, colour: int):
    g = p.graph
    wanted = [f for f in range(g.n_faces) if cb.colour[f] == colour]
    rotation = []
    for f in wanted:
        rot = []
        for d in g.face_walks[f]:
            x = d ^ 1                      # the corner after x lies in face f
            c = g.vertex_of[x]
            k = g.rotation[c].index(x)
            rot.append(2 * c + (k >= 2))
        rotation.append(tuple(rot[::-1]))   # clockwise walk, counterclockwise rotation
    return PlaneMultigraph.from_rotation(rotation), tuple(wanted)


def tait_graphs(p) -> TaitGraphPair:
    p = _as_projection(p)
    cb = checkerboard(p)
    gray, gf = _tait_graph(p, cb, GRAY)
    white, wf = _tait_graph(p, cb, WHITE)
    return TaitGraphPair(gray, white, gf, wf)


# ---------------------------------------------------------------- strength


@dataclass(frozen=True)
class StrengthWitness:
    """A curve through faces ``faces`` crossing arcs ``arcs`` (edge ids of the
    crossing graph); ``sides`` are the crossing sets it separates."""

    arcs: tuple[int, int]
    faces: tuple[int, int]
    sides: tuple[frozenset, frozenset]

    def to_json(self) -> dict:
        return {
            "arcs": list(self.arcs),
            "faces": list(self.faces),
            "sides": [sorted(s) for s in self.sides],
        }


def strength_witness(p) -> StrengthWitness | None:
    """Least pair of arcs on a common face pair whose removal disconnects P."""
    p = _as_projection(p)
    g = p.graph
    sides_of: dict[tuple[int, int], list[int]] = {}
    for e in range(g.n_edges):
        key = tuple(sorted((g.face_of_dart[2 * e], g.face_of_dart[2 * e + 1])))
        sides_of.setdefault(key, []).append(e)
    best = None
    for key, arcs in sides_of.items():
        for i, e1 in enumerate(arcs):
            for e2 in arcs[i + 1:]:
                if best is not None and (e1, e2) >= best.arcs:
                    continue
                parts = _split(g, {e1, e2})
                if len(parts) == 2:
                    best = StrengthWitness((e1, e2), key, tuple(parts))
    return best


def _split(g: PlaneMultigraph, removed) -> list[frozenset]:
    parent = list(range(g.n_vertices))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e, (a, b) in enumerate(g.edges):
        if e not in removed:
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[ra] = rb
    groups: dict[int, set] = {}
    for v in range(g.n_vertices):
        groups.setdefault(find(v), set()).add(v)
    return sorted((frozenset(s) for s in groups.values()), key=min)


def is_strong_geometric(p) -> bool:
    p = _as_projection(p)
    if p.n == 0:
        raise ValueError("strength is undefined for crossing-free projections")
    return strength_witness(p) is None


def is_strong(p) -> bool:
    """Block test: for n >= 2, strong iff the gray Tait graph is 2-connected."""
    p = _as_projection(p)
    if p.n == 0:
        raise ValueError("strength is undefined for crossing-free projections")
    if p.n == 1:
        return True
    return is_biconnected(tait_graphs(p).gray)


def _cut(d: Diagram, w: StrengthWitness) -> list[Diagram]:
    labels = sorted({x for c in d.crossings for x in c})
    l1, l2 = labels[w.arcs[0]], labels[w.arcs[1]]
    out = []
    for side in w.sides:
        crossings = []
        for i in sorted(side):
            crossings.append(tuple(l1 if x == l2 else x for x in d.crossings[i]))
        part = Diagram(tuple(crossings)).relabeled()
        if not part.graph.euler_ok():
            raise AssertionError("cut-and-repair produced a non-planar part")
        out.append(part)
    return out


def strong_decomposition(d: Diagram) -> list[Diagram]:
    """Cut along least strength-violating curves until every part is strong."""
    if d.n == 0:
        raise ValueError("decomposition needs at least one crossing")
    todo = [d]
    done = []
    while todo:
        cur = todo.pop()
        w = strength_witness(projection(cur)) if cur.n >= 2 else None
        if w is None:
            done.append(cur)
        else:
            todo.extend(_cut(cur, w))
    return sorted(done, key=lambda x: (-x.n, serialize_pd(x)))


# ---------------------------------------------------------------- shapes


def is_cycle(g: PlaneMultigraph) -> bool:
    """C_n for n >= 2: connected, loopless, every vertex of degree 2."""
    return (g.n_vertices >= 2 and g.n_edges == g.n_vertices and g.is_connected
            and all(a != b for a, b in g.edges)
            and all(g.degree(v) == 2 for v in range(g.n_vertices)))


def is_bond(g: PlaneMultigraph) -> bool:
    return g.n_vertices == 2 and g.n_edges >= 1 and all(a != b for a, b in g.edges)


def is_torus_minimal_projection(p) -> int | None:
    """n if the Tait graphs are C_n and B_n (in either order), else None."""
    p = _as_projection(p)
    if p.n < 2:
        return None
    gray, white = tait_graphs(p)
    if (is_cycle(gray) and is_bond(white)) or (is_bond(gray) and is_cycle(white)):
        return p.n
    return None


# ---------------------------------------------------------------- medial


def diagram_from_plane_graph(g: PlaneMultigraph) -> Diagram:
    """Alternating diagram whose Tait graph is ``g`` (the medial construction).

    Crossing ``e`` sits on edge ``e``; arc ``x + 1`` runs through the corner
    after dart ``x``.
    """
    if g.n_edges == 0 or not g.is_connected:
        raise ValueError("need a connected plane graph with at least one edge")
    inv = g.sigma_inv
    crossings = []
    for e in range(g.n_edges):
        d0, d1 = 2 * e, 2 * e + 1
        crossings.append((inv[d1] + 1, d0 + 1, inv[d0] + 1, d1 + 1))
    return Diagram(tuple(crossings)).relabeled()


def torus_diagram(m: int) -> Diagram:
    """Crossing-minimal T(2, m) diagram (Tait graphs C_m and B_m)."""
    return diagram_from_plane_graph(cycle_graph(m))


def twist_diagram(m: int) -> Diagram:
    """Crossing-minimal twist-knot diagram with m crossings (C+_{m-1}, B+_{m-1})."""
    if m < 3:
        raise ValueError("twist knots need m >= 3")
    return diagram_from_plane_graph(cycle_plus(m - 1))


def block_summary(g: PlaneMultigraph) -> list[dict]:
    return [{"kind": b.kind, "vertices": sorted(b.vertices), "edges": sorted(b.edges)}
            for b in blocks(g)]
