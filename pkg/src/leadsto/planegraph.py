"""Plane multigraphs given by rotation systems, and exact minor searches.

A graph with ``E`` edges has darts ``0 .. 2E-1``; darts ``2e`` and ``2e+1``
are the two ends of edge ``e``. ``rotation[v]`` lists the darts at vertex
``v`` in counterclockwise order. Loops and parallel edges are allowed.

Faces are the orbits of ``phi = sigma . alpha`` where ``alpha(d) = d ^ 1``
and ``sigma`` is the rotation successor. A face walk keeps its face on the
right, so it runs clockwise; the dual takes the reversed walks as its
rotations and is therefore embedded with the orientation of ``g``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from leadsto import kernels

__all__ = [
    "PlaneMultigraph",
    "Block",
    "Cycle",
    "ThetaSubgraph",
    "MinorWitness",
    "cycle_graph",
    "bond_graph",
    "cycle_plus",
    "bond_plus",
    "theta_graph",
    "wheel_graph",
    "corner_face",
    "join_in_common_face",
    "insert_edge",
    "add_pendant",
    "subdivide",
    "faces",
    "dual",
    "blocks",
    "is_biconnected",
    "longest_cycle",
    "circumference",
    "find_cycle_minor",
    "find_bond_minor",
    "find_theta",
    "find_theta_minor",
    "find_cplus_minor",
    "find_bplus_minor",
    "target_edges",
    "verify_minor_witness",
    "canonical_code",
    "plane_isomorphic",
    "to_dot",
]


@dataclass(frozen=True)
class PlaneMultigraph:
    n_vertices: int
    rotation: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.rotation) != self.n_vertices:
            raise ValueError("one rotation per vertex required")
        seen = sorted(d for rot in self.rotation for d in rot)
        if seen != list(range(len(seen))) or len(seen) % 2:
            raise ValueError("every dart must appear in exactly one rotation")

    @classmethod
    def from_rotation(cls, rotation):
        return cls(len(rotation), tuple(tuple(r) for r in rotation))

    @cached_property
    def n_edges(self) -> int:
        return sum(len(r) for r in self.rotation) // 2

    @cached_property
    def vertex_of(self) -> tuple[int, ...]:
        out = [0] * (2 * self.n_edges)
        for v, rot in enumerate(self.rotation):
            for d in rot:
                out[d] = v
        return tuple(out)

    @cached_property
    def sigma(self) -> tuple[int, ...]:
        out = [0] * (2 * self.n_edges)
        for rot in self.rotation:
            k = len(rot)
            for i, d in enumerate(rot):
                out[d] = rot[(i + 1) % k]
        return tuple(out)

    @cached_property
    def sigma_inv(self) -> tuple[int, ...]:
        out = [0] * (2 * self.n_edges)
        for d, e in enumerate(self.sigma):
            out[e] = d
        return tuple(out)

    @cached_property
    def edges(self) -> tuple[tuple[int, int], ...]:
        vo = self.vertex_of
        return tuple((vo[2 * e], vo[2 * e + 1]) for e in range(self.n_edges))

    def endpoints(self, e: int) -> tuple[int, int]:
        return self.edges[e]

    @cached_property
    def incidence(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        """``incidence[v]`` = ((edge, other endpoint), ...) in rotation order."""
        vo = self.vertex_of
        return tuple(tuple((d >> 1, vo[d ^ 1]) for d in rot) for rot in self.rotation)

    @cached_property
    def face_walks(self) -> tuple[tuple[int, ...], ...]:
        nd = 2 * self.n_edges
        sig = self.sigma
        seen = [False] * nd
        out = []
        for start in range(nd):
            if seen[start]:
                continue
            walk = []
            d = start
            while not seen[d]:
                seen[d] = True
                walk.append(d)
                d = sig[d ^ 1]
            out.append(tuple(walk))
        return tuple(out)

    @cached_property
    def face_of_dart(self) -> tuple[int, ...]:
        out = [0] * (2 * self.n_edges)
        for i, walk in enumerate(self.face_walks):
            for d in walk:
                out[d] = i
        return tuple(out)

    @cached_property
    def components(self) -> tuple[tuple[int, ...], ...]:
        comp = [-1] * self.n_vertices
        out = []
        inc = self.incidence
        for s in range(self.n_vertices):
            if comp[s] >= 0:
                continue
            comp[s] = len(out)
            stack = [s]
            members = [s]
            while stack:
                v = stack.pop()
                for _, w in inc[v]:
                    if comp[w] < 0:
                        comp[w] = len(out)
                        stack.append(w)
                        members.append(w)
            out.append(tuple(sorted(members)))
        return tuple(out)

    @property
    def is_connected(self) -> bool:
        return len(self.components) <= 1

    @property
    def n_faces(self) -> int:
        """Faces counted per component; an isolated vertex has one face."""
        isolated = sum(1 for rot in self.rotation if not rot)
        return len(self.face_walks) + isolated

    def euler_ok(self) -> bool:
        return self.n_vertices - self.n_edges + self.n_faces == 2 * len(self.components)

    def degree(self, v: int) -> int:
        return len(self.rotation[v])


# ---------------------------------------------------------------- builders


def cycle_graph(k: int) -> PlaneMultigraph:
    """The k-cycle C_k (k=1 is a loop, k=2 a pair of parallel edges)."""
    if k < 1:
        raise ValueError("k >= 1")
    if k == 1:
        return PlaneMultigraph(1, ((0, 1),))
    rot = [(2 * i, 2 * ((i - 1) % k) + 1) for i in range(k)]
    return PlaneMultigraph.from_rotation(rot)


def bond_graph(k: int) -> PlaneMultigraph:
    """The k-bond B_k: two vertices joined by k parallel edges."""
    if k < 1:
        raise ValueError("k >= 1")
    return PlaneMultigraph(2, (tuple(2 * i for i in range(k)),
                               tuple(2 * i + 1 for i in reversed(range(k)))))


def cycle_plus(k: int) -> PlaneMultigraph:
    """C_k^+: the k-cycle with one extra edge parallel to edge (k-1, 0)."""
    if k < 2:
        raise ValueError("k >= 2")
    return join_in_common_face(cycle_graph(k), k - 1, 0)


def bond_plus(k: int) -> PlaneMultigraph:
    """B_k^+: the k-bond with its last edge subdivided once."""
    return subdivide(bond_graph(k), k - 1)


def theta_graph(a: int, b: int, c: int) -> PlaneMultigraph:
    """Two vertices joined by internally disjoint paths of lengths a, b, c."""
    g = bond_graph(3)
    for e, length in zip((0, 1, 2), (a, b, c)):
        for _ in range(length - 1):
            g = subdivide(g, e)
    return g


def wheel_graph(k: int) -> PlaneMultigraph:
    """Hub joined to every vertex of a rim k-cycle (hub is vertex k)."""
    g = add_pendant(cycle_graph(k), (0, 0))
    hub = k
    for i in range(1, k):
        g = join_in_common_face(g, hub, i)
    return g


def corner_face(g: PlaneMultigraph, v: int, i: int) -> int:
    """Index (into ``face_walks``) of the face containing corner ``(v, i)``."""
    return g.face_of_dart[g.sigma[g.rotation[v][i]]]


def join_in_common_face(g: PlaneMultigraph, u: int, v: int) -> PlaneMultigraph:
    """Add an edge u-v through the first face (in corner order) they share."""
    for i in range(len(g.rotation[u])):
        fu = corner_face(g, u, i)
        for j in range(len(g.rotation[v])):
            if corner_face(g, v, j) == fu:
                return insert_edge(g, (u, i), (v, j))
    raise ValueError(f"vertices {u} and {v} share no face")


# ---------------------------------------------------------------- edits


def _insert_after(rot, pos, darts):
    rot = list(rot)
    rot[pos + 1:pos + 1] = darts
    return rot


def insert_edge(g: PlaneMultigraph, corner1, corner2) -> PlaneMultigraph:
    """Add an edge between two corners ``(vertex, index)``.

    A corner ``(v, i)`` sits just after ``rotation[v][i]`` (``i = -1`` for an
    isolated vertex). The corners must lie on a common face for the result
    to stay plane; callers check ``euler_ok`` when unsure.
    """
    (u, i), (v, j) = corner1, corner2
    e = g.n_edges
    a, b = 2 * e, 2 * e + 1
    rot = [list(r) for r in g.rotation]
    if u == v:
        if i == j:
            rot[u] = _insert_after(rot[u], i, [a, b])
        else:
            lo, hi = sorted((i, j))
            first, second = (a, b) if i < j else (b, a)
            r = _insert_after(rot[u], hi, [second])
            rot[u] = _insert_after(r, lo, [first])
    else:
        rot[u] = _insert_after(rot[u], i, [a])
        rot[v] = _insert_after(rot[v], j, [b])
    return PlaneMultigraph.from_rotation(rot)


def add_pendant(g: PlaneMultigraph, corner) -> PlaneMultigraph:
    u, i = corner
    e = g.n_edges
    rot = [list(r) for r in g.rotation]
    rot[u] = _insert_after(rot[u], i, [2 * e])
    rot.append([2 * e + 1])
    return PlaneMultigraph.from_rotation(rot)


def subdivide(g: PlaneMultigraph, e: int) -> PlaneMultigraph:
    """Split edge ``e`` (u -> v) into u -> w (edge e) and w -> v (new edge)."""
    f = g.n_edges
    v = g.vertex_of[2 * e + 1]
    rot = [list(r) for r in g.rotation]
    rot[v][rot[v].index(2 * e + 1)] = 2 * f + 1
    rot.append([2 * e + 1, 2 * f])
    return PlaneMultigraph.from_rotation(rot)


# ---------------------------------------------------------------- faces & dual


def faces(g: PlaneMultigraph) -> list[tuple[int, ...]]:
    """Face boundary walks as dart sequences; isolated vertices give ``()``."""
    out = list(g.face_walks)
    out.extend(() for rot in g.rotation if not rot)
    return out


def dual(g: PlaneMultigraph) -> PlaneMultigraph:
    """Plane dual; dual edge ``e`` crosses edge ``e`` and keeps its darts."""
    if not g.is_connected:
        raise ValueError("dual of a disconnected plane graph is undefined here")
    if g.n_edges == 0:
        return PlaneMultigraph(1, ((),))
    # face walks run clockwise around their face; rotations are counterclockwise
    return PlaneMultigraph.from_rotation(tuple(w[::-1] for w in g.face_walks))


# ---------------------------------------------------------------- blocks


@dataclass(frozen=True)
class Block:
    edges: frozenset
    vertices: frozenset

    @property
    def kind(self) -> str:
        if len(self.edges) == 1:
            return "loop" if len(self.vertices) == 1 else "bridge"
        return "biconnected"


def blocks(g: PlaneMultigraph) -> list[Block]:
    """Block decomposition; loops and bridges are single-edge blocks."""
    nv = g.n_vertices
    edges = g.edges
    inc = g.incidence
    disc = [-1] * nv
    low = [0] * nv
    t = 0
    estack: list[int] = []
    found: list[Block] = []

    def emit(edge_ids):
        verts = set()
        for x in edge_ids:
            verts.update(edges[x])
        found.append(Block(frozenset(edge_ids), frozenset(verts)))

    for e, (a, b) in enumerate(edges):
        if a == b:
            emit([e])

    for root in range(nv):
        if disc[root] >= 0:
            continue
        disc[root] = low[root] = t
        t += 1
        stack = [(root, -1, iter(inc[root]))]
        while stack:
            v, pe, it = stack[-1]
            advanced = False
            for e, w in it:
                if e == pe or w == v:
                    continue
                if disc[w] < 0:
                    estack.append(e)
                    disc[w] = low[w] = t
                    t += 1
                    stack.append((w, e, iter(inc[w])))
                    advanced = True
                    break
                if disc[w] < disc[v]:
                    estack.append(e)
                    low[v] = min(low[v], disc[w])
            if advanced:
                continue
            stack.pop()
            if stack:
                u = stack[-1][0]
                low[u] = min(low[u], low[v])
                if low[v] >= disc[u]:
                    comp = []
                    while True:
                        x = estack.pop()
                        comp.append(x)
                        if x == pe:
                            break
                    emit(comp)
    found.sort(key=lambda blk: min(blk.edges))
    return found


def is_biconnected(g: PlaneMultigraph) -> bool:
    """Connected, loopless, at least two edges, and a single block."""
    if g.n_edges < 2 or not g.is_connected:
        return False
    if any(not rot for rot in g.rotation):
        return False
    return len(blocks(g)) == 1


# ---------------------------------------------------------------- cycles


@dataclass(frozen=True)
class Cycle:
    vertices: tuple[int, ...]
    edges: tuple[int, ...]  # edges[i] joins vertices[i] and vertices[i+1 mod len]

    def __len__(self):
        return len(self.edges)


def _parallel_lookup(g):
    table: dict[tuple[int, int], list[int]] = {}
    for e, (a, b) in enumerate(g.edges):
        if a != b:
            table.setdefault((min(a, b), max(a, b)), []).append(e)
    return table


def longest_cycle(g: PlaneMultigraph, stop_at: int = 0) -> Cycle | None:
    """A longest cycle; 2-cycles are parallel pairs, 1-cycles loops.

    With ``stop_at > 0`` the search may return the first cycle found with at
    least that length instead of a longest one.
    """
    par = _parallel_lookup(g)
    adj = [0] * g.n_vertices
    for a, b in par:
        adj[a] |= 1 << b
        adj[b] |= 1 << a
    length, verts = kernels.longest_cycle(g.n_vertices, adj, stop_at)
    if length >= 3:
        k = len(verts)
        es = tuple(par[(min(verts[i], verts[(i + 1) % k]), max(verts[i], verts[(i + 1) % k]))][0]
                   for i in range(k))
        return Cycle(tuple(verts), es)
    for (a, b), ids in sorted(par.items()):
        if len(ids) >= 2:
            return Cycle((a, b), (ids[0], ids[1]))
    for e, (a, b) in enumerate(g.edges):
        if a == b:
            return Cycle((a,), (e,))
    return None


def circumference(g: PlaneMultigraph) -> tuple[int, Cycle | None]:
    cyc = longest_cycle(g)
    return (len(cyc) if cyc else 0), cyc


# ---------------------------------------------------------------- minors


@dataclass(frozen=True)
class MinorWitness:
    """Branch sets and edge map certifying a target minor of a host graph.

    ``target`` is one of ``"C"``, ``"B"``, ``"C+"``, ``"B+"`` and ``k`` its
    size parameter; the target's vertices and edges are those returned by
    :func:`target_edges`.
    """

    target: str
    k: int
    branch_sets: tuple[frozenset, ...]
    edge_map: tuple[int, ...]

    @property
    def name(self) -> str:
        return f"{self.target}{self.k}"

    def to_json(self) -> dict:
        return {
            "target": self.target,
            "k": self.k,
            "branch_sets": [sorted(s) for s in self.branch_sets],
            "edge_map": list(self.edge_map),
        }

    @classmethod
    def from_json(cls, obj) -> "MinorWitness":
        return cls(obj["target"], int(obj["k"]),
                   tuple(frozenset(s) for s in obj["branch_sets"]),
                   tuple(obj["edge_map"]))


def target_edges(target: str, k: int) -> tuple[int, list[tuple[int, int]]]:
    """(vertex count, edge list) of C_k, B_k, C_k^+ or B_k^+."""
    if target == "C":
        if k < 2:
            raise ValueError("C_k needs k >= 2")
        return k, [(i, (i + 1) % k) for i in range(k)]
    if target == "B":
        return 2, [(0, 1)] * k
    if target == "C+":
        n, es = target_edges("C", k)
        return n, es + [(k - 1, 0)]
    if target == "B+":
        return 3, [(0, 1)] * (k - 1) + [(0, 2), (2, 1)]
    raise ValueError(f"unknown target {target!r}")


def _components_without(g: PlaneMultigraph, removed: set[int]) -> list[frozenset]:
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
    groups: dict[int, set[int]] = {}
    for v in range(g.n_vertices):
        groups.setdefault(find(v), set()).add(v)
    return sorted((frozenset(s) for s in groups.values()), key=min)


def find_cycle_minor(g: PlaneMultigraph, m: int) -> MinorWitness | None:
    """C_m minor, obtained by contracting a cycle of length >= m."""
    if m < 2:
        raise ValueError("m >= 2")
    cyc = longest_cycle(g, stop_at=m)
    if cyc is None or len(cyc) < m:
        return None
    vs = cyc.vertices
    sets = [frozenset([vs[j]]) for j in range(m - 1)]
    sets.append(frozenset(vs[m - 1:]))
    emap = list(cyc.edges[:m - 1]) + [cyc.edges[-1]]
    return MinorWitness("C", m, tuple(sets), tuple(emap))


def find_bond_minor(g: PlaneMultigraph, m: int) -> MinorWitness | None:
    """B_m minor, via a cycle of length >= m in the dual (a bond of g)."""
    if m < 2:
        raise ValueError("m >= 2")
    if not g.is_connected:
        raise ValueError("find_bond_minor needs a connected graph")
    cyc = longest_cycle(dual(g), stop_at=m)
    if cyc is None or len(cyc) < m:
        return None
    comps = _components_without(g, set(cyc.edges))
    if len(comps) != 2:
        raise AssertionError("dual cycle did not pull back to a bond")
    return MinorWitness("B", m, tuple(comps), tuple(cyc.edges[:m]))


@dataclass(frozen=True)
class ThetaSubgraph:
    """Two branch vertices joined by three internally disjoint paths.

    Each path is ``(vertices, edges)`` running from ``u`` to ``v``; paths are
    stored shortest first.
    """

    u: int
    v: int
    paths: tuple[tuple[tuple[int, ...], tuple[int, ...]], ...]

    @property
    def lengths(self) -> tuple[int, int, int]:
        return tuple(len(p[1]) for p in self.paths)


def _path_bfs(g, u, v, banned_vertices, banned_edges):
    inc = g.incidence
    prev = {u: None}
    queue = [u]
    while queue:
        nxt = []
        for x in queue:
            for e, w in inc[x]:
                if w in prev or e in banned_edges or w in banned_vertices:
                    continue
                prev[w] = (x, e)
                if w == v:
                    verts, es = [v], []
                    while prev[verts[-1]] is not None:
                        p, pe = prev[verts[-1]]
                        es.append(pe)
                        verts.append(p)
                    return tuple(reversed(verts)), tuple(reversed(es))
                nxt.append(w)
        queue = nxt
    return None


def _two_disjoint_paths(g, u, v, banned_vertices, banned_edges):
    """Two internally vertex-disjoint, edge-disjoint u-v paths, or None.

    Every simple u-v path is tried as the first path, so the search is exact.
    """
    inc = g.incidence
    path_v = [u]
    path_e: list[int] = []
    on_path = {u}
    stack = [iter(inc[u])]
    while stack:
        advanced = False
        for e, w in stack[-1]:
            if w in on_path or w in banned_vertices or e in banned_edges:
                continue
            if w == v:
                interior = set(path_v[1:])
                second = _path_bfs(g, u, v, banned_vertices | interior,
                                   banned_edges | set(path_e) | {e})
                if second is not None:
                    return [(tuple(path_v) + (v,), tuple(path_e) + (e,)), second]
                continue
            path_v.append(w)
            path_e.append(e)
            on_path.add(w)
            stack.append(iter(inc[w]))
            advanced = True
            break
        if not advanced:
            stack.pop()
            if len(path_v) > 1:
                on_path.discard(path_v.pop())
                path_e.pop()
    return None


def find_theta(g: PlaneMultigraph, c: int) -> ThetaSubgraph | None:
    """A theta subgraph one of whose paths has length >= c.

    Exact search: every simple path of length >= c is tried as the long
    branch, and a cycle through its ends avoiding it is sought by flow.
    """
    if c < 1:
        raise ValueError("c >= 1")
    inc = g.incidence
    for u in range(g.n_vertices):
        path_v = [u]
        path_e: list[int] = []
        on_path = {u}
        stack = [iter(inc[u])]
        while stack:
            advanced = False
            for e, w in stack[-1]:
                if w in on_path:
                    continue
                path_v.append(w)
                path_e.append(e)
                on_path.add(w)
                if len(path_e) >= c and w > u:
                    interior = set(path_v[1:-1])
                    res = _two_disjoint_paths(g, u, w, interior, set(path_e))
                    if res is not None:
                        paths = sorted(res + [(tuple(path_v), tuple(path_e))],
                                       key=lambda p: (len(p[1]), p[1]))
                        return ThetaSubgraph(u, w, tuple(paths))
                stack.append(iter(inc[w]))
                advanced = True
                break
            if not advanced:
                stack.pop()
                if len(path_v) > 1:
                    on_path.discard(path_v.pop())
                    path_e.pop()
    return None


def find_theta_minor(g: PlaneMultigraph, c: int) -> MinorWitness | None:
    """Witness for Θ(1,1,c) = C_{c+1}^+ as a minor of g."""
    th = find_theta(g, c)
    if th is None:
        return None
    (va, ea), (vb, eb), (vl, el) = th.paths
    sets = [set([vl[j]]) for j in range(c)]
    sets.append(set(vl[c:]))
    sets[0].update(va[1:-1])
    sets[0].update(vb[1:-1])
    emap = list(el[:c]) + [ea[-1], eb[-1]]
    return MinorWitness("C+", c + 1, tuple(frozenset(s) for s in sets), tuple(emap))


def find_cplus_minor(g: PlaneMultigraph, k: int) -> MinorWitness | None:
    return find_theta_minor(g, k - 1)


def find_bplus_minor(g: PlaneMultigraph, k: int) -> MinorWitness | None:
    """B_k^+ minor of g, from a C_k^+ (theta) minor of the dual pulled back."""
    if not g.is_connected:
        raise ValueError("find_bplus_minor needs a connected graph")
    th = find_theta(dual(g), k - 1)
    if th is None:
        return None
    (_, ea), (_, eb), (_, el) = th.paths
    comps = _components_without(g, set(ea) | set(eb) | set(el))
    if len(comps) != 3:
        raise AssertionError("dual theta did not pull back to three regions")
    where = {}
    for i, comp in enumerate(comps):
        for x in comp:
            where[x] = i

    def sides(path_edges):
        a, b = g.edges[path_edges[0]]
        return {where[a], where[b]}

    sa, sb, sl = sides(ea), sides(eb), sides(el)
    (s_idx,) = sa & sb
    (p_idx,) = sa & sl
    (q_idx,) = sb & sl
    branch = (comps[p_idx], comps[q_idx], comps[s_idx])
    # orient each chosen edge's endpoints are checked by verify_minor_witness
    emap = list(el[:k - 1]) + [ea[0], eb[0]]
    return MinorWitness("B+", k, branch, tuple(emap))


def verify_minor_witness(g: PlaneMultigraph, w: MinorWitness) -> bool:
    """Check a witness against g, independently of how it was found."""
    try:
        nt, tedges = target_edges(w.target, w.k)
    except ValueError:
        return False
    if len(w.branch_sets) != nt or len(w.edge_map) != len(tedges):
        return False
    owner = {}
    for i, bs in enumerate(w.branch_sets):
        if not bs:
            return False
        for x in bs:
            if not (0 <= x < g.n_vertices) or x in owner:
                return False
            owner[x] = i
    for i, bs in enumerate(w.branch_sets):
        start = next(iter(bs))
        seen = {start}
        stack = [start]
        while stack:
            x = stack.pop()
            for _, y in g.incidence[x]:
                if y in bs and y not in seen:
                    seen.add(y)
                    stack.append(y)
        if seen != set(bs):
            return False
    if len(set(w.edge_map)) != len(w.edge_map):
        return False
    for (x, y), e in zip(tedges, w.edge_map):
        if not (0 <= e < g.n_edges):
            return False
        a, b = g.edges[e]
        if {owner.get(a), owner.get(b)} != {x, y} or owner.get(a) == owner.get(b):
            return False
    return True


# ---------------------------------------------------------------- isomorphism


def _submap(g, verts):
    vset = set(verts)
    darts = sorted(d for v in verts for d in g.rotation[v])
    edge_ids = sorted({d >> 1 for d in darts})
    new_e = {e: i for i, e in enumerate(edge_ids)}
    rot = []
    for v in sorted(vset):
        rot.append(tuple(2 * new_e[d >> 1] + (d & 1) for d in g.rotation[v]))
    return PlaneMultigraph.from_rotation(rot)


def canonical_code(g: PlaneMultigraph, mirror: bool = True) -> tuple:
    """Canonical form of the plane embedding (up to reflection if ``mirror``)."""
    if g.is_connected:
        sig = g.sigma
        code = kernels.min_code(sig, False)
        if mirror:
            code = min(code, kernels.min_code(sig, True))
        return (g.n_edges, code)
    parts = sorted(canonical_code(_submap(g, comp), mirror) for comp in g.components)
    return ("disjoint", tuple(parts))


def plane_isomorphic(g: PlaneMultigraph, h: PlaneMultigraph, mirror: bool = True) -> bool:
    if (g.n_vertices, g.n_edges) != (h.n_vertices, h.n_edges):
        return False
    return canonical_code(g, mirror) == canonical_code(h, mirror)


# ---------------------------------------------------------------- DOT

_COLOURS = ("red", "blue", "darkgreen", "orange", "purple", "brown", "magenta",
            "cyan", "gold", "gray40")


def to_dot(g: PlaneMultigraph, name: str = "G", witness: MinorWitness | None = None) -> str:
    lines = [f"graph {name} {{"]
    if witness is not None:
        for i, bs in enumerate(witness.branch_sets):
            colour = _COLOURS[i % len(_COLOURS)]
            lines.append(f"  subgraph cluster_{i} {{")
            lines.append(f'    label="{witness.target}{witness.k}:{i}"; color={colour};')
            lines.append("    " + " ".join(f"v{x};" for x in sorted(bs)))
            lines.append("  }")
    for v in range(g.n_vertices):
        lines.append(f"  v{v};")
    mapped = set(witness.edge_map) if witness else set()
    for e, (a, b) in enumerate(g.edges):
        style = ", penwidth=3" if e in mapped else ""
        lines.append(f'  v{a} -- v{b} [label="e{e}"{style}];')
    lines.append("}")
    return "\n".join(lines) + "\n"
