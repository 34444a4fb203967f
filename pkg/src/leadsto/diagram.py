"""Link diagrams in planar-diagram (PD) form, and the local operations on them.

A crossing is a 4-tuple of arc labels in counterclockwise order; slots 0 and
2 carry the under-strand, slots 1 and 3 the over-strand. Exchanging a
crossing rotates its tuple by one place. The two smoothings of crossing
``(a, b, c, d)`` reconnect ``a-b, c-d`` (``SMOOTH_A``) or ``a-d, b-c``
(``SMOOTH_B``); ``SMOOTH_A`` is the Kauffman A-smoothing of the crossing as
it appears in the diagram the assignment is applied to.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from enum import IntEnum
from functools import cached_property

from leadsto.planegraph import PlaneMultigraph, canonical_code

__all__ = [
    "DiagramError",
    "PDSyntaxError",
    "GaussSyntaxError",
    "ArcMultiplicityError",
    "NonPlanarError",
    "UnrealizableGaussError",
    "DisconnectedError",
    "CrossingState",
    "Diagram",
    "Projection",
    "parse_pd",
    "serialize_pd",
    "canonical_pd",
    "parse_gauss",
    "parse_code",
    "apply_assignment",
    "projection",
    "crossing_graph",
    "strand_components",
    "connected_sum",
    "mirror",
    "unknot",
]


class DiagramError(ValueError):
    """Invalid diagram input. ``exit_code`` is what the CLI reports."""

    exit_code = 2


class PDSyntaxError(DiagramError):
    def __init__(self, message, position):
        super().__init__(f"{message} at offset {position}")
        self.position = position


class GaussSyntaxError(DiagramError):
    def __init__(self, message, position):
        super().__init__(f"{message} at offset {position}")
        self.position = position


class ArcMultiplicityError(DiagramError):
    pass


class NonPlanarError(DiagramError):
    exit_code = 3


class UnrealizableGaussError(NonPlanarError):
    pass


class DisconnectedError(DiagramError):
    exit_code = 3


class CrossingState(IntEnum):
    KEEP = 0
    EXCHANGE = 1
    SMOOTH_A = 2
    SMOOTH_B = 3

    @property
    def smoothed(self) -> bool:
        return self >= CrossingState.SMOOTH_A


def _arc_counts(crossings):
    return Counter(x for c in crossings for x in c)


def crossing_graph(crossings) -> tuple[PlaneMultigraph, list[tuple[int, int]]]:
    """The 4-regular plane multigraph of a crossing list.

    Returns the graph and ``slot_of_dart`` mapping each dart to its
    ``(crossing, slot)``. Edge ``e`` is the ``e``-th smallest arc label.
    """
    labels = sorted(_arc_counts(crossings))
    index = {x: i for i, x in enumerate(labels)}
    seen: dict[int, int] = {}
    rotation = []
    slot_of_dart = [None] * (2 * len(labels))
    for ci, c in enumerate(crossings):
        rot = []
        for s, x in enumerate(c):
            e = index[x]
            d = 2 * e + seen.get(e, 0)
            seen[e] = 1
            rot.append(d)
            slot_of_dart[d] = (ci, s)
        rotation.append(tuple(rot))
    return PlaneMultigraph.from_rotation(rotation), slot_of_dart


@dataclass(frozen=True)
class Diagram:
    crossings: tuple[tuple[int, int, int, int], ...]
    free_loops: int = 0

    def __post_init__(self):
        object.__setattr__(self, "crossings", tuple(tuple(int(x) for x in c) for c in self.crossings))
        for c in self.crossings:
            if len(c) != 4:
                raise PDSyntaxError("crossing needs 4 slots", -1)
        bad = {x: k for x, k in _arc_counts(self.crossings).items() if k != 2}
        if bad:
            x, k = min(bad.items())
            raise ArcMultiplicityError(f"arc {x} appears {k} times (expected 2)")
        if self.free_loops < 0:
            raise ValueError("free_loops must be nonnegative")

    @property
    def n(self) -> int:
        return len(self.crossings)

    @cached_property
    def graph(self) -> PlaneMultigraph:
        return crossing_graph(self.crossings)[0]

    @property
    def is_split(self) -> bool:
        if not self.crossings:
            return self.free_loops > 1
        return self.free_loops > 0 or not self.graph.is_connected

    @cached_property
    def n_components(self) -> int:
        return len(strand_components(self)) + self.free_loops

    def check(self, require_connected: bool = True) -> "Diagram":
        """Raise unless the rotation system is planar (and connected)."""
        if self.crossings and not self.graph.euler_ok():
            raise NonPlanarError("rotation system is not planar (Euler check failed)")
        if require_connected and self.is_split:
            raise DisconnectedError("projection is disconnected (split diagram)")
        return self

    def relabeled(self) -> "Diagram":
        """Arc labels renumbered 1..2n in order of first appearance."""
        new: dict[int, int] = {}
        out = []
        for c in self.crossings:
            row = []
            for x in c:
                if x not in new:
                    new[x] = len(new) + 1
                row.append(new[x])
            out.append(tuple(row))
        return Diagram(tuple(out), self.free_loops)

    def __str__(self):
        return serialize_pd(self)


def unknot(loops: int = 1) -> Diagram:
    return Diagram((), loops)


# ---------------------------------------------------------------- PD text

_WS = re.compile(r"(?:\s+|#[^\n]*)+")
_X = re.compile(r"X\[\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*\]")
_X_START = re.compile(r"X\[")
_PRAGMA = re.compile(r"#\s*free_loops\s*=\s*(\d+)")


def parse_pd(text: str, require_connected: bool = True) -> Diagram:
    """Parse whitespace-separated ``X[a,b,c,d]`` tokens (``#`` comments).

    Empty input is the crossing-free unknot. A ``# free_loops=k`` comment
    records crossing-free components (emitted by :func:`serialize_pd`).
    """
    pos = 0
    crossings = []
    free = 0
    pragma = _PRAGMA.search(text)
    if pragma:
        free = int(pragma.group(1))
    while pos < len(text):
        ws = _WS.match(text, pos)
        if ws:
            pos = ws.end()
            continue
        m = _X.match(text, pos)
        if m is None:
            if _X_START.match(text, pos):
                raise PDSyntaxError("crossing needs 4 positive integer slots", pos)
            raise PDSyntaxError(f"unexpected character {text[pos]!r}", pos)
        vals = tuple(int(g) for g in m.groups())
        if min(vals) < 1:
            raise PDSyntaxError("arc labels must be positive", pos)
        crossings.append(vals)
        pos = m.end()
    if not crossings and not pragma:
        free = 1
    d = Diagram(tuple(crossings), free)
    d = Diagram(tuple(sorted_relabel(d.crossings)), free)
    return d.check(require_connected)


def sorted_relabel(crossings):
    """Map arc labels to 1..2n preserving their order."""
    labels = sorted(_arc_counts(crossings))
    index = {x: i + 1 for i, x in enumerate(labels)}
    return [tuple(index[x] for x in c) for c in crossings]


def _occurrences(crossings):
    occ: dict[int, list[tuple[int, int]]] = {}
    for ci, c in enumerate(crossings):
        for s, x in enumerate(c):
            occ.setdefault(x, []).append((ci, s))
    return occ


def _other(occ, crossings, c, s):
    x = crossings[c][s]
    a, b = occ[x]
    return b if a == (c, s) else a


def strand_components(d: Diagram) -> list[list[tuple[int, int]]]:
    """Strand components as sequences of ``(crossing, entry slot)``.

    Strands go straight through crossings (slot s to slot s+2). Free loops
    are not included.
    """
    cr = d.crossings
    occ = _occurrences(cr)
    done = set()
    comps = []
    for c0 in range(len(cr)):
        for s0 in range(4):
            if (c0, s0) in done:
                continue
            comp = []
            c, s = c0, s0
            while (c, s) not in done:
                done.add((c, s))
                comp.append((c, s))
                out = (s + 2) % 4
                done.add((c, out))
                c, s = _other(occ, cr, c, out)
            comps.append(comp)
    return comps


def serialize_pd(d: Diagram) -> str:
    """Canonical PD text: crossings in traversal order, arcs 1..2n along strands.

    Traversal starts on the under-strand of crossing 0 entering at slot 0.
    Each further component is entered one slot counterclockwise from the
    strand already traversed at that crossing, and every crossing is rotated
    so its incoming under-strand sits in slot 0.
    """
    cr = d.crossings
    if not cr:
        return "" if d.free_loops == 1 else f"# free_loops={d.free_loops}\n"
    occ = _occurrences(cr)
    new_label: dict[tuple[int, int], int] = {}   # keyed by an occurrence of the arc
    under_in: dict[int, int] = {}
    over_in: dict[int, int] = {}
    order: list[int] = []
    traversed: set[tuple[int, int]] = set()

    def arc_key(c, s):
        return min(occ[cr[c][s]])

    def visit(c):
        if c not in order:
            order.append(c)

    def walk(c, s):
        nonlocal counter
        start = (c, s)
        key = arc_key(c, s)
        if key not in new_label:
            counter += 1
            new_label[key] = counter
        while True:
            visit(c)
            traversed.add((c, s))
            traversed.add((c, (s + 2) % 4))
            (under_in if s % 2 == 0 else over_in)[c] = s
            out = (s + 2) % 4
            key = arc_key(c, out)
            nxt = _other(occ, cr, c, out)
            if nxt == start:
                break
            if key not in new_label:
                counter += 1
                new_label[key] = counter
            c, s = nxt

    counter = 0
    walk(0, 0)
    while len(traversed) < 4 * len(cr):
        candidates = [c for c in order if any((c, s) not in traversed for s in range(4))]
        if candidates:
            c = candidates[0]
            if (c, 0) not in traversed:
                walk(c, (1 + over_in[c]) % 4)
            else:
                walk(c, (1 + under_in[c]) % 4)
        else:
            c = min(i for i in range(len(cr)) if (i, 0) not in traversed)
            walk(c, 0)
    parts = []
    for c in order:
        r = under_in[c]
        slots = [(r + k) % 4 for k in range(4)]
        labels = [new_label[arc_key(c, s)] for s in slots]
        parts.append("X[{},{},{},{}]".format(*labels))
    text = " ".join(parts)
    if d.free_loops:
        text += f" # free_loops={d.free_loops}"
    return text


def canonical_pd(d: Diagram) -> tuple[tuple[str, ...], int]:
    """Key identifying diagrams equal up to arc labels and crossing order.

    Each connected piece is serialized from every crossing and both
    directions of its under-strand; the least text represents the piece.
    """
    pieces = []
    if d.crossings:
        for comp in d.graph.components:
            cr = [d.crossings[c] for c in comp]
            best = None
            for i in range(len(cr)):
                for r in (0, 2):
                    first = cr[i][r:] + cr[i][:r]
                    text = serialize_pd(Diagram((first,) + tuple(cr[:i] + cr[i + 1:])))
                    if best is None or text < best:
                        best = text
            pieces.append(best)
    return tuple(sorted(pieces)), d.free_loops


# ---------------------------------------------------------------- Gauss code

_GAUSS = re.compile(r"([OU])(\d+)([+\-−])")
_GAUSS_SEP = re.compile(r"[\s,]+")


def parse_gauss(text: str) -> Diagram:
    """Signed over/under Gauss code of a one-component diagram.

    The sign of a crossing fixes its local rotation, so the PD code is
    determined; the code is realizable iff that rotation system is planar.
    """
    pos = 0
    seq = []
    while pos < len(text):
        sep = _GAUSS_SEP.match(text, pos)
        if sep:
            pos = sep.end()
            continue
        m = _GAUSS.match(text, pos)
        if m is None:
            raise GaussSyntaxError(f"unexpected character {text[pos]!r}", pos)
        sign = 1 if m.group(3) == "+" else -1
        seq.append((m.group(1), int(m.group(2)), sign, pos))
        pos = m.end()
    if not seq:
        return unknot()
    seen: dict[int, dict[str, tuple[int, int]]] = {}
    for p, (kind, k, sign, at) in enumerate(seq):
        entry = seen.setdefault(k, {})
        if kind in entry:
            raise GaussSyntaxError(f"crossing {k} passes {kind} twice", at)
        entry[kind] = (p, sign)
    for k, entry in seen.items():
        if len(entry) != 2:
            raise GaussSyntaxError(f"crossing {k} must appear once over and once under", 0)
        if entry["O"][1] != entry["U"][1]:
            raise GaussSyntaxError(f"crossing {k} has inconsistent signs", 0)
    try:
        return Diagram(tuple(_gauss_crossings(seq, seen))).check()
    except NonPlanarError as exc:
        raise UnrealizableGaussError(f"Gauss code is not realizable: {exc}") from None


def _gauss_crossings(seq, seen):
    n2 = len(seq)

    def arc_in(p):
        return (p - 1) % n2 + 1

    def arc_out(p):
        return p % n2 + 1

    out = []
    for k in sorted(seen, key=lambda k: seen[k]["U"][0]):
        pu, sign = seen[k]["U"]
        po, _ = seen[k]["O"]
        if sign > 0:
            out.append((arc_in(pu), arc_out(po), arc_out(pu), arc_in(po)))
        else:
            out.append((arc_in(pu), arc_in(po), arc_out(pu), arc_out(po)))
    return out


def parse_code(text: str, require_connected: bool = True) -> Diagram:
    """PD or Gauss text, detected by the presence of ``X[``."""
    body = re.sub(r"#[^\n]*", "", text)
    if "X" in body or not body.strip():
        return parse_pd(text, require_connected)
    return parse_gauss(text)


# ---------------------------------------------------------------- operations


def apply_assignment(d: Diagram, assignment) -> Diagram:
    """Apply one :class:`CrossingState` per crossing and normalise labels."""
    states = [CrossingState(a) for a in assignment]
    if len(states) != d.n:
        raise ValueError(f"need {d.n} crossing states, got {len(states)}")
    parent: dict[int, int] = {}

    def find(x):
        parent.setdefault(x, x)
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    kept = []
    for c, st in zip(d.crossings, states):
        a, b, cc, dd = c
        if st == CrossingState.KEEP:
            kept.append(c)
        elif st == CrossingState.EXCHANGE:
            kept.append((b, cc, dd, a))
        else:
            pairs = ((a, b), (cc, dd)) if st == CrossingState.SMOOTH_A else ((a, dd), (b, cc))
            for x, y in pairs:
                rx, ry = find(x), find(y)
                if rx != ry:
                    parent[rx] = ry
    touched = {find(x) for c in kept for x in c}
    all_roots = {find(x) for c in d.crossings for x in c}
    loops = len(all_roots - touched)
    new = Diagram(tuple(tuple(find(x) for x in c) for c in kept), d.free_loops + loops)
    return new.relabeled()


def mirror(d: Diagram) -> Diagram:
    return apply_assignment(d, [CrossingState.EXCHANGE] * d.n)


@dataclass(frozen=True, eq=False)
class Projection:
    """A diagram without over/under data: crossings up to rotation.

    Two projections compare equal when their plane graphs are isomorphic
    (orientation of the sphere kept) and they carry the same free loops.
    """

    crossings: tuple[tuple[int, int, int, int], ...]
    free_loops: int = 0

    @property
    def n(self) -> int:
        return len(self.crossings)

    @cached_property
    def graph(self) -> PlaneMultigraph:
        return crossing_graph(self.crossings)[0]

    @cached_property
    def slot_of_dart(self) -> list[tuple[int, int]]:
        return crossing_graph(self.crossings)[1]

    @property
    def is_connected(self) -> bool:
        if not self.crossings:
            return self.free_loops <= 1
        return self.free_loops == 0 and self.graph.is_connected

    @cached_property
    def key(self) -> tuple:
        code = canonical_code(self.graph, mirror=False) if self.crossings else ()
        return code, self.free_loops

    def __eq__(self, other):
        return isinstance(other, Projection) and self.key == other.key

    def __hash__(self):
        return hash(self.key)


def _min_rotation(c):
    return min(tuple(c[(i + k) % 4] for k in range(4)) for i in range(4))


def projection(d: Diagram) -> Projection:
    return Projection(tuple(_min_rotation(c) for c in d.crossings), d.free_loops)


def connected_sum(d1: Diagram, d2: Diagram) -> Diagram:
    """Band the least arc of d1 to the least arc of d2 (a planar connected sum)."""
    if not d1.crossings or not d2.crossings:
        return d1 if not d2.crossings else d2
    shift = max(x for c in d1.crossings for x in c)
    c2 = [tuple(x + shift for x in c) for c in d2.crossings]
    a1 = min(x for c in d1.crossings for x in c)
    a2 = min(x for c in c2 for x in c)
    fresh = max(x for c in c2 for x in c) + 1
    occ1 = _occurrences(d1.crossings)[a1]
    occ2 = _occurrences(c2)[a2]
    for swap in (False, True):
        cr1 = [list(c) for c in d1.crossings]
        cr2 = [list(c) for c in c2]
        (ci, si) = occ1[1]
        cr1[ci][si] = fresh
        q = occ2[1] if swap else occ2[0]
        qq = occ2[0] if swap else occ2[1]
        cr2[q[0]][q[1]] = fresh
        cr2[qq[0]][qq[1]] = a1
        cand = Diagram(tuple(tuple(c) for c in cr1 + cr2))
        if cand.graph.euler_ok():
            return cand.relabeled()
    raise AssertionError("no planar banding found")
