"""Deciders for D ~> T(2,m) and D ~> Twist(m), and the exhaustive oracle.

Reachability by exchanges and smoothings is represented by one
:class:`CrossingState` per crossing (4^n assignments). The oracle evaluates
the bracket of every assignment at once with a tensor transform over the
2^n smoothing states, prefilters by the unit-normalised bracket and confirms
candidates with a full signature.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from leadsto import kernels
from leadsto.diagram import (
    CrossingState,
    Diagram,
    apply_assignment,
    canonical_pd,
    projection,
    serialize_pd,
)
from leadsto.invariants import (
    BudgetExceeded,
    InvariantSignature,
    LaurentPoly,
    Target,
    Torus2,
    Twist,
    reference_signature,
    signature_of,
)
from leadsto.planegraph import (
    MinorWitness,
    find_bond_minor,
    find_bplus_minor,
    find_cplus_minor,
    find_cycle_minor,
    verify_minor_witness,
)
from leadsto.tait import is_torus_minimal_projection, strong_decomposition, tait_graphs

__all__ = [
    "YES",
    "NO",
    "UNDECIDED",
    "DEFAULT_ORACLE_BUDGET",
    "MinorCertificate",
    "AssignmentCertificate",
    "StructuralNo",
    "PartDecision",
    "Decision",
    "oracle_decide",
    "oracle_report",
    "decide_torus",
    "decide_twist",
    "decide",
    "combine_parts",
    "verify_decision",
    "sequence_closure",
    "assignment_closure",
]

YES, NO, UNDECIDED = "yes", "no", "undecided-budget"
DEFAULT_ORACLE_BUDGET = 10
SCHEMA = "leadsto.decision/1"
_CHUNK_AXES = 8


def default_budget() -> int:
    env = os.environ.get("LEADSTO_BUDGET")
    return int(env) if env else DEFAULT_ORACLE_BUDGET


# ---------------------------------------------------------------- certificates


@dataclass(frozen=True)
class MinorCertificate:
    graph: str                    # "gray" or "white"
    witness: MinorWitness

    kind = "minor-witness"

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "tait_graph": self.graph,
            "minor": self.witness.name,
            "witness": self.witness.to_json(),
            "chain": "target is a minor of a Tait graph of the part",
        }


@dataclass(frozen=True)
class AssignmentCertificate:
    states: tuple[CrossingState, ...]
    result: Diagram

    kind = "assignment"

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "states": [s.name.lower() for s in self.states],
            "result_pd": serialize_pd(self.result),
            "identified": "invariant-level",
        }


@dataclass(frozen=True)
class StructuralNo:
    reason: str                   # "torus-minimal-projection" | "exhausted-assignments"

    kind = "structural-no"

    def to_json(self) -> dict:
        return {"kind": self.kind, "reason": self.reason}


@dataclass(frozen=True)
class PartDecision:
    diagram: Diagram
    answer: str
    certificate: object = None
    via: str = ""                 # "empty-sequence" | "minor" | "oracle" | "structural"

    def to_json(self) -> dict:
        return {
            "crossings": self.diagram.n,
            "pd": serialize_pd(self.diagram),
            "answer": self.answer,
            "certificate": None if self.certificate is None else self.certificate.to_json(),
        }


@dataclass(frozen=True)
class Decision:
    answer: str
    target: Target
    parts: tuple[PartDecision, ...] = ()
    responsible: int | None = None  # index into parts
    notes: tuple[str, ...] = field(default=())

    @property
    def certificate(self):
        if self.responsible is None:
            return None
        return self.parts[self.responsible].certificate

    @property
    def via(self) -> str:
        return "" if self.responsible is None else self.parts[self.responsible].via

    def to_json(self) -> dict:
        cert = self.certificate
        doc = {
            "schema": SCHEMA,
            "answer": self.answer,
            "target": self.target.to_json(),
            "parts": [p.to_json() for p in self.parts],
            "certificate": None if cert is None else dict(cert.to_json(), part=self.responsible),
        }
        if self.notes:
            doc["notes"] = list(self.notes)
        return doc


def combine_parts(parts, target: Target, notes=()) -> Decision:
    """Yes if any part is yes; undecided if any undecided; otherwise no."""
    parts = tuple(parts)
    for answer in (YES, UNDECIDED, NO):
        for i, p in enumerate(parts):
            if p.answer == answer:
                resp = i if p.certificate is not None else None
                return Decision(answer, target, parts, resp, tuple(notes))
    return Decision(NO, target, parts, None, tuple(notes))


# ---------------------------------------------------------------- oracle


def _poly_vec(p: LaurentPoly, offset: int, size: int) -> np.ndarray:
    v = np.zeros(size, dtype=np.int64)
    for e, c in p.terms:
        v[e + offset] = c
    return v


def _expand_first_axis(arr: np.ndarray, state: int | None = None) -> np.ndarray:
    """Replace the leading smoothing axis (size 2) by crossing states.

    With ``state`` given only that state is kept and the axis disappears;
    otherwise a new axis of size 4 is appended just before the polynomial
    axis, so repeated calls keep crossing 0 most significant.
    """
    v0, v1 = arr[0], arr[1]
    if state == CrossingState.SMOOTH_A:
        return v0
    if state == CrossingState.SMOOTH_B:
        return v1
    keep = state is None or state == CrossingState.KEEP
    exch = state is None or state == CrossingState.EXCHANGE
    rows = []
    if keep:                          # A * v0 + A^-1 * v1
        k = np.zeros_like(v0)
        k[..., 1:] += v0[..., :-1]
        k[..., :-1] += v1[..., 1:]
        rows.append(k)
    if exch:                          # A^-1 * v0 + A * v1
        x = np.zeros_like(v0)
        x[..., :-1] += v0[..., 1:]
        x[..., 1:] += v1[..., :-1]
        rows.append(x)
    if state is not None:
        return rows[0]
    out = np.empty(v0.shape[:-1] + (4, v0.shape[-1]), dtype=v0.dtype)
    out[..., 0, :] = rows[0]
    out[..., 1, :] = rows[1]
    out[..., 2, :] = v0
    out[..., 3, :] = v1
    return out


def _state_tensor(d: Diagram):
    """Brackets of all full smoothings as a (2,)*n + (P,) integer tensor."""
    n = d.n
    slots = np.array(d.relabeled().crossings, dtype=np.int32) - 1
    loops = kernels.loop_counts(slots, 2 * n).astype(np.int64) + d.free_loops
    max_loops = int(loops.max())
    offset = 2 * max_loops + n + 2
    size = 2 * offset + 1
    delta = LaurentPoly.from_dict({2: -1, -2: -1})
    basis = np.stack([_poly_vec(delta ** max(k - 1, 0), offset, size) for k in range(max_loops + 1)])
    table = basis[loops]
    # state index bit i is crossing i; Fortran order makes axis i crossing i
    return table.reshape((2,) * n + (size,), order="F")


_HASH_P = 33_554_393               # prime below 2^25; keeps the matmul below 2^63
_HASH_X = 1_000_003 % _HASH_P


def _unit_keys(block: np.ndarray) -> np.ndarray:
    """A hash of each row that ignores shifts and sign (unit normalisation).

    Row ``c`` maps to ``sign * x^-first * sum c_i x^i (mod p)``; equal
    unit-normalised brackets get equal keys, and every key hit is confirmed
    exactly afterwards.
    """
    width = block.shape[1]
    pows = np.array([pow(_HASH_X, i, _HASH_P) for i in range(width)], dtype=np.int64)
    inv = np.array([pow(_HASH_X, -i, _HASH_P) for i in range(width)], dtype=np.int64)
    total = (block % _HASH_P) @ pows % _HASH_P
    nz = block != 0
    first = np.argmax(nz, axis=1)
    lead = block[np.arange(block.shape[0]), first]
    keys = total * inv[first] % _HASH_P
    return np.where(lead < 0, (-keys) % _HASH_P, keys)


def _bracket_blocks(d: Diagram):
    """Yield (prefix states, unit-normalised bracket keys of all completions)."""
    tensor = _state_tensor(d)
    n = d.n
    k = max(0, n - _CHUNK_AXES)
    for prefix in itertools.product(range(4), repeat=k):
        sub = tensor
        for s in prefix:
            sub = _expand_first_axis(sub, s)
        for _ in range(n - k):
            sub = _expand_first_axis(sub)
        yield prefix, _unit_keys(sub.reshape(-1, sub.shape[-1]))


@lru_cache(maxsize=4)
def _cached_blocks(d: Diagram):
    return list(_bracket_blocks(d))


def _blocks(d: Diagram):
    return _cached_blocks(d) if d.n <= _CHUNK_AXES else _bracket_blocks(d)


def _target_keys(sig: InvariantSignature) -> np.ndarray:
    keys = []
    for p in sig.polys:
        u = p.unit_normalized()
        v = np.zeros((1, u.terms[-1][0] + 1), dtype=np.int64)
        for e, c in u.terms:
            v[0, e] = c
        keys.append(int(_unit_keys(v)[0]))
    return np.array(keys, dtype=np.int64)


def _matches(result: Diagram, ref: InvariantSignature) -> bool:
    if result.is_split or result.n_components != ref.components:
        return False
    return signature_of(result) == ref


def _target_signature(target) -> InvariantSignature:
    if isinstance(target, Diagram):
        return signature_of(target)
    return reference_signature(target)


@lru_cache(maxsize=4096)
def _least_assignment(d: Diagram, ref: InvariantSignature):
    if d.n == 0:
        return () if _matches(d, ref) else None
    r = min(d.n, _CHUNK_AXES)
    for prefix, block in _blocks(d):
        hit = np.isin(block, _target_keys(ref))
        for idx in np.flatnonzero(hit):
            rest = np.unravel_index(int(idx), (4,) * r)
            states = tuple(CrossingState(int(s)) for s in tuple(prefix) + tuple(rest))
            if _matches(apply_assignment(d, states), ref):
                return states
    return None


def oracle_decide(d: Diagram, target, budget: int | None = None) -> PartDecision:
    """Exhaustive 4^n search for the least assignment reaching the target."""
    budget = default_budget() if budget is None else budget
    if d.n > budget:
        return PartDecision(d, UNDECIDED, None, "oracle")
    states = _least_assignment(d, _target_signature(target))
    if states is None:
        return PartDecision(d, NO, StructuralNo("exhausted-assignments"), "oracle")
    return PartDecision(d, YES, AssignmentCertificate(states, apply_assignment(d, states)), "oracle")


@dataclass(frozen=True)
class OracleEntry:
    signature: InvariantSignature
    count: int
    representative: tuple[CrossingState, ...]
    split: bool


def oracle_report(d: Diagram, budget: int | None = None) -> list[OracleEntry]:
    """Distinct signatures reached over all 4^n assignments, with counts."""
    budget = default_budget() if budget is None else budget
    if d.n > budget:
        raise BudgetExceeded(f"{d.n} crossings exceeds oracle budget {budget}")
    found: dict[tuple, list] = {}
    for states in itertools.product(list(CrossingState), repeat=d.n):
        res = apply_assignment(d, states)
        sig = signature_of(res)
        key = (sig, res.is_split)
        if key in found:
            found[key][0] += 1
        else:
            found[key] = [1, states]
    return [OracleEntry(sig, c, rep, split) for (sig, split), (c, rep) in found.items()]


# ---------------------------------------------------------------- closures


def _key(d: Diagram):
    return canonical_pd(d)


def assignment_closure(d: Diagram) -> set:
    return {_key(apply_assignment(d, a)) for a in itertools.product(list(CrossingState), repeat=d.n)}


def sequence_closure(d: Diagram) -> set:
    """Diagrams reachable by single exchanges and smoothings (BFS)."""
    start = d.relabeled()
    seen = {_key(start)}
    todo = [start]
    while todo:
        cur = todo.pop()
        for i in range(cur.n):
            for op in (CrossingState.EXCHANGE, CrossingState.SMOOTH_A, CrossingState.SMOOTH_B):
                states = [CrossingState.KEEP] * cur.n
                states[i] = op
                nxt = apply_assignment(cur, states)
                k = _key(nxt)
                if k not in seen:
                    seen.add(k)
                    todo.append(nxt)
    return seen


# ---------------------------------------------------------------- structural


def _empty_sequence(d: Diagram, target: Target) -> PartDecision | None:
    try:
        if _matches(d, reference_signature(target)):
            states = (CrossingState.KEEP,) * d.n
            return PartDecision(d, YES, AssignmentCertificate(states, d), "empty-sequence")
    except BudgetExceeded:
        pass
    return None


def _search_minors(part: Diagram, searches) -> PartDecision | None:
    pair = tait_graphs(part)
    for name, g in (("gray", pair.gray), ("white", pair.white)):
        for search in searches:
            w = search(g)
            if w is not None:
                return PartDecision(part, YES, MinorCertificate(name, w), "minor")
    return None


def _decide(d: Diagram, target: Target, part_rule, budget, notes=()) -> Decision:
    hit = _empty_sequence(d, target)
    if hit is not None:
        return Decision(YES, target, (hit,), 0, tuple(notes))
    if d.n == 0:
        return combine_parts([oracle_decide(d, target, budget)], target, notes)
    parts = []
    for part in strong_decomposition(d):
        dec = part_rule(part)
        if dec is None:
            dec = oracle_decide(part, target, budget)
        parts.append(dec)
        if dec.answer == YES:
            break
    return combine_parts(parts, target, notes)


def decide_torus(d: Diagram, m: int, budget: int | None = None) -> Decision:
    if m < 3:
        raise ValueError("decide_torus needs m >= 3")
    searches = (lambda g: find_cycle_minor(g, m), lambda g: find_bond_minor(g, m))
    return _decide(d, Torus2(m), lambda part: _search_minors(part, searches), budget)


def decide_twist(d: Diagram, m: int, budget: int | None = None) -> Decision:
    if m == 3:
        dec = decide_torus(d, 3, budget)
        note = "twist knot with 3 crossings is T(2,3); decided as a torus target"
        return Decision(dec.answer, Twist(3), dec.parts, dec.responsible, dec.notes + (note,))
    if m < 3:
        raise ValueError("decide_twist needs m >= 3")
    searches = (lambda g: find_cplus_minor(g, m - 1), lambda g: find_bplus_minor(g, m - 1))

    def rule(part):
        if is_torus_minimal_projection(projection(part)) is not None:
            return PartDecision(part, NO, StructuralNo("torus-minimal-projection"), "structural")
        return _search_minors(part, searches)

    return _decide(d, Twist(m), rule, budget)


def decide(d: Diagram, target: Target, budget: int | None = None) -> Decision:
    if target.family == "torus":
        return decide_torus(d, target.m, budget)
    return decide_twist(d, target.m, budget)


def verify_decision(dec: Decision) -> bool:
    """Re-check a yes certificate independently of the search that made it."""
    if dec.answer != YES:
        return True
    part = dec.parts[dec.responsible]
    cert = part.certificate
    if isinstance(cert, MinorCertificate):
        pair = tait_graphs(part.diagram)
        g = pair.gray if cert.graph == "gray" else pair.white
        want = {"torus": ("C", "B"), "twist": ("C+", "B+")}[dec.target.family]
        k = dec.target.m if dec.target.family == "torus" else dec.target.m - 1
        if dec.target.family == "twist" and dec.target.m == 3:
            want, k = ("C", "B"), 3
        return cert.witness.target in want and cert.witness.k == k and verify_minor_witness(g, cert.witness)
    if isinstance(cert, AssignmentCertificate):
        res = apply_assignment(part.diagram, cert.states)
        return _matches(res, reference_signature(_torus_alias(dec.target)))
    return False


def _torus_alias(t: Target) -> Target:
    return Torus2(3) if (t.family == "twist" and t.m == 3) else t
