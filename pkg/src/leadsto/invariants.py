"""Kauffman bracket, writhe and mirror-agnostic link signatures.

Signatures identify links up to the resolution of the normalised bracket:
two diagrams of the same unoriented link always get the same signature,
and the targets this package cares about are checked to be pairwise
distinct. Equal signatures are reported as "identified (invariant-level)".
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from leadsto import kernels
from leadsto.diagram import Diagram, strand_components
from leadsto.tait import torus_diagram, twist_diagram

__all__ = [
    "LaurentPoly",
    "BudgetExceeded",
    "InvariantSignature",
    "Target",
    "Torus2",
    "Twist",
    "DEFAULT_BRACKET_BUDGET",
    "kauffman_bracket",
    "bracket_state_sum",
    "writhe",
    "writhes",
    "normalized_bracket",
    "signature_of",
    "reference_signature",
    "signature_table",
]

DEFAULT_BRACKET_BUDGET = 16


class BudgetExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class LaurentPoly:
    """Integer Laurent polynomial in A, stored as sorted (exponent, coeff) pairs."""

    terms: tuple[tuple[int, int], ...] = ()

    @classmethod
    def from_dict(cls, d) -> "LaurentPoly":
        return cls(tuple(sorted((int(e), int(c)) for e, c in d.items() if c)))

    @classmethod
    def monomial(cls, exp: int, coeff: int = 1) -> "LaurentPoly":
        return cls.from_dict({exp: coeff})

    def as_dict(self) -> dict[int, int]:
        return dict(self.terms)

    def __add__(self, other):
        out = self.as_dict()
        for e, c in other.terms:
            out[e] = out.get(e, 0) + c
        return LaurentPoly.from_dict(out)

    def __neg__(self):
        return LaurentPoly(tuple((e, -c) for e, c in self.terms))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return LaurentPoly.from_dict({e: c * other for e, c in self.terms})
        out: dict[int, int] = {}
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly.from_dict(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = LaurentPoly.monomial(0)
        for _ in range(k):
            out = out * self
        return out

    def shift(self, k: int) -> "LaurentPoly":
        return LaurentPoly(tuple((e + k, c) for e, c in self.terms))

    def inverted(self) -> "LaurentPoly":
        """Substitute A -> A^-1."""
        return LaurentPoly(tuple(sorted((-e, c) for e, c in self.terms)))

    def unit_normalized(self) -> "LaurentPoly":
        """Shift so the least exponent is 0 and make the leading coefficient positive."""
        if not self.terms:
            return self
        p = self.shift(-self.terms[0][0])
        return -p if p.terms[0][1] < 0 else p

    def evaluate(self, a: float) -> float:
        return sum(c * a ** e for e, c in self.terms)

    def __bool__(self):
        return bool(self.terms)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in sorted(self.terms, reverse=True):
            mono = "" if e == 0 else ("A" if e == 1 else f"A^{e}")
            coef = str(c) if (abs(c) != 1 or not mono) else ("-" if c < 0 else "")
            parts.append(f"{coef}{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    def to_json(self) -> list[list[int]]:
        return [[e, c] for e, c in self.terms]


ONE = LaurentPoly.monomial(0)
A = LaurentPoly.monomial(1)
A_INV = LaurentPoly.monomial(-1)
DELTA = LaurentPoly.from_dict({2: -1, -2: -1})


def _check_budget(d: Diagram, budget):
    budget = DEFAULT_BRACKET_BUDGET if budget is None else budget
    if d.n > budget:
        raise BudgetExceeded(f"{d.n} crossings exceeds bracket budget {budget}")


def kauffman_bracket(d: Diagram, budget: int | None = None) -> LaurentPoly:
    """Bracket by the skein recursion <X> = A<smoothA> + A^-1<smoothB>."""
    _check_budget(d, budget)
    loops = d.free_loops
    if not d.crossings:
        return DELTA ** (loops - 1)
    memo: dict = {}
    return _skein(tuple(d.crossings), loops, memo)


def _smooth(crossings, pairs):
    """Join the arc pairs; return the remaining crossings and closed loops."""
    rest = list(crossings)
    loops = 0
    pairs = [list(p) for p in pairs]
    for i, (x, y) in enumerate(pairs):
        if x == y:
            loops += 1
            continue
        rest = [tuple(x if v == y else v for v in c) for c in rest]
        for p in pairs[i + 1:]:
            p[:] = [x if v == y else v for v in p]
    return tuple(rest), loops


def _skein(crossings, loops, memo):
    if not crossings:
        return DELTA ** (loops - 1)
    key = (crossings, loops)
    hit = memo.get(key)
    if hit is not None:
        return hit
    a, b, c, d = crossings[-1]
    rest = crossings[:-1]
    ra, la = _smooth(rest, ((a, b), (c, d)))
    rb, lb = _smooth(rest, ((a, d), (b, c)))
    out = A * _skein(ra, loops + la, memo) + A_INV * _skein(rb, loops + lb, memo)
    memo[key] = out
    return out


def bracket_state_sum(d: Diagram, budget: int | None = None) -> LaurentPoly:
    """Bracket as the sum over all 2^n smoothing states (compiled loop counter)."""
    _check_budget(d, budget)
    n = d.n
    if n == 0:
        return DELTA ** (d.free_loops - 1)
    slots = np.array(d.relabeled().crossings, dtype=np.int32) - 1
    loops = kernels.loop_counts(slots, 2 * n).astype(np.int64) + d.free_loops
    states = np.arange(1 << n, dtype=np.int64)
    b_count = np.zeros(1 << n, dtype=np.int64)
    for i in range(n):
        b_count += (states >> i) & 1
    hist: dict[tuple[int, int], int] = {}
    keys, counts = np.unique(np.stack([b_count, loops]), axis=1, return_counts=True)
    for (k, lp), cnt in zip(keys.T.tolist(), counts.tolist()):
        hist[(k, lp)] = hist.get((k, lp), 0) + cnt
    delta_pows: dict[int, LaurentPoly] = {}
    total: dict[int, int] = {}
    for (k, lp), cnt in hist.items():
        if lp not in delta_pows:
            delta_pows[lp] = DELTA ** (lp - 1)
        shift = n - 2 * k
        for e, c in delta_pows[lp].terms:
            total[e + shift] = total.get(e + shift, 0) + c * cnt
    return LaurentPoly.from_dict(total)


def _crossing_sign(under_in: int, over_in: int) -> int:
    if under_in == 2:
        over_in = (over_in + 2) % 4
    return 1 if over_in == 3 else -1


def writhes(d: Diagram) -> list[int]:
    """Writhe for each relative orientation (first component fixed)."""
    comps = strand_components(d)
    if not comps:
        return [0]
    out = []
    for flips in itertools.product((0, 1), repeat=len(comps) - 1):
        flips = (0,) + flips
        under: dict[int, int] = {}
        over: dict[int, int] = {}
        for comp, f in zip(comps, flips):
            for c, s in comp:
                entry = (s + 2) % 4 if f else s
                (under if entry % 2 == 0 else over)[c] = entry
        out.append(sum(_crossing_sign(under[c], over[c]) for c in range(d.n)))
    return out


def writhe(d: Diagram) -> int:
    """Writhe with every component oriented by the strand traversal."""
    return writhes(d)[0]


def normalized_bracket(bracket: LaurentPoly, w: int) -> LaurentPoly:
    """(-A^3)^(-w) <D>."""
    sign = -1 if w % 2 else 1
    return bracket.shift(-3 * w) * sign


@dataclass(frozen=True)
class InvariantSignature:
    """Component count plus the unordered pair {f(A), f(A^-1)}."""

    components: int
    polys: tuple[LaurentPoly, LaurentPoly]

    def to_json(self) -> dict:
        return {"components": self.components, "polys": [p.to_json() for p in self.polys]}

    @classmethod
    def from_json(cls, obj) -> "InvariantSignature":
        polys = tuple(LaurentPoly(tuple((int(e), int(c)) for e, c in p)) for p in obj["polys"])
        return cls(int(obj["components"]), polys)

    def __str__(self):
        return f"c={self.components} f={self.polys[0]}"


def signature_of(d: Diagram, budget: int | None = None) -> InvariantSignature:
    bracket = bracket_state_sum(d, budget)
    ws = writhes(d)
    fs = [normalized_bracket(bracket, w) for w in ws]
    f = min(p.terms for p in fs)
    g = min(p.inverted().terms for p in fs)
    pair = tuple(LaurentPoly(t) for t in sorted((f, g)))
    return InvariantSignature(len(strand_components(d)) + d.free_loops, pair)


@dataclass(frozen=True)
class Target:
    family: str   # "torus" or "twist"
    m: int

    def __post_init__(self):
        if self.family == "torus" and self.m < 2:
            raise ValueError("torus targets need m >= 2")
        if self.family == "twist" and self.m < 3:
            raise ValueError("twist targets need m >= 3")
        if self.family not in ("torus", "twist"):
            raise ValueError(f"unknown family {self.family!r}")

    def diagram(self) -> Diagram:
        return torus_diagram(self.m) if self.family == "torus" else twist_diagram(self.m)

    def to_json(self) -> dict:
        return {"family": self.family, "m": self.m}

    def __str__(self):
        return f"{'T(2,%d)' % self.m if self.family == 'torus' else 'Twist(%d)' % self.m}"


def Torus2(m: int) -> Target:  # noqa: N802 - reads like the family name
    return Target("torus", m)


def Twist(m: int) -> Target:  # noqa: N802
    return Target("twist", m)


@lru_cache(maxsize=None)
def reference_signature(target: Target) -> InvariantSignature:
    return signature_of(target.diagram())


def signature_table(targets) -> str:
    """JSON regression table of reference signatures."""
    rows = {f"{t.family}:{t.m}": reference_signature(t).to_json() for t in targets}
    return json.dumps(rows, sort_keys=True, indent=1)
