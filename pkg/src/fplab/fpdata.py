"""Fixed point data: weight multisets at the isolated fixed points of a circle action.

The module also holds the two cheapest structural filters (weight balance
and N-profile adjacency) and the canonical form used everywhere for
equality up to relabelling, reversal of the action and rescaling.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from functools import reduce
from math import gcd
from typing import Iterable, Sequence

from fplab.verdict import FilterVerdict, fail, ok


class ParseError(ValueError):
    """Malformed fixed point data document."""


class MalformedDocument(ParseError):
    pass


class ZeroWeight(ParseError):
    pass


class ArityMismatch(ParseError):
    pass


class DuplicateLabel(ParseError):
    pass


class EmptyData(ParseError):
    pass


WeightMultiset = tuple  # sorted tuple of nonzero ints


def weight_multiset(weights: Iterable[int]) -> WeightMultiset:
    ws = tuple(sorted(int(w) for w in weights))
    if any(w == 0 for w in ws):
        raise ZeroWeight("weights must be nonzero")
    return ws


@dataclass(frozen=True)
class FixedPoint:
    label: str
    weights: WeightMultiset

    def __post_init__(self):
        object.__setattr__(self, "weights", weight_multiset(self.weights))

    @property
    def n_negative(self) -> int:
        return sum(1 for w in self.weights if w < 0)


@dataclass(frozen=True)
class FixedPointData:
    """A collection of weight multisets, one per fixed point, all of size ``n``."""

    n: int
    points: tuple

    def __post_init__(self):
        pts = tuple(p if isinstance(p, FixedPoint) else FixedPoint(*p) for p in self.points)
        object.__setattr__(self, "points", pts)
        if self.n < 1:
            raise MalformedDocument("n must be a positive integer")
        if not pts:
            raise EmptyData("at least one fixed point is required")
        labels = [p.label for p in pts]
        if len(set(labels)) != len(labels):
            raise DuplicateLabel("fixed point labels must be distinct")
        for p in pts:
            if len(p.weights) != self.n:
                raise ArityMismatch(
                    f"point {p.label!r} has {len(p.weights)} weights, expected {self.n}")

    @classmethod
    def from_weights(cls, weight_lists: Sequence[Sequence[int]], labels=None) -> "FixedPointData":
        """Build data from bare weight lists, labelling points p1, p2, ..."""
        weight_lists = [list(w) for w in weight_lists]
        if not weight_lists:
            raise EmptyData("at least one fixed point is required")
        if labels is None:
            labels = [f"p{i + 1}" for i in range(len(weight_lists))]
        return cls(len(weight_lists[0]), tuple(
            FixedPoint(lab, ws) for lab, ws in zip(labels, weight_lists)))

    @property
    def k(self) -> int:
        return len(self.points)

    @property
    def weight_lists(self) -> list:
        return [p.weights for p in self.points]

    def all_weights(self) -> list:
        return [w for p in self.points for w in p.weights]

    def max_abs_weight(self) -> int:
        return max(abs(w) for w in self.all_weights())

    def weight_gcd(self) -> int:
        return reduce(gcd, (abs(w) for w in self.all_weights()), 0)

    def __str__(self):
        return ", ".join("{" + ",".join(map(str, p.weights)) + "}" for p in self.points)


# --------------------------------------------------------------------------
# symmetries
# --------------------------------------------------------------------------

def reverse(d: FixedPointData) -> FixedPointData:
    """Reverse the circle action: every weight changes sign."""
    return FixedPointData(d.n, tuple(
        FixedPoint(p.label, tuple(-w for w in p.weights)) for p in d.points))


def scale(d: FixedPointData, c: int) -> FixedPointData:
    """Multiply every weight by the positive integer c."""
    if c < 1:
        raise ValueError("scale factor must be positive")
    return FixedPointData(d.n, tuple(
        FixedPoint(p.label, tuple(c * w for w in p.weights)) for p in d.points))


def divide_out_gcd(d: FixedPointData) -> FixedPointData:
    """Quotient by the subgroup acting trivially, so the weights have gcd 1."""
    g = d.weight_gcd()
    if g <= 1:
        return d
    return FixedPointData(d.n, tuple(
        FixedPoint(p.label, tuple(w // g for w in p.weights)) for p in d.points))


def relabel(d: FixedPointData, labels: Sequence[str]) -> FixedPointData:
    return FixedPointData(d.n, tuple(
        FixedPoint(lab, p.weights) for lab, p in zip(labels, d.points)))


def point_key(weights: WeightMultiset) -> tuple:
    """Sort key for points: number of negative weights, then the sorted weights."""
    return (sum(1 for w in weights if w < 0), weights)


def _sorted_relabelled(n: int, weight_lists: Iterable[WeightMultiset]) -> FixedPointData:
    ordered = sorted(weight_lists, key=point_key)
    return FixedPointData(n, tuple(
        FixedPoint(f"p{i + 1}", ws) for i, ws in enumerate(ordered)))


def canonicalize(d: FixedPointData) -> FixedPointData:
    """Representative of d modulo rescaling, relabelling and reversal.

    Weights are divided by their collective gcd, points are sorted by
    (number of negative weights, weight multiset) and relabelled p1..pk, and
    of the two orientations the one with the smaller serialization wins.
    """
    g = d.weight_gcd()
    fwd = [tuple(w // g for w in p.weights) for p in d.points]
    a = _sorted_relabelled(d.n, fwd)
    b = _sorted_relabelled(d.n, (tuple(sorted(-w for w in ws)) for ws in fwd))
    return a if serialize_data(a) <= serialize_data(b) else b


def canonical_key(d: FixedPointData) -> str:
    return serialize_data(canonicalize(d))


def canonically_equal(a: FixedPointData, b: FixedPointData) -> bool:
    return a.n == b.n and a.k == b.k and canonical_key(a) == canonical_key(b)


# --------------------------------------------------------------------------
# invariants and the two structural filters
# --------------------------------------------------------------------------

def n_profile(d: FixedPointData) -> tuple:
    """(N^0, ..., N^n): how many points have exactly i negative weights."""
    counts = [0] * (d.n + 1)
    for p in d.points:
        counts[p.n_negative] += 1
    return tuple(counts)


def weight_imbalance(d: FixedPointData) -> dict:
    """w > 0 -> (#occurrences of +w) - (#occurrences of -w), nonzero entries only."""
    c = Counter(d.all_weights())
    keys = {abs(w) for w in c}
    return {w: c[w] - c[-w] for w in sorted(keys) if c[w] != c[-w]}


def weight_balance_check(d: FixedPointData) -> FilterVerdict:
    imbalance = weight_imbalance(d)
    if not imbalance:
        return ok("balance")
    w = min(imbalance)
    c = Counter(d.all_weights())
    return fail("balance", {"w": w, "count_plus": c[w], "count_minus": c[-w]},
                f"weight {w} occurs {c[w]} times but {-w} occurs {c[-w]} times")


def adjacency_check(d: FixedPointData) -> FilterVerdict:
    prof = n_profile(d)
    for i in range(d.n):
        if prof[i] and prof[i + 1]:
            return ok("adjacency", certificate={"i": i})
    return fail("adjacency", {"profile": list(prof)},
                "no i with N^i and N^(i+1) both nonzero")


# --------------------------------------------------------------------------
# JSON interchange
# --------------------------------------------------------------------------

def to_document(d: FixedPointData) -> dict:
    return {"n": d.n, "points": [{"label": p.label, "weights": list(p.weights)}
                                 for p in d.points]}


def serialize_data(d: FixedPointData) -> str:
    """Deterministic compact JSON text."""
    return json.dumps(to_document(d), separators=(",", ":"))


def _is_int(x) -> bool:
    return isinstance(x, int) and not isinstance(x, bool)


def from_document(doc) -> FixedPointData:
    if not isinstance(doc, dict):
        raise MalformedDocument("top level must be an object")
    if "n" not in doc or "points" not in doc:
        raise MalformedDocument("document needs keys 'n' and 'points'")
    n = doc["n"]
    if not _is_int(n) or n < 1:
        raise MalformedDocument("'n' must be a positive integer")
    pts = doc["points"]
    if not isinstance(pts, list):
        raise MalformedDocument("'points' must be a list")
    if not pts:
        raise EmptyData("at least one fixed point is required")
    out = []
    for idx, p in enumerate(pts):
        if not isinstance(p, dict) or "weights" not in p:
            raise MalformedDocument(f"point #{idx} must be an object with 'weights'")
        label = p.get("label", f"p{idx + 1}")
        if not isinstance(label, str):
            raise MalformedDocument(f"point #{idx} label must be a string")
        ws = p["weights"]
        if not isinstance(ws, list) or not all(_is_int(w) for w in ws):
            raise MalformedDocument(f"point {label!r} weights must be a list of integers")
        if any(w == 0 for w in ws):
            raise ZeroWeight(f"point {label!r} has a zero weight")
        if len(ws) != n:
            raise ArityMismatch(f"point {label!r} has {len(ws)} weights, expected {n}")
        out.append(FixedPoint(label, tuple(ws)))
    return FixedPointData(n, tuple(out))


def parse_data(text: str) -> FixedPointData:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedDocument(f"invalid JSON: {exc}") from None
    return from_document(doc)
