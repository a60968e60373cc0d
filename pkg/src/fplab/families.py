"""Parametric families of fixed point data and the worked examples.

The families are the classified lists for at most three fixed points, four
fixed points in dimensions 2, 4 and 6, and the named examples (Hirzebruch
surfaces, CP^3, the quadric, the 6-sphere, blow-ups, products of spheres).

Matching is done by comparing canonical forms against instances whose
parameters are bounded by the largest weight of the data; every parameter
of every family shows up (up to sign) as one of its weights, so the bound
loses nothing.  The Fano 3-fold family is generated for every positive a,
although manifolds realizing it are only known for a = 4 and 5.  Nothing
here says whether a given instance is realized by an actual manifold.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from itertools import product as cartesian

from fplab.fpdata import (
    FixedPoint,
    FixedPointData,
    canonical_key,
    divide_out_gcd,
    point_key,
)


class ParameterConstraintViolated(ValueError):
    pass


class UnknownExample(KeyError):
    pass


class FamilyId(str, enum.Enum):
    POINT = "Point"
    SPHERE = "Sphere"
    TWO_SPHERES = "TwoSpheres"
    CP2 = "CP2"
    S6 = "S6"
    T11 = "T11"
    T12_1 = "T12_1"
    T12_2 = "T12_2"
    T12_3 = "T12_3"
    T12_4 = "T12_4"
    T12_5 = "T12_5"
    T12_6 = "T12_6"


MATCH_ORDER = tuple(FamilyId)

# (half-dimension, fixed point count, parameter arity)
SHAPE = {
    FamilyId.POINT: (0, 1, 0),
    FamilyId.SPHERE: (1, 2, 1),
    FamilyId.TWO_SPHERES: (1, 4, 2),
    FamilyId.CP2: (2, 3, 2),
    FamilyId.S6: (3, 2, 2),
    FamilyId.T11: (2, 4, 3),
    FamilyId.T12_1: (3, 4, 3),
    FamilyId.T12_2: (3, 4, 2),
    FamilyId.T12_3: (3, 4, 1),
    FamilyId.T12_4: (3, 4, 4),
    FamilyId.T12_5: (3, 4, 2),
    FamilyId.T12_6: (3, 4, 2),
}

# Todd genus of the 6-dimensional families
TODD = {FamilyId.T12_1: 1, FamilyId.T12_2: 1, FamilyId.T12_3: 1,
        FamilyId.T12_4: 0, FamilyId.T12_5: 0, FamilyId.T12_6: 0}


def _weights(f: FamilyId, p: tuple) -> list:
    if f is FamilyId.SPHERE:
        (a,) = p
        return [[a], [-a]]
    if f is FamilyId.TWO_SPHERES:
        a, b = p
        return [[a], [-a], [b], [-b]]
    if f is FamilyId.CP2:
        a, b = p
        return [[a + b, a], [-a, b], [-b, -a - b]]
    if f is FamilyId.S6:
        a, b = p
        return [[-a - b, a, b], [-a, -b, a + b]]
    if f is FamilyId.T11:
        a, b, c = p
        return [[a, b], [-a, b], [-b, c], [-b, -c]]
    if f is FamilyId.T12_1:
        a, b, c = p
        return [[a, b, c], [-a, b - a, c - a], [-b, a - b, c - b], [-c, a - c, b - c]]
    if f is FamilyId.T12_2:
        a, b = p
        return [[a, a + b, a + 2 * b], [-a, b, a + 2 * b],
                [-a - 2 * b, -b, a], [-a - 2 * b, -a - b, -a]]
    if f is FamilyId.T12_3:
        (a,) = p
        return [[1, 2, 3], [-1, 1, a], [-1, -a, 1], [-1, -2, -3]]
    if f is FamilyId.T12_4:
        a, b, c, d = p
        return [[-a - b, a, b], [-c - d, c, d], [-a, -b, a + b], [-c, -d, c + d]]
    if f is FamilyId.T12_5:
        a, b = p
        return [[-3 * a - b, a, b], [-2 * a - b, 3 * a + b, 3 * a + 2 * b],
                [-a, -a - b, 2 * a + b], [-b, -3 * a - 2 * b, a + b]]
    if f is FamilyId.T12_6:
        a, b = p
        return [[-a - b, 2 * a + b, b], [-2 * a - b, a, b],
                [-b, -2 * a - b, a + b], [-a, -b, 2 * a + b]]
    raise ParameterConstraintViolated(f"{f.value} has no representable instance")


def check_parameters(f: FamilyId, params) -> tuple:
    f = FamilyId(f)
    params = tuple(int(x) for x in params)
    n, k, arity = SHAPE[f]
    if f is FamilyId.POINT:
        raise ParameterConstraintViolated(
            "a single fixed point forces M to be a point (dimension 0), which is not representable")
    if len(params) != arity:
        raise ParameterConstraintViolated(f"{f.value} takes {arity} parameters, got {len(params)}")
    if any(x < 1 for x in params):
        raise ParameterConstraintViolated("parameters must be positive integers")
    if f is FamilyId.T11:
        a, b, c = params
        if (a - c) % b and (a + c) % b:
            raise ParameterConstraintViolated(f"need a = c or a = -c mod b, got a={a} b={b} c={c}")
    if f is FamilyId.T12_1 and len(set(params)) != 3:
        raise ParameterConstraintViolated("a, b, c must be mutually distinct")
    return params


def family_instance(f, params) -> FixedPointData:
    f = FamilyId(f)
    params = check_parameters(f, params)
    return FixedPointData.from_weights(_weights(f, params))


# --------------------------------------------------------------------------
# matching
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class FamilyMatch:
    family: FamilyId
    parameters: tuple
    orientation: str  # "forward" or "reversed"

    def to_json(self) -> dict:
        return {"family": self.family.value, "params": list(self.parameters),
                "orientation": self.orientation}


def _oriented_key(d: FixedPointData) -> tuple:
    """Gcd-normalized, relabelling-invariant form without choosing an orientation."""
    e = divide_out_gcd(d)
    return (d.n, tuple(sorted((p.weights for p in e.points), key=point_key)))


@lru_cache(maxsize=None)
def _family_index(f: FamilyId, bound: int) -> dict:
    """Canonical key -> sorted parameter tuples, for instances with max |weight| == bound, gcd 1."""
    n, k, arity = SHAPE[f]
    index: dict = {}
    for params in cartesian(range(1, bound + 1), repeat=arity):
        try:
            d = family_instance(f, params)
        except ParameterConstraintViolated:
            continue
        if d.max_abs_weight() != bound or d.weight_gcd() != 1:
            continue
        index.setdefault(canonical_key(d), []).append(params)
    return index


def match_family(d: FixedPointData) -> list:
    """Families whose instances agree with d up to relabelling, reversal and rescaling.

    At most one match per family is reported: a forward one with the
    smallest parameters if it exists, otherwise the smallest reversed one.
    """
    e = divide_out_gcd(d)
    key = canonical_key(e)
    bound = e.max_abs_weight()
    fwd = _oriented_key(e)
    out = []
    for f in MATCH_ORDER:
        n, k, _ = SHAPE[f]
        if f is FamilyId.POINT or n != d.n or k != d.k:
            continue
        candidates = _family_index(f, bound).get(key)
        if not candidates:
            continue
        forward = [p for p in candidates if _oriented_key(family_instance(f, p)) == fwd]
        if forward:
            out.append(FamilyMatch(f, min(forward), "forward"))
        else:
            out.append(FamilyMatch(f, min(candidates), "reversed"))
    return out


def enumerate_family(f, max_weight: int) -> list:
    """Canonical instances of f with all |weights| <= max_weight and gcd 1."""
    f = FamilyId(f)
    seen = {}
    for bound in range(1, max_weight + 1):
        for key, params in _family_index(f, bound).items():
            seen.setdefault(key, params)
    return sorted(seen)


# --------------------------------------------------------------------------
# named examples
# --------------------------------------------------------------------------

def _require_positive(name, params):
    if any(x < 1 for x in params):
        raise ParameterConstraintViolated(f"{name}: parameters must be positive")


def hirzebruch(n: int, a: int, b: int) -> FixedPointData:
    _require_positive("hirzebruch", (a, b))
    ws = [[-a, b], [n * b - a, -b], [a, b], [a - n * b, -b]]
    if any(w == 0 for p in ws for w in p):
        raise ParameterConstraintViolated("hirzebruch: n*b == a gives a zero weight")
    return FixedPointData.from_weights(ws)


def cp3(a: int, b: int, c: int) -> FixedPointData:
    return family_instance(FamilyId.T12_1, (a, b, c))


def quadric(a: int, b: int) -> FixedPointData:
    _require_positive("quadric", (a, b))
    if a == b:
        raise ParameterConstraintViolated("quadric: a and b must be distinct")
    return FixedPointData.from_weights(
        [[-a, b - a, -b - a], [a, b + a, -b + a], [-b, a - b, -a - b], [b, a + b, -a + b]])


def s6(a: int, b: int) -> FixedPointData:
    return family_instance(FamilyId.S6, (a, b))


def blowup_point(a: int, b: int) -> FixedPointData:
    _require_positive("blowup-point", (a, b))
    if not a < b:
        raise ParameterConstraintViolated("blowup-point: need a < b")
    return FixedPointData.from_weights(
        [[-2 * a - b, a, b - a], [-a - b, 2 * a + b, a + 2 * b],
         [a - b, -a - 2 * b, b], [-a, -b, a + b]])


def blowup_sphere(a: int, b: int) -> FixedPointData:
    _require_positive("blowup-sphere", (a, b))
    return FixedPointData.from_weights(
        [[-a - b, a + 2 * b, b], [-a - 2 * b, a, b],
         [-a, -b, a + 2 * b], [-b, -a - 2 * b, a + b]])


def product_spheres(k: int, n: int, w: int) -> FixedPointData:
    """k disjoint copies of (S^2)^n, each factor rotated with speed w."""
    _require_positive("product-spheres", (k, n, w))
    labels, ws = [], []
    for copy in range(1, k + 1):
        for signs in cartesian("+-", repeat=n):
            labels.append(f"c{copy}{''.join(signs)}")
            ws.append([w if s == "+" else -w for s in signs])
    return FixedPointData(n, tuple(FixedPoint(lab, tuple(x)) for lab, x in zip(labels, ws)))


def _family_example(f):
    return lambda *p: family_instance(f, p)


# name -> (constructor, default parameters)
EXAMPLES = {
    "s2": (_family_example(FamilyId.SPHERE), (1,)),
    "cp2": (_family_example(FamilyId.CP2), (1, 1)),
    "s6": (s6, (1, 1)),
    "cp3": (cp3, (1, 2, 3)),
    "quadric": (quadric, (1, 2)),
    "fano": (_family_example(FamilyId.T12_3), (4,)),
    "hirzebruch": (hirzebruch, (1, 2, 1)),
    "two-spheres": (_family_example(FamilyId.TWO_SPHERES), (1, 1)),
    "blowup-point": (blowup_point, (1, 2)),
    "blowup-sphere": (blowup_sphere, (1, 1)),
    "product-spheres": (product_spheres, (1, 3, 1)),
}


def example(name: str, *params) -> FixedPointData:
    if name not in EXAMPLES:
        raise UnknownExample(f"unknown example {name!r}; known: {', '.join(EXAMPLES)}")
    ctor, default = EXAMPLES[name]
    if not params:
        params = default
    try:
        return ctor(*(int(x) for x in params))
    except TypeError:
        raise ParameterConstraintViolated(
            f"{name} takes {len(default)} parameters, got {len(params)}") from None


__all__ = [
    "EXAMPLES", "FamilyId", "FamilyMatch", "ParameterConstraintViolated", "UnknownExample",
    "blowup_point", "blowup_sphere", "cp3", "enumerate_family", "example", "family_instance",
    "hirzebruch", "match_family", "product_spheres", "quadric", "s6",
]
