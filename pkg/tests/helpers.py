"""Reference implementations used as oracles by the test modules.

None of these touch the rational-function reduction or the table-based
multigraph enumeration, so agreement with them is meaningful.
"""

from __future__ import annotations

import random
from collections import Counter
from itertools import combinations, permutations, product

from fplab.exactalg import LaurentPolynomial, RationalFunction, make_genus_term
from fplab.families import SHAPE, FamilyId, check_parameters, family_instance
from fplab.families import ParameterConstraintViolated
from fplab.fpdata import FixedPointData


# ---------------------------------------------------------------- series

def _mul_trunc(a: dict, b: dict, depth: int) -> dict:
    out: dict = {}
    for i, x in a.items():
        for j, y in b.items():
            if i + j <= depth:
                out[i + j] = out.get(i + j, 0) + x * y
    return {k: v for k, v in out.items() if v}


def _inverse_factor(w: int, depth: int) -> dict:
    """Power series of 1/(1 - t^w), written with positive exponents only."""
    if w > 0:
        return {k * w: 1 for k in range(depth // w + 1)}
    a = -w
    return {k * a: -1 for k in range(1, depth // a + 1)}


def genus_term_series(weights, i: int, depth: int) -> list:
    """Coefficients 0..depth of sigma_i(t^w)/prod(1 - t^w), expanded factor by factor."""
    shift = sum(-w for w in weights if w < 0)
    prod_series = {0: 1}
    for w in weights:
        prod_series = _mul_trunc(prod_series, _inverse_factor(w, depth + shift), depth + shift)
    out = [0] * (depth + 1)
    for subset in combinations(weights, i):
        e = sum(subset)
        for k, c in prod_series.items():
            if 0 <= k + e <= depth:
                out[k + e] += c
    return out


def poly_series(p: LaurentPolynomial, depth: int) -> list:
    out = [0] * (depth + 1)
    for k, c in p.terms.items():
        if 0 <= k <= depth:
            out[k] += c
    return out


def convolve(a: list, b: list) -> list:
    depth = len(a) - 1
    out = [0] * (depth + 1)
    for i, x in enumerate(a):
        if x:
            for j in range(depth + 1 - i):
                out[i + j] += x * b[j]
    return out


class RandomTerm:
    """c * t^e * genus_term(weights, i), with an oracle expansion."""

    def __init__(self, rng: random.Random, max_weight: int = 6):
        pool = [w for w in range(-max_weight, max_weight + 1) if w]
        self.weights = [rng.choice(pool) for _ in range(rng.randint(1, 3))]
        self.i = rng.randint(0, len(self.weights))
        self.c = rng.choice([-3, -2, -1, 1, 2, 3])
        self.e = rng.randint(0, 4)

    def exact(self):
        base = make_genus_term(self.weights, self.i)
        return base * RationalFunction(LaurentPolynomial.monomial(self.e, self.c))

    def series(self, depth: int) -> list:
        base = genus_term_series(self.weights, self.i, depth)
        out = [0] * (depth + 1)
        for k in range(depth + 1 - self.e):
            out[k + self.e] = self.c * base[k]
        return out


# ---------------------------------------------------------------- data

def random_balanced(rng: random.Random, n: int, k: int, max_weight: int) -> FixedPointData:
    """Random data whose +w and -w occurrences pair up (n * k must be even)."""
    assert n * k % 2 == 0
    mags = [rng.randint(1, max_weight) for _ in range(n * k // 2)]
    occ = mags + [-m for m in mags]
    rng.shuffle(occ)
    return FixedPointData.from_weights([occ[j * n:(j + 1) * n] for j in range(k)])


def family_instances(families, max_param: int):
    """(family, params, data) for every valid parameter tuple with entries <= max_param."""
    for f in families:
        f = FamilyId(f)
        if f is FamilyId.POINT:
            continue
        arity = SHAPE[f][2]
        for params in product(range(1, max_param + 1), repeat=arity):
            try:
                check_parameters(f, params)
            except ParameterConstraintViolated:
                continue
            yield f, params, family_instance(f, params)


# ---------------------------------------------------------------- multigraphs

def brute_force_multigraphs(d: FixedPointData) -> set:
    """Every perfect matching of +w with -w occurrences, filtered by the three clauses.

    Returns each admissible multigraph as a sorted tuple of (src, dst, w)
    label triples, so identical parallel edges collapse automatically.
    """
    labels = [p.label for p in d.points]
    negs = [sum(1 for x in p.weights if x < 0) for p in d.points]
    positives = sorted(x for x in d.all_weights() if x > 0)
    threshold = positives[1] if len(positives) >= 2 else None

    def congruent(p, q, w):
        a = sorted(x % w for x in d.points[p].weights)
        b = sorted(x % w for x in d.points[q].weights)
        return a == b

    def edge_ok(p, q, w):
        if p == q:
            return False
        if threshold is None or w <= threshold:
            return negs[q] == negs[p] + 1
        return congruent(p, q, w)

    plus: dict = {}
    minus: dict = {}
    for idx, p in enumerate(d.points):
        for x in p.weights:
            (plus if x > 0 else minus).setdefault(abs(x), []).append(idx)
    if set(plus) != set(minus) or any(len(plus[w]) != len(minus[w]) for w in plus):
        return set()
    per_value = []
    for w in sorted(plus):
        options = set()
        for perm in permutations(minus[w]):
            pairs = list(zip(plus[w], perm))
            if all(edge_ok(p, q, w) for p, q in pairs):
                options.add(tuple(sorted((p, q, w) for p, q in pairs)))
        per_value.append(sorted(options))
    out = set()
    for combo in product(*per_value):
        edges = sorted(e for part in combo for e in part)
        out.add(tuple((labels[p], labels[q], w) for p, q, w in edges))
    return out


def weights_from_edges(labels, edges) -> dict:
    acc = {v: Counter() for v in labels}
    for s, t, w in edges:
        acc[s][w] += 1
        acc[t][-w] += 1
    return {v: tuple(sorted(c.elements())) for v, c in acc.items()}
