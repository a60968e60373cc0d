"""Labelled directed multigraphs over the fixed points, and admissibility.

An edge p -> q with label w pairs an occurrence of +w at p with an
occurrence of -w at q, so reading the labels off the edges at each vertex
(outgoing positive, incoming negative) gives back its weight multiset.  An
admissible multigraph additionally has

1. no loops,
2. for every edge with w at most the second smallest positive weight,
   n_q = n_p + 1 (counts of negative weights),
3. for every other edge, the weights at p and q agree modulo w as multisets.

Since each condition looks at one edge only, the admissible multigraphs are
exactly the products over the label values w of the admissible ways to pair
the +w occurrences with the -w occurrences.  The pairings for one value are
nonnegative integer matrices X[p][q] with prescribed row and column sums,
which is also how multigraphs that differ only by permuting identical edges
are identified.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import product
from typing import Iterator, Optional

from fplab.fpdata import FixedPointData
from fplab.verdict import FilterVerdict, fail, ok


class FewerThanTwoPositive(ValueError):
    """Second smallest positive weight is undefined."""


@dataclass(frozen=True)
class Multigraph:
    vertices: tuple
    edges: tuple  # (initial label, terminal label, w), sorted

    def weights_at(self) -> dict:
        out = {v: [] for v in self.vertices}
        for src, dst, w in self.edges:
            out[src].append(w)
            out[dst].append(-w)
        return {v: tuple(sorted(ws)) for v, ws in out.items()}

    def reversed(self) -> "Multigraph":
        order = {v: i for i, v in enumerate(self.vertices)}
        edges = sorted(((dst, src, w) for src, dst, w in self.edges),
                       key=lambda e: (order[e[0]], order[e[1]], e[2]))
        return Multigraph(self.vertices, tuple(edges))


def small_weight_threshold(d: FixedPointData) -> int:
    positives = sorted(w for w in d.all_weights() if w > 0)
    if len(positives) < 2:
        raise FewerThanTwoPositive("fewer than two positive weight occurrences")
    return positives[1]


def _residues(weights, w: int) -> tuple:
    return tuple(sorted(x % w for x in weights))


class _Context:
    """Per-data precomputation shared by the enumeration and the existence test."""

    def __init__(self, d: FixedPointData):
        self.d = d
        self.labels = [p.label for p in d.points]
        self.negs = [p.n_negative for p in d.points]
        try:
            self.threshold: Optional[int] = small_weight_threshold(d)
        except FewerThanTwoPositive:
            self.threshold = None
        plus: dict = {}
        minus: dict = {}
        for idx, p in enumerate(d.points):
            for x in p.weights:
                bucket = plus if x > 0 else minus
                bucket.setdefault(abs(x), Counter())[idx] += 1
        self.values = sorted(set(plus) | set(minus), reverse=True)
        self.plus = plus
        self.minus = minus

    def allowed(self, p: int, q: int, w: int) -> bool:
        if p == q:
            return False
        if self.threshold is None or w <= self.threshold:
            return self.negs[q] == self.negs[p] + 1
        pts = self.d.points
        return _residues(pts[p].weights, w) == _residues(pts[q].weights, w)

    def tables(self, w: int) -> Iterator[tuple]:
        """Admissible pairings for label w, as sorted (p, q, multiplicity) triples."""
        src = sorted(self.plus.get(w, Counter()).items())
        dst_cap = dict(self.minus.get(w, Counter()))
        if sum(c for _, c in src) != sum(dst_cap.values()):
            return
        targets = sorted(dst_cap)
        allowed = {(p, q): self.allowed(p, q, w) for p, _ in src for q in targets}

        def place(i: int, chosen: list) -> Iterator[tuple]:
            if i == len(src):
                yield tuple(chosen)
                return
            p, need = src[i]
            opts = [q for q in targets if allowed[p, q]]

            def spread(j: int, left: int, acc: list) -> Iterator[tuple]:
                if left == 0:
                    yield from place(i + 1, acc)
                    return
                if j == len(opts):
                    return
                q = opts[j]
                for take in range(min(left, dst_cap[q]), -1, -1):
                    if take:
                        dst_cap[q] -= take
                        yield from spread(j + 1, left - take, acc + [(p, q, take)])
                        dst_cap[q] += take
                    else:
                        yield from spread(j + 1, left, acc)

            yield from spread(0, need, chosen)

        yield from place(0, [])

    def first_blocked_value(self) -> Optional[int]:
        for w in self.values:
            if next(self.tables(w), None) is None:
                return w
        return None

    def build(self, parts) -> Multigraph:
        edges = []
        for w, table in zip(self.values, parts):
            for p, q, mult in table:
                edges.extend([(p, q, w)] * mult)
        edges.sort()
        return Multigraph(tuple(self.labels),
                          tuple((self.labels[p], self.labels[q], w) for p, q, w in edges))


def enumerate_admissible(d: FixedPointData) -> list:
    """Every admissible multigraph, identical parallel edges identified."""
    ctx = _Context(d)
    per_value = []
    for w in ctx.values:
        tables = list(ctx.tables(w))
        if not tables:
            return []
        per_value.append(tables)
    graphs = [ctx.build(parts) for parts in product(*per_value)]
    order = {v: i for i, v in enumerate(ctx.labels)}
    graphs.sort(key=lambda g: [(order[s], order[t], w) for s, t, w in g.edges])
    return graphs


def multigraph_check(d: FixedPointData) -> FilterVerdict:
    ctx = _Context(d)
    blocked = ctx.first_blocked_value()
    if blocked is None:
        return ok("multigraph", certificate={"threshold": ctx.threshold})
    return fail("multigraph", {"w": blocked, "threshold": ctx.threshold},
                f"no admissible way to draw the edges labelled {blocked}")


def to_dot(g: Multigraph, name: str = "multigraph") -> str:
    lines = [f"digraph {name} {{"]
    for v in g.vertices:
        lines.append(f'  "{v}";')
    for src, dst, w in g.edges:
        lines.append(f'  "{src}" -> "{dst}" [label="{w}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
