"""Filter pipeline, bounded candidate enumeration and classification reports."""

from __future__ import annotations

import json
import os
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations_with_replacement, product
from math import gcd
from typing import Callable, Iterator, Optional

from fplab import kernels
from fplab.families import FamilyMatch, match_family
from fplab.fpdata import (
    FixedPoint,
    FixedPointData,
    adjacency_check,
    canonical_key,
    canonicalize,
    n_profile,
    parse_data,
    point_key,
    serialize_data,
    to_document,
    weight_balance_check,
)
from fplab.genus import rigidity_check
from fplab.isotropy import (
    exponent_extremes_check,
    isotropy_count_check,
    largest_weight_check,
    semifree_check,
)
from fplab.localization import abbv_check
from fplab.multigraph import multigraph_check
from fplab.verdict import FilterVerdict

DEFAULT_FILTERS = ("balance", "adjacency", "rigidity", "abbv", "semifree",
                   "isotropy", "multigraph", "largest_weight", "extremes")

FILTERS: dict[str, Callable[[FixedPointData], FilterVerdict]] = {
    "balance": weight_balance_check,
    "adjacency": adjacency_check,
    "rigidity": rigidity_check,
    "abbv": abbv_check,
    "semifree": semifree_check,
    "isotropy": isotropy_count_check,
    "multigraph": multigraph_check,
    "largest_weight": largest_weight_check,
    "extremes": exponent_extremes_check,
}


@dataclass(frozen=True)
class SearchSpec:
    n: int
    k: int
    max_weight: int
    todd: Optional[int] = None
    filters: tuple = DEFAULT_FILTERS
    full_eval: bool = False
    symmetry_reduction: bool = True
    workers: int = 1

    def __post_init__(self):
        if self.n < 1 or self.k < 1 or self.max_weight < 1:
            raise ValueError("n, k and max_weight must be positive")
        if self.todd not in (None, 0, 1):
            raise ValueError("todd filter must be 0 or 1")
        unknown = set(self.filters) - set(FILTERS)
        if unknown:
            raise ValueError(f"unknown filters: {sorted(unknown)}")


@dataclass(frozen=True)
class FilterReport:
    verdicts: tuple

    @property
    def survivor(self) -> bool:
        return not any(v.failed for v in self.verdicts)

    @property
    def first_failure(self) -> Optional[FilterVerdict]:
        return next((v for v in self.verdicts if v.failed), None)

    def __getitem__(self, name: str) -> FilterVerdict:
        for v in self.verdicts:
            if v.name == name:
                return v
        raise KeyError(name)

    def __contains__(self, name: str) -> bool:
        return any(v.name == name for v in self.verdicts)

    def to_json(self) -> dict:
        return {v.name: v.to_json() for v in self.verdicts}


def run_pipeline(d: FixedPointData, filters=DEFAULT_FILTERS, full_eval: bool = False,
                 fast: bool = False) -> FilterReport:
    """Run the filters in order, stopping at the first failure unless ``full_eval``.

    ``fast`` decides rigidity with the compiled kernel and skips building
    the non-constant rational function for the certificate.
    """
    out = []
    for name in filters:
        if name == "rigidity":
            v = rigidity_check(d, exact_certificate=not fast)
        else:
            v = FILTERS[name](d)
        out.append(v)
        if v.failed and not full_eval:
            break
    return FilterReport(tuple(out))


# --------------------------------------------------------------------------
# candidate enumeration
# --------------------------------------------------------------------------

def admissible_profiles(n: int, k: int, todd: Optional[int] = None) -> list:
    """N-profiles with N^i = N^(n-i), some adjacent nonzero pair, and N^0 = todd if given."""
    out = []

    def rec(prefix):
        if len(prefix) == n + 1:
            if sum(prefix) == k:
                out.append(tuple(prefix))
            return
        for c in range(k - sum(prefix) + 1):
            rec(prefix + [c])

    rec([])
    good = []
    for prof in out:
        if any(prof[i] != prof[n - i] for i in range(n + 1)):
            continue
        if not any(prof[i] and prof[i + 1] for i in range(n)):
            continue
        if todd is not None and prof[0] != todd:
            continue
        good.append(prof)
    return good


def point_choices(n: int, negatives: int, max_weight: int) -> list:
    """Sorted weight multisets with exactly ``negatives`` negative entries."""
    out = []
    for neg in combinations_with_replacement(range(1, max_weight + 1), negatives):
        for pos in combinations_with_replacement(range(1, max_weight + 1), n - negatives):
            out.append(tuple(sorted([-x for x in neg] + list(pos))))
    out.sort()
    return out


def _gcd_is_one(weight_lists) -> bool:
    g = 0
    for ws in weight_lists:
        for w in ws:
            g = gcd(g, w)
            if g == 1:
                return True
    return g == 1


def _as_data(n: int, weight_lists) -> FixedPointData:
    return FixedPointData(n, tuple(FixedPoint(f"p{i + 1}", ws)
                                   for i, ws in enumerate(weight_lists)))


def _reversed_sorted(weight_lists) -> list:
    return sorted((tuple(sorted(-w for w in ws)) for ws in weight_lists), key=point_key)


def _profile_candidates(n: int, prof: tuple, max_weight: int) -> Iterator[list]:
    """Balanced point sequences with the given profile, sorted by (n_p, weights)."""
    slots = [m for m, c in enumerate(prof) for _ in range(c)]
    choices = {m: point_choices(n, m, max_weight) for m in set(slots)}
    index = {m: {ws: i for i, ws in enumerate(choices[m])} for m in choices}
    k = len(slots)
    chosen: list = []
    imbalance: Counter = Counter()

    def rec(pos: int, lower: int) -> Iterator[list]:
        remaining = k - pos
        if remaining == 0:
            if not +imbalance and not -imbalance:
                yield list(chosen)
            return
        if sum(abs(c) for c in imbalance.values()) > remaining * n:
            return
        m = slots[pos]
        start = lower if pos and slots[pos - 1] == m else 0
        if remaining == 1:
            # the last point is forced up to cancelling pairs {x, -x}
            need = []
            for w, c in imbalance.items():
                if c:
                    need.extend([-w] * abs(c) if c > 0 else [w] * abs(c))
            spare = n - len(need)
            if spare < 0 or spare % 2:
                return
            found = []
            for pairs in combinations_with_replacement(range(1, max_weight + 1), spare // 2):
                ws = tuple(sorted(need + [x for p in pairs for x in (p, -p)]))
                i = index[m].get(ws)
                if i is not None and i >= start:
                    found.append(i)
            for i in sorted(found):
                chosen.append(choices[m][i])
                yield list(chosen)
                chosen.pop()
            return
        for i in range(start, len(choices[m])):
            ws = choices[m][i]
            for w in ws:
                imbalance[abs(w)] += 1 if w > 0 else -1
            chosen.append(ws)
            yield from rec(pos + 1, i)
            chosen.pop()
            for w in ws:
                imbalance[abs(w)] -= 1 if w > 0 else -1

    yield from rec(0, 0)


def enumerate_candidates(spec: SearchSpec) -> Iterator[FixedPointData]:
    """Balanced, gcd-1 data within the weight bound.

    With symmetry reduction each class under relabelling and reversal is
    produced exactly once, already in canonical form, and only N-profiles
    allowed by adjacency and N^i = N^(n-i) are generated.  Without it every
    ordered tuple of points is produced (the brute-force reference).
    """
    n, k, W = spec.n, spec.k, spec.max_weight
    if not spec.symmetry_reduction:
        everything = [c for m in range(n + 1) for c in point_choices(n, m, W)]
        for combo in product(everything, repeat=k):
            if not kernels.is_balanced(combo) or not _gcd_is_one(combo):
                continue
            d = _as_data(n, combo)
            if spec.todd is not None and n_profile(d)[0] != spec.todd:
                continue
            yield d
        return
    for prof in admissible_profiles(n, k, spec.todd):
        for weight_lists in _profile_candidates(n, prof, W):
            if not _gcd_is_one(weight_lists):
                continue
            d = _as_data(n, weight_lists)
            rev = _as_data(n, _reversed_sorted(weight_lists))
            if serialize_data(d) <= serialize_data(rev):
                yield d


# --------------------------------------------------------------------------
# classification
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class Survivor:
    data: FixedPointData
    report: FilterReport
    matches: tuple

    def to_json(self) -> dict:
        return {"data": to_document(self.data), "filters": self.report.to_json(),
                "matches": [m.to_json() for m in self.matches]}


@dataclass
class ClassificationReport:
    spec: SearchSpec
    candidates: int
    survivors: list = field(default_factory=list)

    @property
    def unclassified(self) -> list:
        return [s for s in self.survivors if not s.matches]

    def family_counts(self) -> dict:
        counts: Counter = Counter()
        for s in self.survivors:
            for m in s.matches:
                counts[m.family.value] += 1
        return dict(sorted(counts.items()))

    def jsonl(self) -> str:
        return "".join(json.dumps(s.to_json(), separators=(",", ":")) + "\n"
                       for s in self.survivors)

    def summary(self) -> dict:
        return {"n": self.spec.n, "k": self.spec.k, "max_weight": self.spec.max_weight,
                "todd": self.spec.todd, "candidates": self.candidates,
                "survivors": len(self.survivors), "unclassified": len(self.unclassified),
                "families": self.family_counts()}


def _evaluate(args) -> Optional[tuple]:
    doc_text, filters, full_eval = args
    d = parse_data(doc_text)
    report = run_pipeline(d, filters, full_eval=full_eval, fast=True)
    if not report.survivor:
        return None
    return doc_text, report


def default_workers() -> int:
    env = os.environ.get("FPLAB_THREADS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            pass
    return 1


def classify_all(spec: SearchSpec) -> ClassificationReport:
    """Run the pipeline over every candidate and match the survivors to families.

    The report is sorted by canonical serialization, so it does not depend
    on how the work was split between processes.
    """
    candidates = list(enumerate_candidates(spec))
    survivors: dict = {}
    if spec.workers > 1:
        jobs = [(serialize_data(d), spec.filters, spec.full_eval) for d in candidates]
        with ProcessPoolExecutor(max_workers=spec.workers) as pool:
            results = list(pool.map(_evaluate, jobs, chunksize=256))
        passed = [(parse_data(t), r) for t, r in (x for x in results if x is not None)]
    else:
        passed = []
        for d in candidates:
            report = run_pipeline(d, spec.filters, full_eval=spec.full_eval, fast=True)
            if report.survivor:
                passed.append((d, report))
    for d, report in passed:
        c = canonicalize(d)
        key = serialize_data(c)
        if key not in survivors:
            if c != d:
                report = run_pipeline(c, spec.filters, full_eval=spec.full_eval, fast=True)
            survivors[key] = Survivor(c, report, tuple(match_family(c)))
    ordered = [survivors[k] for k in sorted(survivors)]
    return ClassificationReport(spec, len(candidates), ordered)


__all__ = [
    "DEFAULT_FILTERS", "FILTERS", "ClassificationReport", "FamilyMatch", "FilterReport",
    "SearchSpec", "Survivor", "admissible_profiles", "canonical_key", "classify_all",
    "enumerate_candidates", "run_pipeline",
]
