"""Z_w-isotropy counting filters.

For an integer w >= 2, m_p^w is the number of weights at p divisible by w;
it is half the dimension of the Z_w-fixed component through p.  The
filters here only use those counts (plus, for the last two, the special
shape of 6-dimensional data with 4 fixed points).

Every filter first divides the weights by their gcd, i.e. works with the
effective quotient action.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from math import comb

from fplab.fpdata import FixedPointData, divide_out_gcd, n_profile
from fplab.verdict import FilterVerdict, fail, ok, skip


@dataclass(frozen=True)
class IsotropyTable:
    """``rows[w]`` holds one (m, m_plus, m_minus) triple per fixed point."""

    labels: tuple
    rows: dict

    def m(self, w: int) -> tuple:
        return tuple(r[0] for r in self.rows[w])


def isotropy_table(d: FixedPointData) -> IsotropyTable:
    ws = d.all_weights()
    top = max(abs(w) for w in ws)
    rows = {}
    for w in range(2, top + 1):
        if not any(x % w == 0 for x in ws):
            continue
        row = []
        for p in d.points:
            plus = sum(1 for x in p.weights if x > 0 and x % w == 0)
            minus = sum(1 for x in p.weights if x < 0 and x % w == 0)
            row.append((plus + minus, plus, minus))
        rows[w] = tuple(row)
    return IsotropyTable(tuple(p.label for p in d.points), rows)


def isotropy_count_check(d: FixedPointData) -> FilterVerdict:
    """Each Z_w-component through a fixed point carries enough other fixed points.

    m = 1 needs a second point with m = 1, m = 3 a second with m = 3, m >= 4
    four points with m >= 4, and m = 2 three points with m = 2 whose
    counts of negative multiples of w include 0, 1 and 2.  The last
    requirement is read over all points with m = 2.
    """
    table = isotropy_table(divide_out_gcd(d))
    for w, row in table.rows.items():
        ms = Counter(r[0] for r in row)
        if ms[1] and ms[1] < 2:
            return fail("isotropy", {"w": w, "clause": 1, "m": list(table.m(w))},
                        f"only one point has exactly one weight divisible by {w}")
        if ms[3] and ms[3] < 2:
            return fail("isotropy", {"w": w, "clause": 2, "m": list(table.m(w))},
                        f"only one point has exactly three weights divisible by {w}")
        if ms[2]:
            if ms[2] < 3:
                return fail("isotropy", {"w": w, "clause": 3, "m": list(table.m(w))},
                            f"fewer than three points have exactly two weights divisible by {w}")
            minus = {r[2] for r in row if r[0] == 2}
            if not {0, 1, 2} <= minus:
                return fail("isotropy", {"w": w, "clause": 3, "m": list(table.m(w)),
                                         "m_minus": sorted(minus)},
                            f"points with two multiples of {w} miss a negative count in 0,1,2")
        big = sum(c for m, c in ms.items() if m >= 4)
        if big and big < 4:
            return fail("isotropy", {"w": w, "clause": 4, "m": list(table.m(w))},
                        f"fewer than four points have four or more weights divisible by {w}")
    return ok("isotropy")


def semifree_check(d: FixedPointData) -> FilterVerdict:
    """All weights +-w for one w forces k 2^n points with N^i = k C(n, i)."""
    mags = {abs(x) for x in d.all_weights()}
    if len(mags) != 1:
        return ok("semifree", "vacuous: weights are not all +-w")
    total = 2 ** d.n
    if d.k % total:
        return fail("semifree", {"points": d.k, "block": total},
                    f"{d.k} points is not a multiple of 2^{d.n}")
    k = d.k // total
    prof = n_profile(d)
    for i, c in enumerate(prof):
        if c != k * comb(d.n, i):
            return fail("semifree", {"index": i, "N": c, "expected": k * comb(d.n, i)},
                        f"N^{i} = {c}, expected {k} * C({d.n},{i})")
    return ok("semifree", certificate={"k": k})


_TODD_BRANCHES = ((1, 1, 1, 1), (0, 2, 2, 0))


def _six_four(d: FixedPointData):
    if d.n != 3 or d.k != 4:
        return "needs dimension 6 with 4 fixed points"
    return None


def largest_weight_check(d: FixedPointData) -> FilterVerdict:
    """The largest weight l exceeds 1 and no point has two weights divisible by l.

    Applies to dimension 6 with 4 fixed points in either Todd branch,
    i.e. N-profile (1,1,1,1) or (0,2,2,0).
    """
    reason = _six_four(d)
    if reason:
        return skip("largest_weight", reason)
    if n_profile(d) not in _TODD_BRANCHES:
        return skip("largest_weight", "N-profile is neither (1,1,1,1) nor (0,2,2,0)")
    e = divide_out_gcd(d)
    top = e.max_abs_weight()
    if top <= 1:
        return fail("largest_weight", {"l": top}, "largest weight must exceed 1")
    for p in e.points:
        mult = sum(1 for x in p.weights if x % top == 0)
        if mult >= 2:
            return fail("largest_weight", {"l": top, "point": p.label, "multiples": mult},
                        f"point {p.label} has {mult} weights divisible by {top}")
    return ok("largest_weight", certificate={"l": top})


def _remove_submultiset(whole: Counter, part: list):
    rest = whole.copy()
    for x in part:
        if rest[x] <= 0:
            return None
        rest[x] -= 1
    return sorted(rest.elements())


def exponent_extremes_check(d: FixedPointData) -> FilterVerdict:
    """Lowest and highest exponents of the cleared chi^0 = 0 identity must cancel.

    For profile (0,2,2,0) let p1, p2 carry one negative weight and p3, p4
    two.  With C the six positive weights and R_p = C minus |weights at p|:

        min(|neg at p1|, |neg at p2|) == min(sum |neg at p3|, sum |neg at p4|)
        max(|neg| + sum R_p over p1, p2) == max(sum |neg| + sum R_p over p3, p4)
    """
    reason = _six_four(d)
    if reason:
        return skip("extremes", reason)
    if n_profile(d) != (0, 2, 2, 0):
        return skip("extremes", "N-profile is not (0,2,2,0)")
    positives = Counter(x for x in d.all_weights() if x > 0)
    low_one, low_two, high_one, high_two = [], [], [], []
    for p in d.points:
        neg = sum(-x for x in p.weights if x < 0)
        rest = _remove_submultiset(positives, [abs(x) for x in p.weights])
        if rest is None:
            return skip("extremes", f"weights at {p.label} are not covered by the positive weights")
        if p.n_negative == 1:
            low_one.append(neg)
            high_one.append(neg + sum(rest))
        else:
            low_two.append(neg)
            high_two.append(neg + sum(rest))
    if min(low_one) != min(low_two):
        return fail("extremes", {"identity": "min", "lhs": min(low_one), "rhs": min(low_two)},
                    "smallest exponents do not cancel")
    if max(high_one) != max(high_two):
        return fail("extremes", {"identity": "max", "lhs": max(high_one), "rhs": max(high_two)},
                    "largest exponents do not cancel")
    return ok("extremes")
