"""Push-forward of the class 1: sum over fixed points of 1 / prod of weights vanishes."""

from __future__ import annotations

from fractions import Fraction
from math import prod

from fplab.fpdata import FixedPointData
from fplab.verdict import FilterVerdict, fail, ok


def abbv_sum(d: FixedPointData) -> Fraction:
    total = Fraction(0)
    for p in d.points:
        total += Fraction(1, prod(p.weights))
    return total


def abbv_check(d: FixedPointData) -> FilterVerdict:
    s = abbv_sum(d)
    if s == 0:
        return ok("abbv")
    return fail("abbv", {"sum": str(s)}, f"sum of 1/prod(weights) is {s}, not 0")
