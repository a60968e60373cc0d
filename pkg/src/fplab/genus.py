"""Hirzebruch chi_y-genus by localization, and its rigidity constraints.

For each 0 <= i <= n the sum over fixed points of
sigma_i(t^w_p) / prod_j (1 - t^w_p^j) must be the constant (-1)^i N^i, and
N^i = N^(n-i).  Chern numbers are also determined by the fixed point data
but are not computed here.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from fplab import kernels
from fplab.exactalg import RationalFunction, make_genus_term, rf_add, rf_constant_value
from fplab.fpdata import FixedPointData, n_profile
from fplab.verdict import FilterVerdict, fail, ok


class NonConstant(ArithmeticError):
    """The chi^i localization sum depends on t, so no action has this data."""

    def __init__(self, index: int, certificate: RationalFunction):
        super().__init__(f"chi^{index} is not constant: {certificate}")
        self.index = index
        self.certificate = certificate


@dataclass(frozen=True)
class ChiVector:
    values: tuple

    @property
    def n(self) -> int:
        return len(self.values) - 1

    def __getitem__(self, i):
        return self.values[i]

    def __iter__(self):
        return iter(self.values)


class ClassicalInvariants(NamedTuple):
    todd: Fraction
    euler: Fraction
    signature: Fraction


def chi_sum(d: FixedPointData, i: int) -> RationalFunction:
    """The reduced rational function sum_p sigma_i(t^w_p)/prod(1 - t^w_p^j)."""
    total = RationalFunction(0)
    for p in d.points:
        total = rf_add(total, make_genus_term(p.weights, i))
    return total


def chi_vector(d: FixedPointData) -> ChiVector:
    values = []
    for i in range(d.n + 1):
        r = chi_sum(d, i)
        c = rf_constant_value(r)
        if c is None:
            raise NonConstant(i, r)
        values.append(Fraction(c))
    return ChiVector(tuple(values))


def fast_chi_values(d: FixedPointData) -> list:
    """Integer chi^i values from the kernel, None where the sum is not constant."""
    return kernels.chi_constants(d.weight_lists)


def rigidity_check(d: FixedPointData, exact_certificate: bool = True) -> FilterVerdict:
    """chi^i = (-1)^i N^i for all i, and N^i = N^(n-i).

    With ``exact_certificate=False`` constancy is decided by the compiled
    kernel and a failing verdict only names the offending index, which is
    what the bulk search wants.
    """
    prof = n_profile(d)
    if exact_certificate:
        try:
            chi = list(chi_vector(d))
        except NonConstant as exc:
            return fail("rigidity", {"index": exc.index, "non_constant": str(exc.certificate)},
                        f"chi^{exc.index} is not constant")
    else:
        chi = fast_chi_values(d)
        for i, c in enumerate(chi):
            if c is None:
                return fail("rigidity", {"index": i, "non_constant": True},
                            f"chi^{i} is not constant")
    for i, c in enumerate(chi):
        expected = (-1) ** i * prof[i]
        if c != expected:
            return fail("rigidity", {"index": i, "chi": str(c), "expected": expected},
                        f"chi^{i} = {c} but (-1)^i N^i = {expected}")
    for i in range(d.n + 1):
        if prof[i] != prof[d.n - i]:
            return fail("rigidity", {"index": i, "profile": list(prof)},
                        f"N^{i} != N^{d.n - i}")
    return ok("rigidity", certificate={"chi": [str(c) for c in chi]})


def classical_invariants(chi: ChiVector) -> ClassicalInvariants:
    """Todd genus chi_y(0), Euler characteristic chi_y(-1), signature chi_y(1)."""
    todd = Fraction(chi[0])
    euler = sum((Fraction(c) * (-1) ** i for i, c in enumerate(chi)), Fraction(0))
    signature = sum((Fraction(c) for c in chi), Fraction(0))
    return ClassicalInvariants(todd, euler, signature)
