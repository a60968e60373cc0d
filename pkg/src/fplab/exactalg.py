"""Exact Laurent polynomials and rational functions in one indeterminate ``t``.

Coefficients are Python integers (or :class:`fractions.Fraction` when a
scalar forces it), so nothing overflows and nothing rounds.  Rational
functions are kept in a reduced normal form:

* numerator and denominator have no negative exponents,
* they share no nonconstant factor,
* the denominator has integer content 1 and a positive lowest coefficient.

Two equal rational functions therefore compare equal field by field.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import gcd
from typing import Iterable, Mapping, Optional, Sequence, Union

Number = Union[int, Fraction]


class InvalidWeight(ValueError):
    """A weight of zero was supplied where only nonzero weights make sense."""


class NotExpandable(ValueError):
    """The denominator vanishes at t = 0, so there is no power series."""


def _clean(c: Number) -> Number:
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


# --------------------------------------------------------------------------
# dense helpers: lists of coefficients, lowest degree first
# --------------------------------------------------------------------------

def _trim(a: list) -> list:
    while a and a[-1] == 0:
        a.pop()
    return a


def _dense_mul(a: Sequence[Number], b: Sequence[Number]) -> list:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def _dense_add(a: Sequence[Number], b: Sequence[Number]) -> list:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, y in enumerate(b):
        out[i] += y
    return _trim(out)


def _content(a: Sequence[Number]) -> Number:
    """Positive content; for rational coefficients gcd(numerators)/lcm(denominators)."""
    nums = 0
    dens = 1
    for c in a:
        c = Fraction(c)
        nums = gcd(nums, c.numerator)
        dens = dens * c.denominator // gcd(dens, c.denominator)
    return _clean(Fraction(nums, dens))


def _primitive(a: Sequence[Number]) -> list:
    """Primitive integer polynomial with positive leading coefficient."""
    if not a:
        return []
    c = _content(a)
    out = [_clean(Fraction(x) / c) for x in a]
    if out[-1] < 0:
        out = [-x for x in out]
    return out


def _pseudo_rem(a: list, b: list) -> list:
    """Pseudo-remainder of integer polynomials, lc(b)^k * a mod b."""
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    while r and len(r) - 1 >= db:
        shift = len(r) - 1 - db
        lr = r[-1]
        r = [x * lb for x in r]
        for i, y in enumerate(b):
            r[i + shift] -= lr * y
        _trim(r)
    return r


def _dense_gcd(a: Sequence[Number], b: Sequence[Number]) -> list:
    """Monic-up-to-content gcd over Q, returned primitive with positive leading coeff."""
    a = _primitive(a)
    b = _primitive(b)
    if not a:
        return b
    if not b:
        return a
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = _pseudo_rem(a, b)
        a, b = b, _primitive(r)
    return a


def _dense_divexact(a: Sequence[Number], b: Sequence[Number]) -> list:
    """Quotient a / b over Q; raises if b does not divide a."""
    r = [Fraction(x) for x in a]
    db = len(b) - 1
    lb = b[-1]
    q = [Fraction(0)] * max(len(r) - db, 0)
    while r and len(r) - 1 >= db:
        shift = len(r) - 1 - db
        c = r[-1] / lb
        q[shift] = c
        for i, y in enumerate(b):
            r[i + shift] -= c * y
        _trim(r)
    if r:
        raise ArithmeticError("inexact polynomial division")
    return [_clean(x) for x in q]


# --------------------------------------------------------------------------
# Laurent polynomials
# --------------------------------------------------------------------------

class LaurentPolynomial:
    """Finite sum of c_k t^k with k any integer. Immutable."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Optional[Mapping[int, Number]] = None):
        clean = {}
        if terms:
            for k, c in terms.items():
                c = _clean(c)
                if c != 0:
                    clean[int(k)] = c
        self._terms = dict(sorted(clean.items()))
        self._hash = None

    @classmethod
    def monomial(cls, exponent: int, coeff: Number = 1) -> "LaurentPolynomial":
        return cls({exponent: coeff})

    @classmethod
    def constant(cls, c: Number) -> "LaurentPolynomial":
        return cls({0: c})

    @classmethod
    def from_coeffs(cls, coeffs: Sequence[Number], shift: int = 0) -> "LaurentPolynomial":
        return cls({i + shift: c for i, c in enumerate(coeffs) if c})

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def degree(self) -> Optional[int]:
        return max(self._terms) if self._terms else None

    def valuation(self) -> Optional[int]:
        return min(self._terms) if self._terms else None

    def coeff(self, k: int) -> Number:
        return self._terms.get(k, 0)

    def shift(self, k: int) -> "LaurentPolynomial":
        """Multiply by t^k."""
        return LaurentPolynomial({e + k: c for e, c in self._terms.items()})

    def dense(self) -> list:
        """Coefficients from t^0 upward; requires valuation >= 0."""
        if not self._terms:
            return []
        if self.valuation() < 0:
            raise ValueError("negative exponents present")
        out = [0] * (self.degree() + 1)
        for e, c in self._terms.items():
            out[e] = c
        return out

    def substitute_power(self, c: int) -> "LaurentPolynomial":
        """t -> t^c."""
        return LaurentPolynomial({e * c: v for e, v in self._terms.items()})

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentPolynomial.constant(other)
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPolynomial(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPolynomial({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return LaurentPolynomial({e: c * other for e, c in self._terms.items()})
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        out: dict = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPolynomial(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentPolynomial.constant(other)
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(tuple(self._terms.items()))
        return self._hash

    def __repr__(self):
        return f"LaurentPolynomial({self._terms!r})"

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for e, c in self._terms.items():
            if e == 0:
                mono = str(c)
            else:
                base = "t" if e == 1 else f"t^{e}"
                if c == 1:
                    mono = base
                elif c == -1:
                    mono = "-" + base
                else:
                    mono = f"{c}*{base}"
            parts.append(mono)
        return " + ".join(parts).replace("+ -", "- ")


def one_minus_t_power(w: int) -> LaurentPolynomial:
    """The polynomial 1 - t^w."""
    if w == 0:
        raise InvalidWeight("1 - t^0 vanishes")
    return LaurentPolynomial({0: 1, w: -1})


# --------------------------------------------------------------------------
# rational functions
# --------------------------------------------------------------------------

class RationalFunction:
    """numerator / denominator in reduced normal form. Immutable."""

    __slots__ = ("numerator", "denominator")

    def __init__(self, numerator, denominator=None):
        if denominator is None:
            denominator = LaurentPolynomial.constant(1)
        if isinstance(numerator, (int, Fraction)):
            numerator = LaurentPolynomial.constant(numerator)
        if isinstance(denominator, (int, Fraction)):
            denominator = LaurentPolynomial.constant(denominator)
        if denominator.is_zero():
            raise ZeroDivisionError("zero denominator")
        num, den = _normalize(numerator, denominator)
        object.__setattr__(self, "numerator", num)
        object.__setattr__(self, "denominator", den)

    def __setattr__(self, name, value):
        raise AttributeError("RationalFunction is immutable")

    @classmethod
    def _raw(cls, num: LaurentPolynomial, den: LaurentPolynomial) -> "RationalFunction":
        obj = object.__new__(cls)
        object.__setattr__(obj, "numerator", num)
        object.__setattr__(obj, "denominator", den)
        return obj

    def normalized(self) -> "RationalFunction":
        return RationalFunction(self.numerator, self.denominator)

    def is_zero(self) -> bool:
        return self.numerator.is_zero()

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = RationalFunction(other)
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return rf_add(self, other)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction._raw(-self.numerator, self.denominator)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            other = RationalFunction(other)
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return RationalFunction(self.numerator * other.numerator,
                                self.denominator * other.denominator)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = RationalFunction(other)
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return (self.numerator == other.numerator
                and self.denominator == other.denominator)

    def __hash__(self):
        return hash((self.numerator, self.denominator))

    def __repr__(self):
        return f"RationalFunction({self.numerator!r}, {self.denominator!r})"

    def __str__(self):
        if self.denominator == LaurentPolynomial.constant(1):
            return str(self.numerator)
        return f"({self.numerator})/({self.denominator})"


def _normalize(num: LaurentPolynomial, den: LaurentPolynomial):
    if num.is_zero():
        return num, LaurentPolynomial.constant(1)
    # clear negative exponents on both sides
    low = min(num.valuation(), den.valuation())
    num = num.shift(-low)
    den = den.shift(-low)
    a = num.dense()
    b = den.dense()
    g = _dense_gcd(a, b)
    if len(g) > 1:
        a = _dense_divexact(a, g)
        b = _dense_divexact(b, g)
    # denominator: content 1, lowest nonzero coefficient positive
    c = _content(b)
    lowest = next(x for x in b if x != 0)
    if lowest < 0:
        c = -c
    a = [_clean(Fraction(x) / c) for x in a]
    b = [_clean(Fraction(x) / c) for x in b]
    return LaurentPolynomial.from_coeffs(a), LaurentPolynomial.from_coeffs(b)


def rf_add(a: RationalFunction, b: RationalFunction) -> RationalFunction:
    """Exact sum, reduced and normalized."""
    if a.is_zero():
        return b
    if b.is_zero():
        return a
    ad, bd = a.denominator.dense(), b.denominator.dense()
    g = _dense_gcd(ad, bd)
    a_co = LaurentPolynomial.from_coeffs(_dense_divexact(bd, g))
    b_co = LaurentPolynomial.from_coeffs(_dense_divexact(ad, g))
    num = a.numerator * a_co + b.numerator * b_co
    den = a.denominator * a_co
    return RationalFunction(num, den)


def rf_sum(terms: Iterable[RationalFunction]) -> RationalFunction:
    """Left-to-right pairwise sum."""
    total = RationalFunction(0)
    for r in terms:
        total = rf_add(total, r)
    return total


def rf_constant_value(r: RationalFunction) -> Optional[Number]:
    """The constant c with numerator == c * denominator, or None."""
    num, den = r.numerator, r.denominator
    if num.is_zero():
        return 0
    if num.valuation() != den.valuation() or num.degree() != den.degree():
        return None
    v = den.valuation()
    c = _clean(Fraction(num.coeff(v)) / den.coeff(v))
    if den * c != num:
        return None
    return c


def series_truncate(r: RationalFunction, depth: int) -> list:
    """Power series coefficients of r at t = 0 up to t^depth inclusive."""
    den = r.denominator.dense()
    if den[0] == 0:
        raise NotExpandable("denominator vanishes at t = 0")
    num = r.numerator.dense()
    d0 = den[0]
    out: list = []
    for k in range(depth + 1):
        acc = num[k] if k < len(num) else 0
        for j in range(1, min(k, len(den) - 1) + 1):
            acc -= den[j] * out[k - j]
        out.append(_clean(Fraction(acc) / d0) if d0 != 1 else acc)
    return out


def elementary_symmetric(values: Sequence[LaurentPolynomial], i: int) -> LaurentPolynomial:
    """sigma_i(values); used as a reference path in tests."""
    total = LaurentPolynomial()
    for combo in combinations(values, i):
        prod = LaurentPolynomial.constant(1)
        for v in combo:
            prod = prod * v
        total = total + prod
    return total


def make_genus_term(weights: Sequence[int], i: int) -> RationalFunction:
    """sigma_i(t^w_1, ..., t^w_n) / prod(1 - t^w_j) with positive exponents only.

    Each negative weight is cleared with 1/(1 - t^-a) = -t^a/(1 - t^a), which
    amounts to multiplying the numerator by (-1)^m t^A, where m counts the
    negative weights and A is the sum of their absolute values.
    """
    weights = list(weights)
    if any(w == 0 for w in weights):
        raise InvalidWeight("weights must be nonzero")
    if not 0 <= i <= len(weights):
        raise ValueError(f"index {i} outside 0..{len(weights)}")
    # sigma_i via prod_j (1 + y t^w_j), tracking only the y^i coefficient
    layers = [LaurentPolynomial.constant(1)] + [LaurentPolynomial()] * i
    for w in weights:
        tw = LaurentPolynomial.monomial(w)
        for k in range(min(i, len(weights)), 0, -1):
            layers[k] = layers[k] + layers[k - 1] * tw
    sigma = layers[i]
    negs = [-w for w in weights if w < 0]
    num = sigma.shift(sum(negs)) * (-1) ** len(negs)
    den = LaurentPolynomial.constant(1)
    for w in weights:
        den = den * one_minus_t_power(abs(w))
    return RationalFunction(num, den)
