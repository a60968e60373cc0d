import random
from fractions import Fraction

import pytest

from fplab.exactalg import RationalFunction, LaurentPolynomial, one_minus_t_power
from fplab.families import EXAMPLES, cp3, example, s6
from fplab.fpdata import FixedPointData, n_profile, reverse, scale
from fplab.genus import (
    NonConstant,
    chi_vector,
    classical_invariants,
    fast_chi_values,
    rigidity_check,
)
from helpers import family_instances, genus_term_series, random_balanced

fd = FixedPointData.from_weights


def test_cp2():
    assert list(chi_vector(fd([[2, 1], [-1, 1], [-1, -2]]))) == [1, -1, 1]


def test_s6():
    assert list(chi_vector(s6(1, 1))) == [0, -1, 1, 0]


def test_two_same_points_not_constant():
    with pytest.raises(NonConstant) as info:
        chi_vector(fd([[1], [1]]))
    assert info.value.index == 0
    expected = RationalFunction(LaurentPolynomial.constant(2), one_minus_t_power(1))
    assert info.value.certificate == expected


def test_rigidity_verdicts():
    assert rigidity_check(cp3(1, 2, 3)).passed
    assert rigidity_check(fd([[1, 1], [-1, -1]])).failed
    bad = fd([[2, 2, 1], [-2, 2, 1], [-1, -2, 2], [-1, -2, -2]])
    v = rigidity_check(bad)
    assert v.failed and v.certificate["index"] == 0


def test_fast_and_exact_agree_on_verdicts():
    rng = random.Random(8)
    for _ in range(300):
        n = rng.randint(1, 3)
        k = rng.choice([k for k in (2, 3, 4) if n * k % 2 == 0])
        d = random_balanced(rng, n, k, 4)
        a = rigidity_check(d)
        b = rigidity_check(d, exact_certificate=False)
        assert a.status == b.status
        assert a.certificate["index"] == b.certificate["index"] if a.failed else True


@pytest.mark.parametrize("name, todd, euler, signature", [
    ("cp3", 1, 4, 0),
    ("s6", 0, 2, 0),
    ("s2", 1, 2, 0),
    ("cp2", 1, 3, 1),
    ("product-spheres", 1, 8, 0),
])
def test_classical_invariants(name, todd, euler, signature):
    inv = classical_invariants(chi_vector(example(name)))
    assert (inv.todd, inv.euler, inv.signature) == (todd, euler, signature)


def test_euler_is_point_count():
    for name in EXAMPLES:
        d = example(name)
        if rigidity_check(d).passed:
            assert classical_invariants(chi_vector(d)).euler == d.k


def test_scaling_and_reversal():
    for _, _, d in family_instances(["CP2", "S6", "T11", "T12_2", "T12_6"], 2):
        chi = chi_vector(d)
        for c in (2, 3):
            assert chi_vector(scale(d, c)) == chi
        assert rigidity_check(reverse(d)).passed
        r = chi_vector(reverse(d))
        prof = n_profile(d)
        assert list(r) == [(-1) ** i * prof[d.n - i] for i in range(d.n + 1)]


def test_rigidity_reversal_random():
    rng = random.Random(21)
    for _ in range(200):
        d = random_balanced(rng, 2, 4, 3)
        assert rigidity_check(d).status == rigidity_check(reverse(d)).status


def test_unreduced_series_matches_constant():
    depth = 40
    for name in EXAMPLES:
        d = example(name)
        if d.k * d.n > 12:
            continue
        chi = chi_vector(d)
        for i in range(d.n + 1):
            total = [0] * (depth + 1)
            for p in d.points:
                for j, c in enumerate(genus_term_series(list(p.weights), i, depth)):
                    total[j] += c
            assert total == [chi[i]] + [0] * depth


def test_fast_values_are_integers():
    assert fast_chi_values(cp3(1, 2, 3)) == [1, -1, 1, -1]
    assert fast_chi_values(fd([[1], [1]]))[0] is None
    assert chi_vector(fd([[1], [-1]]))[0] == Fraction(1)
