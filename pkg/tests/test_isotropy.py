import random

from fplab.families import FamilyId, cp3, family_instance, product_spheres, s6
from fplab.fpdata import FixedPointData, relabel, reverse
from fplab.genus import rigidity_check
from fplab.isotropy import (
    exponent_extremes_check,
    isotropy_count_check,
    isotropy_table,
    largest_weight_check,
    semifree_check,
)
from fplab.search import enumerate_candidates, SearchSpec
from helpers import family_instances, random_balanced

fd = FixedPointData.from_weights

T12_4_UNIT = fd([[-2, 1, 1], [-2, 1, 1], [-1, -1, 2], [-1, -1, 2]])
# the 2s of the unit T12_4 instance replaced by 3s
MIN_FAILURE = fd([[-3, 1, 1], [-3, 1, 1], [-1, -1, 3], [-1, -1, 3]])
MAX_FAILURE = fd([[-3, 1, 1], [-3, 2, 2], [-2, -1, 3], [-2, -1, 3]])


class TestTable:
    def test_cp2(self):
        t = isotropy_table(fd([[3, 1], [-1, 2], [-2, -3]]))
        assert t.m(3) == (1, 0, 1)

    def test_cp3(self):
        assert isotropy_table(cp3(1, 2, 3)).m(3) == (1, 0, 0, 1)

    def test_s6(self):
        assert isotropy_table(s6(1, 1)).m(2) == (1, 1)

    def test_only_dividing_values(self):
        t = isotropy_table(fd([[4, 1], [-1, 3], [-3, -4]]))
        assert set(t.rows) == {2, 3, 4}

    def test_reversal_swaps_signs(self):
        rng = random.Random(1)
        for _ in range(100):
            d = random_balanced(rng, 3, 4, 6)
            a, b = isotropy_table(d), isotropy_table(reverse(d))
            for w, row in a.rows.items():
                assert [(m, mn, mp) for m, mp, mn in row] == list(b.rows[w])

    def test_relabelling(self):
        d = cp3(1, 2, 3)
        e = relabel(d, ["a", "b", "c", "d"])
        assert isotropy_table(d).rows == isotropy_table(e).rows


class TestCounts:
    def test_cp3_passes(self):
        assert isotropy_count_check(cp3(1, 2, 3)).passed

    def test_lonely_pair(self):
        v = isotropy_count_check(fd([[4, 1], [-1, 2], [-2, -4]]))
        assert v.failed
        assert v.certificate["w"] == 2 and v.certificate["clause"] == 3

    def test_t12_6_unit(self):
        d = family_instance(FamilyId.T12_6, (1, 1))
        assert d.weight_lists == [(-2, 1, 3), (-3, 1, 1), (-3, -1, 2), (-1, -1, 3)]
        assert isotropy_count_check(d).passed

    def test_clause_one(self):
        v = isotropy_count_check(fd([[2, 1], [-1, 1], [-1, -1]]))
        assert v.failed and v.certificate["clause"] == 1

    def test_missing_negative_count(self):
        # three points with two even weights, none with exactly one negative even weight
        d = fd([[2, 4, 1], [-2, -4, 1], [2, 4, -1], [-2, -4, -1]])
        v = isotropy_count_check(d)
        assert v.failed and v.certificate["clause"] == 3

    def test_families_pass(self):
        for f, params, d in family_instances(list(FamilyId), 4):
            assert isotropy_count_check(d).passed, (f, params)
            assert semifree_check(d).passed, (f, params)
            assert largest_weight_check(d).status.value != "fail", (f, params)
            assert exponent_extremes_check(d).status.value != "fail", (f, params)


class TestSemifree:
    def test_cube(self):
        v = semifree_check(product_spheres(1, 3, 1))
        assert v.passed and v.certificate == {"k": 1}

    def test_three_points(self):
        assert semifree_check(fd([[1, 1], [-1, 1], [-1, -1]])).failed

    def test_vacuous(self):
        v = semifree_check(cp3(1, 2, 3))
        assert v.passed and v.certificate is None

    def test_wrong_profile(self):
        d = fd([[1, 1], [1, 1], [-1, -1], [-1, -1]])
        v = semifree_check(d)
        assert v.failed and v.certificate["index"] == 0


class TestLargestWeight:
    def test_cp3(self):
        v = largest_weight_check(cp3(1, 2, 3))
        assert v.passed and v.certificate == {"l": 3}

    def test_two_multiples(self):
        v = largest_weight_check(fd([[2, 2, 1], [-2, 2, 1], [-1, -2, 2], [-1, -2, -2]]))
        assert v.failed and v.certificate["point"] == "p1"

    def test_t12_4(self):
        assert largest_weight_check(T12_4_UNIT).passed

    def test_skips(self):
        assert largest_weight_check(s6(1, 1)).skipped
        assert largest_weight_check(fd([[1, 1, 1], [1, 1, 1], [-1, -1, -1], [-1, -1, -1]])).skipped

    def test_unit_weights(self):
        d = fd([[1, 1, 1], [-1, 1, 1], [-1, -1, 1], [-1, -1, -1]])
        assert largest_weight_check(d).failed


class TestExtremes:
    def test_t12_4_unit(self):
        assert exponent_extremes_check(T12_4_UNIT).passed

    def test_min_failure(self):
        v = exponent_extremes_check(MIN_FAILURE)
        assert v.failed and v.certificate == {"identity": "min", "lhs": 3, "rhs": 2}

    def test_max_failure(self):
        v = exponent_extremes_check(MAX_FAILURE)
        assert v.failed and v.certificate == {"identity": "max", "lhs": 10, "rhs": 9}

    def test_skipped_for_other_profile(self):
        assert exponent_extremes_check(cp3(1, 2, 3)).skipped

    def test_implied_by_rigidity(self):
        rng = random.Random(6)
        pool = list(enumerate_candidates(SearchSpec(3, 4, 5, todd=0)))
        sample = rng.sample(pool, 500)
        for d in sample:
            if rigidity_check(d, exact_certificate=False).passed:
                assert not exponent_extremes_check(d).failed, str(d)
        rigid = [d for d in pool if rigidity_check(d, exact_certificate=False).passed]
        assert rigid
        assert not any(exponent_extremes_check(d).failed for d in rigid)
