from fractions import Fraction as Q

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hhcert.closedform import (
    ConstraintError,
    FourPointFormula,
    SymmetricFamilyPoint,
    calibrate_point,
    calibration_report,
    classify_four_point,
    condition_i,
    condition_ii,
    e1_lhs,
    family_b,
    m1_lhs,
    printed_crossings,
    symmetric_functional,
    three_point_check,
)
from hhcert.functional import make, reference
from hhcert.ordering import Verdict, compare, crossing_profile

HALF = Q(1, 2)
QUARTERS = (Q(3, 4), Q(1, 4))
THIRDS = (Q(2, 3), Q(1, 3))


class TestMoments:
    def test_central4(self):
        coefs, alphas = [Q(1, 3), Q(-8, 3), Q(8, 3), Q(-1, 3)], [1, Q(3, 4), Q(1, 4), 0]
        assert m1_lhs(coefs, alphas) == 1
        # with squared nodes the running sum is twice the mean integral
        assert e1_lhs(coefs, alphas) == 1

    @given(st.lists(st.fractions(-5, 5, max_denominator=6), min_size=3, max_size=3))
    def test_running_sums_match_transform(self, head):
        coefs = head + [-sum(head, Q(0))]
        f4 = FourPointFormula(tuple(coefs), *THIRDS)
        fn = f4.functional()
        assert m1_lhs(coefs, f4.alphas) == fn.mass
        assert e1_lhs(coefs, f4.alphas) == 2 * fn.mean


class TestFourPointCases:
    @pytest.mark.parametrize(
        "coefs, nodes, case",
        [
            ((Q(1, 3), Q(-8, 3), Q(8, 3), Q(-1, 3)), QUARTERS, "i"),
            ((-2, 3, -3, 2), THIRDS, "ii"),
            ((Q(-1, 2), Q(-3, 2), Q(3, 2), Q(1, 2)), THIRDS, "iii"),
            ((Q(-3, 2), 1, -1, Q(3, 2)), QUARTERS, "iv"),
        ],
    )
    def test_case_and_links(self, coefs, nodes, case):
        rep = classify_four_point(FourPointFormula(coefs, *nodes))
        assert rep.case == case
        assert rep.all_hold

    def test_overlapping_cases_all_checked(self):
        rep = classify_four_point(FourPointFormula((Q(-1, 2), Q(-3, 2), Q(3, 2), Q(1, 2)), *THIRDS))
        assert rep.applicable == ("i", "iii")
        # the shared link formula <= integral mean is checked once
        assert len(rep.verified) == 3

    @pytest.mark.parametrize(
        "coefs, mass, mean",
        [((Q(-3, 2), 2, -2, Q(3, 2)), HALF, Q(1, 4)), ((2, -3, 3, -2), Q(-1, 2), Q(-1, 4))],
    )
    def test_printed_coefficients_violate_constraints(self, coefs, mass, mean):
        with pytest.raises(ConstraintError) as exc:
            classify_four_point(FourPointFormula(coefs, *QUARTERS))
        assert (exc.value.mass, exc.value.mean) == (mass, mean)

    def test_validation(self):
        with pytest.raises(ValueError):
            FourPointFormula((1, 1, 1, 1), *THIRDS)
        with pytest.raises(ValueError):
            FourPointFormula((1, -1, 1, -1), Q(1, 3), Q(2, 3))


class TestSymmetricFamily:
    def test_b_from_constraint(self):
        assert family_b(1, Q(1, 4)) == 4
        assert family_b(-2, Q(1, 3)) == -3
        assert family_b(Q(1, 3), Q(1, 4)) == Q(8, 3)

    def test_wrong_b_rejected(self):
        with pytest.raises(ValueError, match="expected -3"):
            SymmetricFamilyPoint(-2, 3, Q(1, 3))
        p = SymmetricFamilyPoint.unchecked(-2, 3, Q(1, 3))
        assert symmetric_functional(p).mass != 1

    @pytest.mark.parametrize("alpha", [0, HALF, Q(3, 4)])
    def test_alpha_range(self, alpha):
        with pytest.raises(ValueError):
            SymmetricFamilyPoint.of(1, alpha)

    @settings(max_examples=200)
    @given(st.fractions(-6, 6, max_denominator=8), st.fractions(Q(1, 50), Q(12, 25), max_denominator=50))
    def test_mass_one_mean_half(self, a, alpha):
        fn = symmetric_functional(SymmetricFamilyPoint.of(a, alpha))
        assert (fn.mass, fn.mean) == (1, HALF)

    def test_sample_point_holds_and_condition_agrees(self):
        p = SymmetricFamilyPoint.of(1, Q(1, 4))
        assert compare(symmetric_functional(p), reference("midpoint")).verdict is Verdict.HOLDS
        assert condition_i(p) is True

    def test_condition_i_true_where_inequality_fails(self):
        # the central four-node formula sits in the family at a=1/3, alpha=1/4
        p = SymmetricFamilyPoint.of(Q(1, 3), Q(1, 4))
        fn = symmetric_functional(p)
        assert fn == make(F_terms=[(0, Q(1, 3)), (Q(1, 4), Q(-8, 3)), (Q(3, 4), Q(8, 3)), (1, Q(-1, 3))])
        assert compare(fn, reference("midpoint")).verdict is Verdict.FAILS
        assert condition_i(p) is True

    def test_condition_ii_needs_swap(self):
        p = SymmetricFamilyPoint.of(-2, Q(1, 3))
        assert compare(symmetric_functional(p), reference("trapezoid")).verdict is Verdict.HOLDS
        assert condition_ii(p) is False
        assert condition_ii(p, swapped=True) is True

    def test_condition_domains(self):
        with pytest.raises(ValueError):
            condition_i(SymmetricFamilyPoint.of(-2, Q(1, 3)))
        with pytest.raises(ValueError):
            condition_ii(SymmetricFamilyPoint.of(1, Q(1, 4)))
        with pytest.raises(ZeroDivisionError):
            condition_i(SymmetricFamilyPoint.unchecked(1, -1, Q(1, 4)))

    def test_printed_crossings_vs_computed(self):
        p = SymmetricFamilyPoint.of(Q(1, 3), Q(1, 4))
        printed = sorted(printed_crossings(p))
        computed = crossing_profile(symmetric_functional(p).transform, reference("midpoint").transform)
        assert printed == [Q(1, 3), HALF, Q(2, 3)]
        assert computed.crossings == (Q(2, 7), HALF, Q(5, 7))


class TestCalibration:
    def test_rows(self):
        rows = calibration_report([(1, Q(1, 4)), (-2, Q(1, 3)), (Q(-1, 2), Q(1, 4))])
        first, second, mid = rows
        assert (first.b, first.verdict, first.agree_i) == (4, Verdict.HOLDS, True)
        assert (second.b, second.agree_ii, second.agree_ii_swapped) == (-3, False, True)
        assert mid.verdict is None and mid.agree_i is None and mid.agree_ii is None

    def test_deterministic(self):
        assert calibrate_point(3, Q(1, 5)) == calibrate_point(3, Q(1, 5))


class TestThreePoint:
    def test_classic_endpoint_formula(self, three_point):
        rep = three_point_check(three_point)
        assert rep.violated == "mean"
        assert rep.vs_midpoint is rep.vs_trapezoid is Verdict.NOT_COMPARABLE

    def test_rejects_wrong_shape(self, central4):
        with pytest.raises(ValueError):
            three_point_check(central4)

    @settings(max_examples=500, deadline=None)
    @given(
        st.fractions(Q(1, 100), Q(99, 100), max_denominator=100),
        st.fractions(-6, 6, max_denominator=10).filter(bool),
        st.fractions(-6, 6, max_denominator=10).filter(bool),
    )
    def test_never_comparable(self, lam, c0, c1):
        fn = make(F_terms=[(0, c0), (lam, c1), (1, -c0 - c1)])
        if len(fn.F_terms) != 3:
            return
        rep = three_point_check(fn)
        assert rep.vs_midpoint is Verdict.NOT_COMPARABLE
        assert rep.vs_trapezoid is Verdict.NOT_COMPARABLE
