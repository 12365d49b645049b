import math
from fractions import Fraction as Q

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hhcert.functional import IntervalSpec, reference
from hhcert.oracle import (
    RandomInstanceSpec,
    TestFunction,
    default_family,
    hinge_direct,
    hinge_exact,
    hinge_sweep,
    numeric_cross_check,
    random_functional,
)
from hhcert.ordering import Verdict, compare

from .conftest import functionals, unit

HALF = Q(1, 2)


class TestHinges:
    @given(functionals(), unit)
    def test_two_routes_agree(self, fn, t):
        assert hinge_exact(fn, t) == hinge_direct(fn, t)

    def test_out_of_range(self, mid):
        with pytest.raises(ValueError):
            hinge_exact(mid, Q(3, 2))

    def test_sweep_central4(self, mid, central4):
        v, t = hinge_sweep(mid, central4)
        assert (v, t) == (Q(1, 84), Q(2, 7))
        # the quarter point is a weaker witness
        assert hinge_direct(mid, Q(1, 4)) - hinge_direct(central4, Q(1, 4)) == Q(1, 96)

    def test_sweep_classic(self, mid, mean):
        v, _ = hinge_sweep(mid, mean)
        assert v == 0

    def test_sweep_needs_matching_moments(self, mid, three_point, quarters_sym):
        with pytest.raises(ValueError, match="mean"):
            hinge_sweep(mid, three_point)
        with pytest.raises(ValueError, match="mass"):
            hinge_sweep(quarters_sym, mid)


class TestFamily:
    def test_size(self):
        assert len(default_family(10)) == 8 + 11

    @pytest.mark.parametrize("tf", default_family(4), ids=lambda tf: tf.name)
    def test_antiderivatives(self, tf):
        u, h = 0.37, 1e-6
        deriv = (tf.F(u + h) - tf.F(u - h)) / (2 * h)
        assert deriv == pytest.approx(float(tf.f(u)), abs=1e-6)

    def test_bad_params(self):
        with pytest.raises(ValueError):
            TestFunction("power", 0)
        with pytest.raises(ValueError):
            TestFunction("exponential", 0)
        with pytest.raises(ValueError):
            TestFunction("sine", 1)


class TestNumericCrossCheck:
    def test_classic_nonpositive(self, mid, mean):
        rep = numeric_cross_check(mid, mean, default_family(20))
        assert rep.max_diff <= 1e-12

    def test_finds_central4_violation(self, mid, central4):
        hinges = [tf for tf in default_family(28) if tf.kind == "hinge"]
        rep = numeric_cross_check(mid, central4, hinges)
        # hinge at 8/28 = 2/7 is on the grid
        assert rep.max_diff == pytest.approx(1 / 84, abs=1e-12)
        assert rep.argmax == "hinge(2/7)"

    @pytest.mark.parametrize("xy", [(-3, 7), (Q(1, 3), 2), (100, 101)])
    def test_interval_invariance(self, central4, thirds_wide, xy):
        fam = default_family(12)
        base = numeric_cross_check(central4, thirds_wide, fam)
        moved = numeric_cross_check(central4, thirds_wide, fam, IntervalSpec(*xy))
        for (name, a), (_, b) in zip(base.diffs, moved.diffs):
            assert a == pytest.approx(b, abs=1e-9), name
        assert base.signs() == moved.signs()

    def test_exponential_matches_closed_form(self, mean):
        rep = numeric_cross_check(mean, reference("midpoint"), [TestFunction("exponential", 1.0)])
        assert rep.diffs[0][1] == pytest.approx(math.e - 1 - math.exp(0.5), rel=1e-12)


class TestRandomInstances:
    def test_deterministic(self):
        spec = RandomInstanceSpec(seed=42)
        assert random_functional(spec) == random_functional(spec)

    @settings(max_examples=200, deadline=None)
    @given(st.integers(0, 10**6), st.integers(4, 7), st.booleans())
    def test_constraints_met(self, seed, n, endpoints):
        fn = random_functional(RandomInstanceSpec(node_count=n, seed=seed, endpoints=endpoints))
        assert (fn.mass, fn.mean) == (1, HALF)
        assert len(fn.F_terms) == n
        if endpoints:
            assert fn.F_terms[0][0] == 0 and fn.F_terms[-1][0] == 1

    @given(st.integers(0, 10**6))
    def test_mass_only(self, seed):
        fn = random_functional(RandomInstanceSpec(node_count=3, constraints="mass1", seed=seed))
        assert fn.mass == 1

    def test_three_endpoint_nodes_are_impossible(self):
        with pytest.raises(RuntimeError):
            random_functional(RandomInstanceSpec(node_count=3, seed=1, endpoints=True), max_tries=20)

    @pytest.mark.parametrize(
        "kwargs", [{"node_count": 1}, {"node_count": 9}, {"constraints": "mass2"}, {"node_count": 2}, {"denom_bound": 1}]
    )
    def test_bad_spec(self, kwargs):
        with pytest.raises(ValueError):
            RandomInstanceSpec(**kwargs)

    def test_random_pair_against_sweep(self):
        lhs = random_functional(RandomInstanceSpec(seed=3))
        rhs = random_functional(RandomInstanceSpec(seed=4))
        cert = compare(lhs, rhs)
        v, _ = hinge_sweep(lhs, rhs)
        assert (cert.verdict is Verdict.HOLDS) == (v <= 0)
