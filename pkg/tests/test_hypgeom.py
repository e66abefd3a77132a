"""Collar/pentagon/envelope primitives.

Pinned expected values were computed with a 40-digit mpmath oracle
(asinh/sinh/acosh/log evaluated at dps=40, rounded to double) and frozen
here; the implementation must reproduce them at double precision.
"""

import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from pinchcert import (
    HypConstants,
    InfeasibleError,
    OutOfRegimeError,
    ValidationError,
    bers_crossing_bound,
    collar_width,
    crossing_length_lower,
    lemma41_envelope,
    pentagon_side,
    thurston_length_upper,
    thurston_lower_bound,
    wolpert_envelope,
)

C2 = HypConstants(genus=2, K=0.0)

# mpmath, dps=40: asinh(1/sinh(1/2))
COLLAR_AT_1 = 1.4068291137472953
# mpmath, dps=40: 2*asinh(1/sinh(0.005))
CROSSING_AT_001 = 11.982933260876554
FIXED_POINT = 2.0 * math.asinh(1.0)  # sinh(l/2) = 1 there


class TestCollarWidth:
    def test_pinned_value(self):
        assert collar_width(1.0) == pytest.approx(COLLAR_AT_1, rel=1e-14)

    def test_fixed_point(self):
        # where sinh(l/2) = 1 the collar width equals l/2
        assert collar_width(FIXED_POINT) == pytest.approx(FIXED_POINT / 2, rel=1e-14)

    def test_decreasing_to_zero(self):
        widths = [collar_width(float(l)) for l in (1, 5, 20, 80, 320)]
        assert all(a > b for a, b in zip(widths, widths[1:]))
        assert widths[-1] < 1e-60

    @given(st.floats(min_value=1e-6, max_value=50.0),
           st.floats(min_value=1e-6, max_value=50.0))
    def test_strictly_decreasing(self, a, b):
        lo, hi = min(a, b), max(a, b)
        if hi - lo < 1e-9 * hi:
            # inputs a few ulps apart can round to the same output double
            return
        assert collar_width(lo) > collar_width(hi)

    @given(st.floats(min_value=1e-6, max_value=50.0),
           st.floats(min_value=1e-9, max_value=1e-3))
    def test_continuity_on_grids(self, l, h):
        # small input steps produce small output steps (the slope of
        # asinh(1/sinh(l/2)) is bounded by ~1/l on this range)
        assert abs(collar_width(l + h) - collar_width(l)) <= 2.0 * h / l + 1e-12

    @pytest.mark.parametrize("bad", [0.0, -1.0, math.inf, math.nan])
    def test_domain_errors(self, bad):
        with pytest.raises(ValidationError):
            collar_width(bad)


class TestCrossingLengthLower:
    def test_pinned_small_length(self):
        got = crossing_length_lower(0.01)
        assert got == pytest.approx(CROSSING_AT_001, rel=1e-14)
        assert got >= math.log(100.0)

    def test_fixed_point(self):
        assert crossing_length_lower(FIXED_POINT) == pytest.approx(
            FIXED_POINT, rel=1e-14
        )

    def test_at_length_one(self):
        got = crossing_length_lower(1.0)
        assert got == pytest.approx(2 * COLLAR_AT_1, rel=1e-14)
        assert got >= math.log(1.0)

    def test_collar_inequality_small_regime(self):
        # 2 w(l) >= log(1/l) throughout (0, 0.1]
        for k in range(2000):
            l = 10.0 ** (-9.0 + 8.0 * k / 1999.0)  # log-spaced in [1e-9, 0.1]
            assert crossing_length_lower(l) >= math.log(1.0 / l)


class TestPentagonSide:
    def test_degenerate(self):
        a = math.asinh(1.0)
        assert pentagon_side(a, a) == 0.0

    def test_pinned_value(self):
        # mpmath: acosh(2) = 1.316957896924816708...
        c = pentagon_side(math.asinh(1.0), math.asinh(2.0))
        assert c == pytest.approx(1.3169578969248166, rel=1e-14)

    def test_unit_output(self):
        # sinh(a)^2 = cosh(1) forces c = 1
        a = math.asinh(math.sqrt(math.cosh(1.0)))
        assert pentagon_side(a, a) == pytest.approx(1.0, rel=1e-12)

    def test_infeasible(self):
        with pytest.raises(InfeasibleError):
            pentagon_side(0.5, 0.5)

    @given(st.floats(min_value=0.1, max_value=12.0),
           st.floats(min_value=0.1, max_value=12.0))
    def test_defining_identity(self, a, b):
        product = math.sinh(a) * math.sinh(b)
        if product < 1.0:
            with pytest.raises(InfeasibleError):
                pentagon_side(a, b)
            return
        c = pentagon_side(a, b)
        assert math.cosh(c) == pytest.approx(product, rel=1e-12)


class TestBersCrossingBound:
    def test_log_term_clamps(self):
        assert bers_crossing_bound(1.0, C2) == C2.C2
        assert bers_crossing_bound(5.0, C2) == C2.C2

    def test_pinned_values(self):
        assert bers_crossing_bound(math.exp(-10.0), C2) == pytest.approx(41.0, rel=1e-12)
        assert bers_crossing_bound(0.01, C2) == pytest.approx(
            30.210340371976183, rel=1e-14
        )

    def test_monotone_non_increasing(self):
        grid = [10.0 ** (-6 + k * 0.25) for k in range(40)]
        values = [bers_crossing_bound(l, C2) for l in grid]
        assert all(a >= b for a, b in zip(values, values[1:]))


class TestWolpertEnvelope:
    def test_identity_at_zero_distance(self):
        assert wolpert_envelope(0.125, C2) == (0.125, 0.125)

    def test_pinned_values(self):
        consts = HypConstants(genus=2, K=0.5)  # wolpert_c = e
        lo, hi = wolpert_envelope(0.01, consts)
        assert lo == pytest.approx(0.0036787944117144233, rel=1e-14)
        assert hi == pytest.approx(0.027182818284590452, rel=1e-14)

        consts = HypConstants(genus=2, K=1.0)  # wolpert_c = e^2
        lo, hi = wolpert_envelope(1.0 / 2**3, consts)
        assert lo == pytest.approx(0.016916910404576586, rel=1e-14)
        assert hi == pytest.approx(0.9236320123663313, rel=1e-14)

    @given(st.floats(min_value=1e-8, max_value=100.0),
           st.floats(min_value=0.0, max_value=3.0))
    def test_contains_input(self, l, K):
        lo, hi = wolpert_envelope(l, HypConstants(genus=2, K=K))
        assert lo <= l <= hi
        if K == 0.0:
            assert lo == hi == l


class TestThurstonLengthUpper:
    def test_identity_at_zero(self):
        assert thurston_length_upper(3.7, C2) == 3.7

    def test_pinned_values(self):
        assert thurston_length_upper(0.5, HypConstants(genus=2, K=1.0)) == pytest.approx(
            1.3591409142295226, rel=1e-14
        )
        assert thurston_length_upper(
            0.25, HypConstants(genus=2, K=math.log(2.0))
        ) == pytest.approx(0.5, rel=1e-14)


class TestLemma41Envelope:
    def test_degenerate(self):
        consts = HypConstants(genus=2, K=0.0, lemma41_c=1.0)
        assert lemma41_envelope(1e-4, consts) == (1e-4, 1e-4)

    def test_pinned_values(self):
        consts = HypConstants(genus=2, K=0.0, lemma41_c=2.0)
        lo, hi = lemma41_envelope(1e-4, consts)
        assert lo == pytest.approx(5e-5, rel=1e-14)
        assert hi == pytest.approx(0.02, rel=1e-14)

        consts = HypConstants(genus=2, K=0.0, lemma41_c=3.0)
        lo, hi = lemma41_envelope(1e-6, consts)
        assert lo == pytest.approx(1e-6 / 3.0, rel=1e-14)
        assert hi == pytest.approx(0.03, rel=1e-12)

    def test_out_of_regime(self):
        with pytest.raises(OutOfRegimeError):
            lemma41_envelope(0.2, C2)

    @given(st.floats(min_value=1e-12, max_value=0.1),
           st.floats(min_value=1.0, max_value=8.0))
    def test_ordered(self, l, c):
        lo, hi = lemma41_envelope(l, HypConstants(genus=2, K=0.0, lemma41_c=c))
        assert lo <= l <= hi

    def test_dominates_linear_bound_for_small_lengths(self):
        # c * l^(1/c) >= c * l on every l <= 1
        for c in (1.5, 2.0, 5.0):
            consts = HypConstants(genus=2, K=0.0, lemma41_c=c, lemma41_eps=0.999)
            for k in range(200):
                l = 10.0 ** (-12 + 12 * k / 200.0)
                _, hi = lemma41_envelope(l, consts)
                assert hi >= c * l


class TestThurstonLowerBound:
    def test_identical(self):
        assert thurston_lower_bound([1.0, 2.0, 0.5], [1.0, 2.0, 0.5]) == 0.0

    def test_single_doubled_curve(self):
        assert thurston_lower_bound([1.0, 2.0], [1.0, 4.0]) == pytest.approx(
            math.log(2.0), rel=1e-14
        )

    def test_pinned_swap(self):
        assert thurston_lower_bound([1.0, 0.5], [0.5, 1.0]) == pytest.approx(
            math.log(2.0), rel=1e-14
        )

    def test_usage_errors(self):
        with pytest.raises(ValidationError):
            thurston_lower_bound([], [])
        with pytest.raises(ValidationError):
            thurston_lower_bound([1.0], [1.0, 2.0])
        with pytest.raises(ValidationError):
            thurston_lower_bound([1.0, -2.0], [1.0, 1.0])

    @given(
        st.lists(st.floats(min_value=1e-6, max_value=1e6), min_size=1, max_size=8),
        st.lists(st.floats(min_value=1e-6, max_value=1e6), min_size=8, max_size=8),
    )
    def test_round_trip_sum_nonnegative(self, xs, ys):
        ys = ys[: len(xs)]
        forward = thurston_lower_bound(xs, ys)
        backward = thurston_lower_bound(ys, xs)
        assert forward + backward >= -1e-12


class TestHypConstants:
    def test_default_resolution(self):
        consts = HypConstants(genus=3, K=0.5)
        assert consts.wolpert_c == pytest.approx(math.e, rel=1e-15)
        assert consts.lemma41_c == pytest.approx(2.0 * math.exp(0.5), rel=1e-15)
        assert consts.bers_B == 42.0
        assert consts.C2 == 42.0
        assert consts.lemma41_eps == 0.1

    def test_unit_wolpert_needs_zero_distance(self):
        with pytest.raises(ValidationError):
            HypConstants(genus=2, K=0.5, wolpert_c=1.0)
        assert HypConstants(genus=2, K=0.0, wolpert_c=1.0).wolpert_c == 1.0

    @pytest.mark.parametrize(
        "kwargs",
        [
            {"genus": 1},
            {"genus": 2, "K": -0.1},
            {"genus": 2, "wolpert_c": 0.5},
            {"genus": 2, "lemma41_c": 0.9},
            {"genus": 2, "lemma41_eps": 0.0},
            {"genus": 2, "lemma41_eps": 1.5},
            {"genus": 2, "C1": -1.0},
            {"genus": 2, "cprime": 0.0},
        ],
    )
    def test_invariant_violations(self, kwargs):
        with pytest.raises(ValidationError):
            HypConstants(**kwargs)
