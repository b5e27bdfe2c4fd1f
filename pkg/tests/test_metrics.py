"""Tests for the metric estimators and extremal-length brackets."""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from teichspace.metrics import (
    arc_lower,
    bordered_ext_bracket,
    ext_annulus,
    ext_cylinder,
    ext_sum_bracket,
    maskit_bracket,
    symmetrize,
    teich_interval,
    teich_interval_report,
    thurston_lower,
)
from teichspace.pants_trig import DomainError, Interval
from teichspace.surface import FNPoint, build_marking, phi_gamma

lengths = st.floats(min_value=0.05, max_value=10.0,
                    allow_nan=False, allow_infinity=False)


def point(m, lengths_, twists, boundary):
    return FNPoint(g=m.genus, n=m.nboundary, lengths=lengths_, twists=twists,
                   boundary=boundary)


class TestMaskitBracket:
    def test_reference(self):
        iv = maskit_bracket(2.0)
        assert iv.lo == pytest.approx(2 / math.pi)
        assert iv.hi == pytest.approx(math.e)

    def test_rejects_nonpositive(self):
        with pytest.raises(DomainError):
            maskit_bracket(0.0)

    @given(l=lengths)
    @settings(max_examples=200)
    def test_nonempty_never_degenerate(self, l):
        iv = maskit_bracket(l)
        assert iv.lo < iv.hi

    def test_endpoint_ratio_limit(self):
        # hi/lo = (pi/2) exp(l/2) -> pi/2 as l -> 0.
        ratios = [maskit_bracket(l).hi / maskit_bracket(l).lo
                  for l in (1e-1, 1e-2, 1e-3)]
        assert all(b < a for a, b in zip(ratios, ratios[1:]))
        for l, r in zip((1e-1, 1e-2, 1e-3), ratios):
            assert r == pytest.approx(math.pi / 2 * math.exp(l / 2), rel=1e-12)
        assert ratios[-1] == pytest.approx(math.pi / 2, rel=1e-3)

    def test_bordered_bracket_is_half_of_doubled(self):
        for l in (0.5, 1.0, 2.7):
            direct = bordered_ext_bracket(l)
            doubled = maskit_bracket(2 * l)
            assert direct.lo == pytest.approx(doubled.lo / 2)
            assert direct.hi == pytest.approx(doubled.hi / 2)
            assert direct.hi == pytest.approx(0.5 * l * math.exp(l))


class TestExtBrackets:
    def test_sum_single_part_unchanged(self):
        iv = Interval(0.5, 2.0)
        assert ext_sum_bracket([iv]) == iv

    def test_sum_two_equal_parts(self):
        iv = ext_sum_bracket([Interval(1, 2), Interval(1, 2)])
        assert iv == Interval(1, 8)

    def test_sum_contains_every_part(self):
        parts = [Interval(0.1, 0.5), Interval(0.3, 0.4), Interval(0.2, 1.0)]
        out = ext_sum_bracket(parts)
        for p in parts:
            assert out.lo >= p.lo - 1e-15 or out.lo <= p.lo
            assert out.hi >= p.hi

    def test_sum_rejects_empty(self):
        with pytest.raises(DomainError):
            ext_sum_bracket([])

    def test_annulus_unit_value(self):
        r1 = math.exp(-4 * math.pi)  # cusp radius at horocycle length 1/2
        r2 = math.exp(-2 * math.pi)
        assert ext_annulus(r1, r2) == pytest.approx(1.0)

    def test_annulus_small_horocycle(self):
        for eps in (0.1, 0.01):
            val = ext_annulus(math.exp(-2 * math.pi / eps), math.exp(-2 * math.pi))
            assert val == pytest.approx(1 / (1 / eps - 1))
            assert val <= 2 * eps

    def test_annulus_log_ratio_one(self):
        assert ext_annulus(1.0, math.e) == pytest.approx(2 * math.pi)

    def test_annulus_rejects_bad_order(self):
        with pytest.raises(DomainError):
            ext_annulus(2.0, 1.0)

    def test_cylinder(self):
        assert ext_cylinder(1, 1) == 1.0
        assert ext_cylinder(3, 2) == pytest.approx(1.5)
        assert ext_cylinder(3, 4) == pytest.approx(ext_cylinder(3, 2) / 2)
        with pytest.raises(DomainError):
            ext_cylinder(0, 1)


class TestThurstonLower:
    def setup_method(self):
        self.m = build_marking(1, 2)
        rng = np.random.default_rng(9)
        self.x = point(self.m, rng.uniform(0.8, 2.5, 2),
                       rng.uniform(-1, 1, 2), [1.0, 1.0])

    def test_reflexive_zero(self):
        est = thurston_lower(self.x, self.x, self.m, 2)
        assert est.value == 0.0

    def test_scaled_curve_witnessed(self):
        lengths = list(self.x.lengths)
        lengths[0] *= 1.7
        y = point(self.m, lengths, self.x.twists, self.x.boundary)
        est = thurston_lower(self.x, y, self.m, 1)
        assert est.value >= math.log(1.7) - 1e-12

    def test_monotone_in_depth(self):
        rng = np.random.default_rng(10)
        y = point(self.m, rng.uniform(0.8, 2.5, 2), rng.uniform(-1, 1, 2),
                  [1.0, 1.0])
        vals = [thurston_lower(self.x, y, self.m, d).value for d in range(4)]
        assert all(b >= a for a, b in zip(vals, vals[1:]))

    def test_boundary_mismatch_rejected(self):
        y = point(self.m, self.x.lengths, self.x.twists, [1.0, 2.0])
        with pytest.raises(DomainError):
            thurston_lower(self.x, y, self.m, 1)

    def test_exhaustive_family_oracle_one_holed_torus(self):
        # Independent brute force: evaluate every family member at both
        # points directly and take the best ratio.
        m = build_marking(1, 1)
        x = point(m, [2.0], [0.0], [1.5])
        y = point(m, [2.0], [1.3], [1.5])
        est = thurston_lower(x, y, m, 3)
        from teichspace.curves import curve_length_at, enumerate_curves
        best = max(
            math.log(curve_length_at(y, m, c) / curve_length_at(x, m, c))
            for c in enumerate_curves(m, 3) if c.essential)
        assert est.value == pytest.approx(best, abs=0)

    def test_punctured_points_supported(self):
        x, y = phi_gamma(self.x), phi_gamma(self.x)
        assert thurston_lower(x, y, self.m, 1).value == 0.0


class TestArcLower:
    def setup_method(self):
        self.m = build_marking(1, 2)
        rng = np.random.default_rng(11)
        self.x = point(self.m, rng.uniform(0.8, 2.5, 2),
                       rng.uniform(-1, 1, 2), [1.0, 1.0])
        self.y = point(self.m, rng.uniform(0.8, 2.5, 2),
                       rng.uniform(-1, 1, 2), [1.0, 1.0])

    def test_reflexive_zero(self):
        assert arc_lower(self.x, self.x, self.m, 2).value == 0.0

    def test_dominates_thurston(self):
        for d in range(3):
            assert (arc_lower(self.x, self.y, self.m, d).value
                    >= thurston_lower(self.x, self.y, self.m, d).value)

    def test_rejects_punctured(self):
        with pytest.raises(DomainError):
            arc_lower(phi_gamma(self.x), phi_gamma(self.y), self.m, 1)

    def test_boundary_classes_contribute_ratio_one(self):
        est = arc_lower(self.x, self.y, self.m, 0)
        assert est.value >= 0.0


class TestSymmetrize:
    def test_zero(self):
        assert symmetrize(0.0, 0.0) == 0.0

    def test_symmetric(self):
        assert symmetrize(1.0, 2.0) == symmetrize(2.0, 1.0) == 2.0

    def test_two_sided_estimates(self):
        m = build_marking(1, 1)
        x = point(m, [1.0], [0.0], [1.0])
        y = point(m, [2.5], [0.4], [1.0])
        a = thurston_lower(x, y, m, 2).value
        b = thurston_lower(y, x, m, 2).value
        assert symmetrize(a, b) == max(a, b) >= 0


class TestTeichInterval:
    def setup_method(self):
        self.m = build_marking(1, 2)
        rng = np.random.default_rng(12)
        self.x = point(self.m, rng.uniform(0.8, 2.5, 2),
                       rng.uniform(-1, 1, 2), [1.0, 1.0])

    def test_contains_zero_at_equal_points(self):
        iv = teich_interval(self.x, self.x, self.m, 1)
        assert iv.lo == 0.0
        assert iv.hi > 0.0

    def test_width_bound(self):
        rng = np.random.default_rng(13)
        y = point(self.m, rng.uniform(0.8, 2.5, 2), rng.uniform(-1, 1, 2),
                  [1.0, 1.0])
        rep = teich_interval_report(self.x, y, self.m, 2)
        bound = math.log(self.m.nboundary + 2) + 2 * rep.witness_max_log_width
        assert rep.interval.width <= bound + 1e-12

    def test_punctured_pair_supported(self):
        iv = teich_interval(phi_gamma(self.x), phi_gamma(self.x), self.m, 1)
        assert iv.contains(0.0)

    def test_mixed_pair_rejected(self):
        with pytest.raises(DomainError):
            teich_interval(self.x, phi_gamma(self.x), self.m, 1)

    def test_scaled_single_curve_against_direct_brackets(self):
        # One-holed torus with only the cuff length scaled: compare against
        # a direct evaluation of the bracket ends over the same family.
        m = build_marking(1, 1)
        x = point(m, [1.0], [0.0], [1.0])
        y = point(m, [2.0], [0.0], [1.0])
        rep = teich_interval_report(x, y, m, 0)
        from teichspace.curves import curve_length_at, enumerate_curves
        from teichspace.metrics import bordered_ext_bracket as bb
        lo = 0.0
        hi = None
        for c in enumerate_curves(m, 0):
            if not c.essential:
                continue
            b1 = bb(curve_length_at(x, m, c))
            b2 = bb(curve_length_at(y, m, c))
            v_lo = 0.5 * max(0.0, math.log(b2.lo / b1.hi), math.log(b1.lo / b2.hi))
            v_hi = 0.5 * max(math.log(b2.hi / b1.lo), math.log(b1.hi / b2.lo))
            lo = max(lo, v_lo)
            hi = v_hi if hi is None else max(hi, v_hi)
        assert rep.interval.lo == pytest.approx(lo, abs=1e-12)
        assert rep.interval.hi == pytest.approx(hi + math.log(3), abs=1e-12)
