import math

import numpy as np
import pytest

from desitter_horizons.causal import (
    Region,
    causal_future_of_event,
    causal_past_of_event,
    chord_oracle,
    chord_oracle_past,
    cone_at_L_psi,
    cone_at_canonical_p,
    horizon_future,
    horizon_limit_check,
    horizon_past,
    J_minus_L,
    J_minus_negL,
    J_plus_L,
    J_plus_negL,
    nesting_check,
    sample_causal_past_canonical,
    sample_horizon,
    throat_intersection,
    union_witness,
)
from desitter_horizons.manifold import (
    Event,
    SpacetimeContext,
    WorldLine,
    canonical_worldline,
    event,
    on_hyperboloid,
    sample_hyperboloid,
)
from desitter_horizons.minkowski import boost, central_symmetry, spatial_rotation

CTX = SpacetimeContext(radius=1.0, n=2)


class TestCones:
    def test_canonical_cone_members(self):
        cone = cone_at_canonical_p(CTX)
        assert cone.verdict((1, 0.8, 0.8)).region is Region.BOUNDARY
        assert cone.verdict((1, 0, 0)).region is Region.BOUNDARY
        assert cone.verdict((0, 1, 0)).region is Region.OUTSIDE

    def test_psi_zero_reduces_to_canonical(self):
        c0 = cone_at_L_psi(CTX, 0.0)
        np.testing.assert_array_equal(c0.covector, cone_at_canonical_p(CTX).covector)
        assert c0.threshold == cone_at_canonical_p(CTX).threshold

    def test_boost_pushforward(self):
        psi = 1.3
        b = boost(psi)
        cone = cone_at_L_psi(CTX, psi)
        for a in (-0.5, 0.0, 0.9, 2.0):
            moved = b.apply((1.0, a, a))
            assert abs(float(cone.margins(moved))) <= 1e-9

    def test_limit_recovers_horizon_covector(self):
        cone = cone_at_L_psi(CTX, 40.0)
        np.testing.assert_allclose(cone.covector, [1, 0, -1], atol=1e-12)
        assert cone.threshold == pytest.approx(0.0, abs=1e-12)


class TestHalfSpaces:
    @pytest.mark.parametrize(
        "factory,point,region",
        [
            (J_minus_L, (1, 0, 0), Region.INSIDE),
            (J_minus_L, (0, 1, 0), Region.BOUNDARY),
            (J_minus_L, (-1, 0, 0), Region.OUTSIDE),
            (J_plus_L, (1, 0, 0), Region.INSIDE),
            (J_plus_L, (0, 1, 0), Region.BOUNDARY),
            (J_plus_L, (-1, 0, 0), Region.OUTSIDE),
            (J_plus_negL, (-1, 0, 0), Region.INSIDE),
            (J_plus_negL, (1, 0, 0), Region.OUTSIDE),
            (J_minus_negL, (-1, 0, 0), Region.INSIDE),
            (J_minus_negL, (1, 0, 0), Region.OUTSIDE),
        ],
    )
    def test_examples(self, factory, point, region):
        assert factory(CTX).verdict(point).region is region

    def test_central_symmetry_identity(self):
        # Members of J^-(L) map to members of J^+(-L) under the point
        # reflection: J^-(L) = -J^+(-L).
        rng = np.random.default_rng(5)
        pts = sample_hyperboloid(CTX, 5000, rng)
        jm = J_minus_L(CTX)
        jpn = J_plus_negL(CTX)
        i0 = central_symmetry(CTX.n)
        inside = pts[jm.margins(pts) > jm.band]
        moved = inside @ i0.matrix.T
        assert np.all(jpn.margins(moved) > 0)


class TestHorizons:
    def test_throat_point_on_both(self):
        assert horizon_past(CTX).verdict((0, 1, 0)).region is Region.BOUNDARY
        assert horizon_future(CTX).verdict((0, 1, 0)).region is Region.BOUNDARY

    def test_ruling_stays_on_past_horizon(self):
        hp = horizon_past(CTX)
        for s in np.linspace(-5, 5, 21):
            assert hp.verdict((s, 1.0, s)).region is Region.BOUNDARY

    def test_throat_event_not_on_horizon(self):
        assert horizon_past(CTX).verdict((1, 0, 0)).region is Region.OUTSIDE

    def test_trichotomy(self):
        # Every event is inside exactly one of the two open sets or on the
        # shared boundary.
        rng = np.random.default_rng(17)
        pts = sample_hyperboloid(CTX, 20_000, rng)
        jm = J_minus_L(CTX).margins(pts)
        jp = J_plus_negL(CTX).margins(pts)
        band = J_minus_L(CTX).band
        inside_both = (jm > band) & (jp > band)
        assert not inside_both.any()
        outside_both = (jm < -band) & (jp < -band)
        assert not outside_both.any()


class TestCausalPastOfEvent:
    def test_apex_is_boundary(self):
        p = event(CTX, 1, 0, 0)
        assert causal_past_of_event(p, p).region is Region.BOUNDARY

    def test_past_cone_point(self):
        p = event(CTX, 1, 0, 0)
        q = event(CTX, 1, 0.7, -0.7)
        assert causal_past_of_event(q, p).region is Region.BOUNDARY

    def test_antipode_outside(self):
        p = event(CTX, 1, 0, 0)
        q = event(CTX, -1, 0, 0)
        assert causal_past_of_event(q, p).region is Region.OUTSIDE

    def test_future_mirror(self):
        p = event(CTX, 1, 0, 0)
        wl = canonical_worldline(CTX)
        q = Event(point=wl.at(1.0), context=CTX)
        assert causal_future_of_event(q, p).region is Region.INSIDE
        assert causal_past_of_event(q, p).region is Region.OUTSIDE

    def test_isometry_invariance(self):
        rng = np.random.default_rng(23)
        iso = spatial_rotation((1, 2), 1.1).compose(boost(0.8))
        pts = sample_hyperboloid(CTX, 300, rng, t_span=2.0)
        qs = sample_hyperboloid(CTX, 300, rng, t_span=2.0)
        for p_pt, q_pt in zip(pts, qs):
            p = Event(point=p_pt, context=CTX)
            q = Event(point=q_pt, context=CTX)
            v1 = causal_past_of_event(q, p)
            v2 = causal_past_of_event(
                Event(point=iso.apply(q_pt), context=CTX),
                Event(point=iso.apply(p_pt), context=CTX),
            )
            if min(abs(v1.margin), abs(v2.margin)) > 1e-7:
                assert v1.region is v2.region


class TestChordOracle:
    def test_worldline_point_in_future(self):
        p = event(CTX, 1, 0, 0)
        q = event(CTX, math.cosh(1), 0, math.sinh(1))
        assert chord_oracle(p, q).region is Region.INSIDE

    def test_antipode_outside(self):
        p = event(CTX, 1, 0, 0)
        assert chord_oracle(p, event(CTX, -1, 0, 0)).region is Region.OUTSIDE

    def test_same_point_boundary(self):
        p = event(CTX, 1, 0, 0)
        assert chord_oracle(p, p).region is Region.BOUNDARY

    @pytest.mark.parametrize("n", [2, 3])
    def test_agrees_with_canonicalization_route(self, n):
        ctx = SpacetimeContext(radius=1.0, n=n)
        rng = np.random.default_rng(100 + n)
        ps = sample_hyperboloid(ctx, 2000, rng, t_span=2.0)
        qs = sample_hyperboloid(ctx, 2000, rng, t_span=2.0)
        for p_pt, q_pt in zip(ps, qs):
            p = Event(point=p_pt, context=ctx)
            q = Event(point=q_pt, context=ctx)
            v_canon = causal_past_of_event(q, p)
            v_chord = chord_oracle_past(p, q)
            if v_canon.region is not v_chord.region:
                assert abs(v_chord.margin) <= 1e-7


class TestNesting:
    def test_grid_has_no_violations(self):
        report = nesting_check(CTX, 0.0, 1.0, samples=10_000)
        assert report.violations == 0

    def test_tiny_gap(self):
        report = nesting_check(
            CTX, 1.0 - 1e-6, 1.0, samples=2000, rng=np.random.default_rng(2)
        )
        assert report.violations == 0

    def test_observer_event_nested(self):
        wl = canonical_worldline(CTX)
        q = Event(point=wl.at(0.4), context=CTX)
        p = Event(point=wl.at(1.0), context=CTX)
        assert causal_past_of_event(q, p).region is not Region.OUTSIDE

    def test_requires_ordered_rapidities(self):
        with pytest.raises(ValueError):
            nesting_check(CTX, 1.0, 1.0)


class TestHorizonLimit:
    def test_decreasing_residuals_match_closed_form(self):
        q = event(CTX, 2.0, 1.0, 2.0)
        psis = np.array([1.0, 2.0, 4.0, 8.0])
        res = horizon_limit_check(CTX, q, psis)
        # Independent evaluation of the two gap terms for x1 = t = 2, R = 1.
        expected = 2.0 * (1.0 - np.tanh(psis)) + 1.0 / np.cosh(psis)
        np.testing.assert_allclose(res, expected, atol=1e-12)
        assert np.all(np.diff(res) < 0)

    def test_throat_horizon_point(self):
        res = horizon_limit_check(CTX, event(CTX, 0, 1, 0), [1.0, 3.0])
        np.testing.assert_allclose(res, 1.0 / np.cosh([1.0, 3.0]), atol=1e-12)

    def test_constant_rapidity(self):
        res = horizon_limit_check(CTX, event(CTX, 2, 1, 2), [0.0, 0.0])
        assert res[0] == res[1]

    def test_rejects_off_horizon_event(self):
        with pytest.raises(ValueError):
            horizon_limit_check(CTX, event(CTX, 1, 0, 0), [1.0])


class TestThroatIntersection:
    def test_canonical_two_points(self):
        ti = throat_intersection(CTX)
        pts = ti.sample(50, np.random.default_rng(3))
        for p in pts:
            assert np.allclose(np.abs(p), [0, 1, 0], atol=1e-12)
            assert ti.distance(p) == pytest.approx(math.pi / 2, abs=1e-12)

    def test_center_distance_zero(self):
        ti = throat_intersection(CTX)
        assert ti.distance(ti.center.point) == 0.0

    def test_n3_circle(self):
        ctx = SpacetimeContext(radius=1.0, n=3)
        ti = throat_intersection(ctx)
        pts = ti.sample(200, np.random.default_rng(4))
        for p in pts:
            assert abs(p[0]) <= 1e-12 and p[-1] == 0.0
            assert p[1] ** 2 + p[2] ** 2 == pytest.approx(1.0, abs=1e-12)
            assert ti.distance(p) == pytest.approx(math.pi / 2, abs=1e-9)

    def test_general_worldline(self):
        ctx = SpacetimeContext(radius=2.5, n=2)
        rng = np.random.default_rng(9)
        iso = spatial_rotation((1, 2), 0.7).compose(boost(1.1))
        canon = canonical_worldline(ctx)
        line = WorldLine(
            base=Event(point=iso.apply(canon.at(0.4)), context=ctx),
            tangent=iso.apply(canon.velocity(0.4)) / ctx.radius,
        )
        ti = throat_intersection(ctx, line)
        assert abs(ti.center.t) <= 1e-9
        for p in ti.sample(100, rng):
            assert on_hyperboloid(p, ctx)
            assert ti.distance(p) == pytest.approx(math.pi * 2.5 / 2, abs=1e-9)


class TestUnionProperty:
    def test_witness_finite_for_members(self):
        rng = np.random.default_rng(31)
        pts = sample_causal_past_canonical(CTX, 500, rng)
        for p in pts:
            psi = union_witness(CTX, Event(point=p, context=CTX))
            assert -60.0 <= psi <= 60.0
            qc = boost(-psi).apply(p)
            assert qc[0] - 1.0 >= -1e-9 and -qc[-1] >= -1e-9

    def test_non_member_rejected(self):
        with pytest.raises(ValueError):
            union_witness(CTX, event(CTX, -1, 0, 0))


class TestRulingProperty:
    def test_horizon_samples_lie_on_the_two_rays(self):
        rng = np.random.default_rng(41)
        pts = sample_horizon(CTX, 2000, rng)
        # For n = 2 the past horizon is exactly the two rays (s, +-R, s).
        assert np.all(np.abs(np.abs(pts[:, 1]) - 1.0) <= 1e-9)
        assert np.all(np.abs(pts[:, 0] - pts[:, 2]) <= 1e-9)

    def test_null_direction_preserves_horizon_general_n(self):
        ctx = SpacetimeContext(radius=1.0, n=3)
        rng = np.random.default_rng(43)
        hp = horizon_past(ctx)
        u = np.array([1.0, 0.0, 0.0, 1.0])
        for p in sample_horizon(ctx, 200, rng):
            for s in (-3.0, 0.5, 4.0):
                moved = p + s * u
                assert hp.verdict(moved).region is Region.BOUNDARY
                assert on_hyperboloid(moved, ctx)
