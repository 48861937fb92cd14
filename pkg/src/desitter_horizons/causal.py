"""Causal pasts/futures, light cones, and event horizons of the eternal observer.

Every set in play is a half-space (or hyperplane) section of the hyperboloid,
described by a covector acting on ambient coordinates. Membership answers are
three-way (Inside / Boundary / Outside) with an explicit signed margin, so
floating-point points near a horizon are reported as such instead of being
forced to one side.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .manifold import (
    Event,
    SpacetimeContext,
    WorldLine,
    canonicalize,
    on_hyperboloid,
    orientation_field,
    _unit_vectors,
)
from .minkowski import boost, inner

# Rapidity window for the finite-witness search; beyond |psi| ~ 60 the cone
# equation saturates at double precision.
_PSI_MAX = 60.0
_BISECT_ITERS = 200


class Region(Enum):
    INSIDE = "inside"
    BOUNDARY = "boundary"
    OUTSIDE = "outside"


@dataclass(frozen=True)
class CausalVerdict:
    region: Region
    margin: float


def _verdict(margin: float, band: float, open_only: bool = False) -> CausalVerdict:
    if abs(margin) <= band:
        return CausalVerdict(Region.BOUNDARY, margin)
    if open_only or margin < 0.0:
        return CausalVerdict(Region.OUTSIDE, margin)
    return CausalVerdict(Region.INSIDE, margin)


@dataclass(frozen=True)
class HalfSpaceSet:
    """{e on S(R) : a . coords(e)  rel  threshold} with a tolerance band.

    The margin is oriented so that positive values satisfy the relation; for
    equality sets members are always Boundary.
    """

    covector: np.ndarray
    relation: str  # one of <, >, =, <=, >=
    threshold: float
    band: float

    def __post_init__(self):
        a = np.asarray(self.covector, dtype=float)
        if not np.any(a):
            raise ValueError("covector must be nonzero")
        object.__setattr__(self, "covector", a)
        if self.relation not in ("<", ">", "=", "<=", ">="):
            raise ValueError(f"unknown relation {self.relation!r}")

    def margins(self, points: np.ndarray) -> np.ndarray:
        """Vectorized oriented margins for points of shape (..., n+1)."""
        raw = np.asarray(points, dtype=float) @ self.covector - self.threshold
        if self.relation in ("<", "<="):
            return -raw
        return raw

    def verdict(self, point) -> CausalVerdict:
        m = float(self.margins(np.asarray(point, dtype=float)))
        return _verdict(m, self.band, open_only=self.relation == "=")

    def contains(self, point) -> bool:
        return self.verdict(point).region is not Region.OUTSIDE


def _covector(ctx: SpacetimeContext, x1: float, t: float) -> np.ndarray:
    a = np.zeros(ctx.n + 1)
    a[0] = x1
    a[-1] = t
    return a


def _band(ctx: SpacetimeContext) -> float:
    return ctx.tol * ctx.radius


def cone_at_canonical_p(ctx: SpacetimeContext) -> HalfSpaceSet:
    """Light cone of the throat event (R, 0, ..., 0): the slice x_1 = R."""
    return HalfSpaceSet(_covector(ctx, 1.0, 0.0), "=", ctx.radius, _band(ctx))


def cone_at_L_psi(ctx: SpacetimeContext, psi: float) -> HalfSpaceSet:
    """Light cone at the observer event of rapidity psi:
    x_1 - t tanh(psi) = R / cosh(psi); the boost image of the throat cone."""
    return HalfSpaceSet(
        _covector(ctx, 1.0, -math.tanh(psi)),
        "=",
        ctx.radius / math.cosh(psi),
        _band(ctx),
    )


def J_minus_L(ctx: SpacetimeContext) -> HalfSpaceSet:
    """Observed events of the eternal observer: x_1 - t > 0."""
    return HalfSpaceSet(_covector(ctx, 1.0, -1.0), ">", 0.0, _band(ctx))


def J_plus_L(ctx: SpacetimeContext) -> HalfSpaceSet:
    """Influenced events of the eternal observer: x_1 + t > 0."""
    return HalfSpaceSet(_covector(ctx, 1.0, 1.0), ">", 0.0, _band(ctx))


def J_plus_negL(ctx: SpacetimeContext) -> HalfSpaceSet:
    """Causal future of the antipodal observer: x_1 - t < 0."""
    return HalfSpaceSet(_covector(ctx, 1.0, -1.0), "<", 0.0, _band(ctx))


def J_minus_negL(ctx: SpacetimeContext) -> HalfSpaceSet:
    """Causal past of the antipodal observer: x_1 + t < 0."""
    return HalfSpaceSet(_covector(ctx, 1.0, 1.0), "<", 0.0, _band(ctx))


def horizon_past(ctx: SpacetimeContext) -> HalfSpaceSet:
    """Past event horizon: the null plane section x_1 = t."""
    return HalfSpaceSet(_covector(ctx, 1.0, -1.0), "=", 0.0, _band(ctx))


def horizon_future(ctx: SpacetimeContext) -> HalfSpaceSet:
    """Future event horizon: the null plane section x_1 + t = 0."""
    return HalfSpaceSet(_covector(ctx, 1.0, 1.0), "=", 0.0, _band(ctx))


def _canonical_frame(p: Event):
    """Inverse of the frame isometry taking the canonical observer to p."""
    line = WorldLine(base=p, tangent=orientation_field(p))
    return canonicalize(line).inverse()


def _past_margin(q_canonical: np.ndarray, r: float) -> float:
    # In the canonical frame the closed causal past of the throat event is
    # {x_1 >= R, t <= 0}; the margin is the worse of the two residuals.
    return min(float(q_canonical[0]) - r, -float(q_canonical[-1]))


def causal_past_of_event(q: Event, p: Event) -> CausalVerdict:
    """Is q in the causal past of p? Decided in p's canonical frame.

    p is moved to (R, 0, ..., 0) by the time-preserving frame isometry built
    from the slice-orthogonal tangent at p; the apex and the cone itself are
    reported as Boundary.
    """
    ctx = p.context
    qc = _canonical_frame(p).apply(q.point)
    return _verdict(_past_margin(qc, ctx.radius), _band(ctx))


def causal_future_of_event(q: Event, p: Event) -> CausalVerdict:
    """Is q in the causal future of p? Mirror of causal_past_of_event."""
    ctx = p.context
    qc = _canonical_frame(p).apply(q.point)
    margin = min(float(qc[0]) - ctx.radius, float(qc[-1]))
    return _verdict(margin, _band(ctx))


def chord_oracle(p: Event, q: Event) -> CausalVerdict:
    """Independent check: is q in the causal future of p, via the ambient chord.

    q lies in the causal future of p exactly when the chord q - p is
    non-spacelike and future directed; equivalently <p, q> >= R^2 with the
    right time order. Margins are in R^2 units.
    """
    ctx = p.context
    d = q.point - p.point
    c = inner(p.point, q.point) - ctx.radius**2
    dt = float(d[-1])
    # Wrong time order dominates the margin once the chord points pastward.
    margin = min(c, dt * ctx.radius)
    return _verdict(margin, ctx.tol * ctx.radius**2)


def chord_oracle_past(p: Event, q: Event) -> CausalVerdict:
    """Is q in the causal past of p? Same chord test with time order reversed."""
    ctx = p.context
    d = q.point - p.point
    c = inner(p.point, q.point) - ctx.radius**2
    margin = min(c, -float(d[-1]) * ctx.radius)
    return _verdict(margin, ctx.tol * ctx.radius**2)


def sample_causal_past_canonical(
    ctx: SpacetimeContext,
    count: int,
    rng: np.random.Generator,
    t_span: float = 3.0,
) -> np.ndarray:
    """Random events inside the canonical region {x_1 > R, t < 0} on S(R)."""
    r = ctx.radius
    t = -rng.uniform(0.0, t_span * r, count)
    x1_hi = np.sqrt(r**2 + t**2)
    x1 = rng.uniform(r, x1_hi)
    rest_r = np.sqrt(np.maximum(r**2 + t**2 - x1**2, 0.0))
    dirs = _unit_vectors(rng, count, ctx.n - 1)
    pts = np.empty((count, ctx.n + 1))
    pts[:, 0] = x1
    pts[:, 1:-1] = dirs * rest_r[:, None]
    pts[:, -1] = t
    return pts


def sample_horizon(
    ctx: SpacetimeContext,
    count: int,
    rng: np.random.Generator,
    future: bool = False,
    t_span: float = 3.0,
) -> np.ndarray:
    """Random events on a horizon: x_1 = t (past) or x_1 = -t (future).

    On either null plane the remaining spatial coordinates sweep a sphere of
    radius R, independent of t.
    """
    r = ctx.radius
    t = rng.uniform(-t_span * r, t_span * r, count)
    dirs = _unit_vectors(rng, count, ctx.n - 1)
    pts = np.empty((count, ctx.n + 1))
    pts[:, 0] = -t if future else t
    pts[:, 1:-1] = r * dirs
    pts[:, -1] = t
    return pts


@dataclass(frozen=True)
class SamplingReport:
    samples: int
    violations: int
    worst_margin: float


def nesting_check(
    ctx: SpacetimeContext,
    psi1: float,
    psi2: float,
    samples: int = 10_000,
    rng: np.random.Generator | None = None,
) -> SamplingReport:
    """Monotonicity of observer pasts: J^-(L(psi1)) lies inside J^-(L(psi2))
    whenever psi1 < psi2. Returns the violation count over random samples."""
    if not psi1 < psi2:
        raise ValueError(f"need psi1 < psi2, got {psi1} >= {psi2}")
    rng = np.random.default_rng(0) if rng is None else rng
    pts = sample_causal_past_canonical(ctx, samples, rng)
    pts = pts @ boost(psi1, ctx.n).matrix.T
    qc = pts @ boost(-psi2, ctx.n).matrix.T
    margins = np.minimum(qc[:, 0] - ctx.radius, -qc[:, -1])
    band = _band(ctx)
    violations = int(np.sum(margins < -band))
    return SamplingReport(
        samples=samples,
        violations=violations,
        worst_margin=float(margins.min()),
    )


def horizon_limit_check(ctx: SpacetimeContext, q: Event, psis) -> np.ndarray:
    """Residuals of q against the cone equations C_{L(psi)}.

    q must lie on the past horizon x_1 = t. The residual at rapidity psi is
    the sum of the two independently vanishing gaps
        |x_1 - t tanh(psi)| + R / cosh(psi),
    i.e. the distance to the asymptotic plane plus the decaying threshold;
    for x_1 = t >= 0 it decreases strictly to zero, exhibiting the horizon as
    the limiting cone position.
    """
    if horizon_past(ctx).verdict(q.point).region is not Region.BOUNDARY:
        raise ValueError("event is not on the past horizon x_1 = t")
    psis = np.asarray(psis, dtype=float)
    x1, t = float(q.point[0]), q.t
    return np.abs(x1 - t * np.tanh(psis)) + ctx.radius / np.cosh(psis)


@dataclass(frozen=True)
class ThroatIntersection:
    """The past horizon's trace on the throat slice: an intrinsic sphere of
    radius pi R / 2 about the observer's throat event."""

    context: SpacetimeContext
    center: Event
    plane_normal: np.ndarray  # spatial covector of the horizon plane, unit
    expected_distance: float

    def sample(self, count: int, rng: np.random.Generator) -> np.ndarray:
        """Events on the intersection set {a . x = 0, t = 0, |x| = R}."""
        ctx = self.context
        # Orthonormal basis of the spatial plane orthogonal to the normal.
        basis = _null_space(self.plane_normal)
        dirs = _unit_vectors(rng, count, basis.shape[0])
        pts = np.empty((count, ctx.n + 1))
        pts[:, :-1] = ctx.radius * dirs @ basis
        pts[:, -1] = 0.0
        return pts

    def distance(self, point) -> float:
        """Great-circle distance on the throat sphere from the center event."""
        ctx = self.context
        x = np.asarray(point, dtype=float)[:-1]
        c = float(self.center.spatial @ x) / ctx.radius**2
        return ctx.radius * math.acos(max(-1.0, min(1.0, c)))


def _null_space(normal: np.ndarray) -> np.ndarray:
    """Orthonormal basis (rows) of the hyperplane orthogonal to `normal`."""
    n = normal.size
    _, _, vt = np.linalg.svd(normal[None, :])
    return vt[1:n]


def throat_intersection(
    ctx: SpacetimeContext, line: WorldLine | None = None
) -> ThroatIntersection:
    """Trace of the past horizon of `line` on the throat slice t = 0.

    The world line crosses the throat at a unique rapidity; the horizon plane
    in the line's canonical frame pulls back to a hyperplane through the
    origin, whose t = 0 section is an intrinsic sphere of radius pi R / 2.
    """
    from .manifold import canonical_worldline

    if line is None:
        line = canonical_worldline(ctx)
    r = ctx.radius
    p_t = float(line.base.point[-1])
    u_t = float(line.tangent[-1])
    psi_star = math.atanh(-p_t / (r * u_t))
    center_pt = line.at(psi_star)
    center_pt[-1] = 0.0  # exact throat membership despite rounding
    center = Event(point=center_pt, context=ctx)
    tangent_star = line.velocity(psi_star) / r
    frame_inv = canonicalize(WorldLine(base=center, tangent=tangent_star)).inverse()
    a = frame_inv.matrix[0] - frame_inv.matrix[-1]
    a_spatial = a[:-1]
    norm = float(np.linalg.norm(a_spatial))
    if norm <= ctx.tol:
        raise ValueError("degenerate horizon plane")
    return ThroatIntersection(
        context=ctx,
        center=center,
        plane_normal=a_spatial / norm,
        expected_distance=math.pi * r / 2.0,
    )


def union_witness(ctx: SpacetimeContext, q: Event) -> float:
    """Finite rapidity psi with q inside the causal past of L(psi).

    Membership is monotone in psi, so a bisection over [-PSI_MAX, PSI_MAX]
    finds (approximately) the smallest admitting rapidity. Raises if q is not
    an observed event of the eternal observer.
    """

    def margin(psi: float) -> float:
        qc = boost(-psi, ctx.n).apply(q.point)
        return _past_margin(qc, ctx.radius)

    if margin(_PSI_MAX) <= 0.0:
        raise ValueError("event is not inside the observed region J^-(L)")
    if margin(-_PSI_MAX) > 0.0:
        return -_PSI_MAX
    lo, hi = -_PSI_MAX, _PSI_MAX
    for _ in range(_BISECT_ITERS):
        mid = 0.5 * (lo + hi)
        if margin(mid) > 0.0:
            hi = mid
        else:
            lo = mid
    return hi
