"""The one-sheeted hyperboloid sum x_k^2 - t^2 = R^2 and its geodesics.

Events live on the hyperboloid; world lines are boost orbits through a base
event; the rulings of the surface supply the null geodesics. All samplers
take an explicit numpy Generator so runs are reproducible.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .minkowski import (
    CausalClass,
    Isometry,
    TimeDirection,
    _as_vector,
    classify,
    inner,
    time_direction,
)

# Pivot threshold for rejecting near-degenerate frame candidates during
# Minkowski Gram-Schmidt completion.
_GS_PIVOT = 1e-6


@dataclass(frozen=True)
class SpacetimeContext:
    """Ambient parameters: radius R, spatial dimension n, relative tolerance."""

    radius: float = 1.0
    n: int = 2
    tol: float = 1e-9

    def __post_init__(self):
        if self.radius <= 0.0:
            raise ValueError(f"radius must be positive, got {self.radius}")
        if self.n < 2:
            raise ValueError(f"spatial dimension must be >= 2, got {self.n}")


def on_hyperboloid(v, ctx: SpacetimeContext) -> bool:
    """Membership test |<v, v> - R^2| <= tol * R^2."""
    v = _as_vector(v)
    if v.size != ctx.n + 1:
        raise ValueError(f"expected {ctx.n + 1} components, got {v.size}")
    r2 = ctx.radius**2
    return abs(inner(v, v) - r2) <= ctx.tol * r2


@dataclass(frozen=True)
class Event:
    """A point certified to lie on the hyperboloid."""

    point: np.ndarray
    context: SpacetimeContext

    def __post_init__(self):
        object.__setattr__(self, "point", _as_vector(self.point).copy())
        if not on_hyperboloid(self.point, self.context):
            raise ValueError(
                f"point {self.point} is not on the hyperboloid of radius "
                f"{self.context.radius}"
            )

    @property
    def spatial(self) -> np.ndarray:
        return self.point[:-1]

    @property
    def t(self) -> float:
        return float(self.point[-1])


def event(ctx: SpacetimeContext, *coords) -> Event:
    """Convenience constructor from individual coordinates."""
    if len(coords) == 1:
        coords = coords[0]
    return Event(point=np.asarray(coords, dtype=float), context=ctx)


@dataclass(frozen=True)
class SliceSphere:
    """The constant-time section t = c: a round sphere of radius sqrt(R^2+c^2)."""

    context: SpacetimeContext
    t: float
    spatial_radius: float = field(init=False)

    def __post_init__(self):
        r = math.hypot(self.context.radius, self.t)
        object.__setattr__(self, "spatial_radius", r)

    def sample(self, count: int, rng: np.random.Generator) -> np.ndarray:
        """Uniform events on the slice, shape (count, n+1)."""
        dirs = _unit_vectors(rng, count, self.context.n)
        pts = np.empty((count, self.context.n + 1))
        pts[:, :-1] = self.spatial_radius * dirs
        pts[:, -1] = self.t
        return pts

    def contains(self, e: Event) -> bool:
        return abs(e.t - self.t) <= self.context.tol * max(1.0, self.context.radius)


def slice_sphere(ctx: SpacetimeContext, c: float) -> SliceSphere:
    return SliceSphere(context=ctx, t=c)


def _unit_vectors(rng: np.random.Generator, count: int, dim: int) -> np.ndarray:
    v = rng.standard_normal((count, dim))
    norms = np.linalg.norm(v, axis=1, keepdims=True)
    # Resample degenerate draws; probability ~0 but keeps the result total.
    bad = norms[:, 0] < 1e-12
    while np.any(bad):
        v[bad] = rng.standard_normal((int(bad.sum()), dim))
        norms = np.linalg.norm(v, axis=1, keepdims=True)
        bad = norms[:, 0] < 1e-12
    return v / norms


def sample_hyperboloid(
    ctx: SpacetimeContext,
    count: int,
    rng: np.random.Generator,
    t_span: float = 3.0,
) -> np.ndarray:
    """Random events with t uniform in [-t_span*R, t_span*R], shape (count, n+1)."""
    r = ctx.radius
    t = rng.uniform(-t_span * r, t_span * r, count)
    dirs = _unit_vectors(rng, count, ctx.n)
    pts = np.empty((count, ctx.n + 1))
    pts[:, :-1] = dirs * np.sqrt(r**2 + t**2)[:, None]
    pts[:, -1] = t
    return pts


@dataclass(frozen=True)
class WorldLine:
    """Timelike geodesic L(psi) = cosh(psi) p + R sinh(psi) u.

    The base p lies on the hyperboloid, the tangent u is a future unit
    timelike vector with <p, u> = 0; psi is the rapidity of the boost
    subgroup whose orbit the line is.
    """

    base: Event
    tangent: np.ndarray

    def __post_init__(self):
        u = _as_vector(self.tangent).copy()
        object.__setattr__(self, "tangent", u)
        ctx = self.base.context
        if u.size != ctx.n + 1:
            raise ValueError("tangent dimension does not match the base event")
        scale = max(1.0, float(np.linalg.norm(u)) ** 2)
        if abs(inner(u, u) + 1.0) > 1e-7 * scale:
            raise ValueError(f"tangent is not unit timelike: <u,u> = {inner(u, u)}")
        mixed_scale = max(1.0, float(np.linalg.norm(u) * np.linalg.norm(self.base.point)))
        if abs(inner(self.base.point, u)) > 1e-7 * mixed_scale:
            raise ValueError("tangent is not tangent to the hyperboloid at the base")
        if time_direction(u) is not TimeDirection.FUTURE:
            raise ValueError("tangent must be future directed")

    @property
    def context(self) -> SpacetimeContext:
        return self.base.context

    def at(self, psi: float) -> np.ndarray:
        r = self.context.radius
        return math.cosh(psi) * self.base.point + r * math.sinh(psi) * self.tangent

    def velocity(self, psi: float) -> np.ndarray:
        """dL/dpsi; at psi = 0 this is R times the unit tangent."""
        r = self.context.radius
        return math.sinh(psi) * self.base.point + r * math.cosh(psi) * self.tangent

    def sample(self, psis) -> np.ndarray:
        psis = np.asarray(psis, dtype=float)
        r = self.context.radius
        return (
            np.cosh(psis)[:, None] * self.base.point[None, :]
            + r * np.sinh(psis)[:, None] * self.tangent[None, :]
        )


def canonical_worldline(ctx: SpacetimeContext) -> WorldLine:
    """The boost orbit through (R, 0, ..., 0) with tangent (0, ..., 0, 1)."""
    p = np.zeros(ctx.n + 1)
    p[0] = ctx.radius
    u = np.zeros(ctx.n + 1)
    u[-1] = 1.0
    return WorldLine(base=Event(point=p, context=ctx), tangent=u)


def orientation_field(e: Event) -> np.ndarray:
    """The future unit timelike tangent orthogonal to the constant-time slices.

    At an event (x, t) with |x|^2 = R^2 + t^2 the field is
        Y = (t x / (R |x|), |x| / R),
    which is unit timelike, tangent to the hyperboloid, has spatial part
    parallel to x, and reduces to (0, ..., 0, 1) on the throat.
    """
    r = e.context.radius
    x = e.spatial
    nx = float(np.linalg.norm(x))
    y = np.empty_like(e.point)
    y[:-1] = e.t * x / (r * nx)
    y[-1] = nx / r
    return y


def canonicalize(line: WorldLine) -> Isometry:
    """Time-preserving isometry mapping the canonical world line onto `line`.

    Builds a form-orthonormal frame by Minkowski Gram-Schmidt: the first
    column is base/R, the last is the tangent, and the remaining spacelike
    columns come from canonical basis vectors orthogonalized against the
    accepted ones (candidates with squared norm below the pivot threshold
    are skipped).
    """
    ctx = line.context
    dim = ctx.n + 1
    cols: list[tuple[np.ndarray, float]] = [
        (line.base.point / ctx.radius, 1.0),
        (line.tangent.copy(), -1.0),
    ]
    spatial_extra: list[np.ndarray] = []
    for k in range(dim):
        if len(spatial_extra) == ctx.n - 1:
            break
        v = np.zeros(dim)
        v[k] = 1.0
        for w, sgn in cols:
            v = v - (inner(v, w) / sgn) * w
        q = inner(v, v)
        if q <= _GS_PIVOT:
            continue
        v = v / math.sqrt(q)
        cols.append((v, 1.0))
        spatial_extra.append(v)
    if len(spatial_extra) != ctx.n - 1:
        raise ValueError("failed to complete a frame around the world line")

    m = np.empty((dim, dim))
    m[:, 0] = line.base.point / ctx.radius
    for j, v in enumerate(spatial_extra, start=1):
        m[:, j] = v
    m[:, -1] = line.tangent
    return Isometry(matrix=m, preserves_time=True)


@dataclass(frozen=True)
class NullRay:
    """Straight line gamma(s) = p0 + s u lying entirely on the hyperboloid."""

    base: Event
    direction: np.ndarray

    def at(self, s: float) -> np.ndarray:
        return self.base.point + s * self.direction

    def sample(self, ss) -> np.ndarray:
        ss = np.asarray(ss, dtype=float)
        return self.base.point[None, :] + ss[:, None] * self.direction[None, :]


def null_ray(p0: Event, u) -> NullRay:
    """Construct a ruling through p0; u must be null, nonzero, and tangent."""
    u = _as_vector(u)
    ctx = p0.context
    if u.size != ctx.n + 1:
        raise ValueError("direction dimension does not match the base event")
    if float(np.linalg.norm(u)) <= ctx.tol:
        raise ValueError("direction must be nonzero")
    if classify(u) is not CausalClass.NULL:
        raise ValueError(f"direction is not null: <u,u> = {inner(u, u)}")
    mixed_scale = max(1.0, float(np.linalg.norm(u) * np.linalg.norm(p0.point)))
    if abs(inner(p0.point, u)) > ctx.tol * mixed_scale:
        raise ValueError("direction is not tangent to the hyperboloid at the base")
    return NullRay(base=p0, direction=u.copy())
