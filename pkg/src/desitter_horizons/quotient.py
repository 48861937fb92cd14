"""Antipodal identification of the hyperboloid.

Gluing e with -e produces the elliptic quotient; the causal half-spaces meet
each antipodal pair at most once, so the identification is faithful on them,
while the horizons are carried onto themselves. These facts are exposed as
sampling checks.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .causal import HalfSpaceSet, SamplingReport, sample_horizon
from .manifold import Event, SpacetimeContext, sample_hyperboloid


def antipode(e: Event) -> Event:
    """The point reflection -e; stays on the hyperboloid."""
    return Event(point=-e.point, context=e.context)


@dataclass(frozen=True)
class QuotientPoint:
    """A glued pair {e, -e}, held by its sign-normalized representative."""

    representative: Event

    def __eq__(self, other) -> bool:
        if not isinstance(other, QuotientPoint):
            return NotImplemented
        return np.array_equal(
            self.representative.point, other.representative.point
        )


def _normalized_coords(coords: np.ndarray, ctx: SpacetimeContext) -> np.ndarray:
    # Flip the sign iff the first coordinate of non-negligible magnitude is
    # negative; negation of floats is exact, so e and -e normalize identically.
    guard = ctx.tol * ctx.radius
    for c in coords:
        if abs(c) > guard:
            return -coords if c < 0.0 else coords.copy()
    return coords.copy()


def quotient_rep(e: Event) -> QuotientPoint:
    """Canonical representative of the glued pair; identical for e and -e."""
    rep = _normalized_coords(e.point, e.context)
    return QuotientPoint(representative=Event(point=rep, context=e.context))


def injectivity_check(
    region: HalfSpaceSet,
    ctx: SpacetimeContext,
    samples: int = 10_000,
    rng: np.random.Generator | None = None,
) -> SamplingReport:
    """No antipodal pair meets an open causal half-space twice.

    Samples events inside `region` and asserts the antipode falls outside.
    Equality regions (horizons) are rejected: they are centrally symmetric.
    """
    if region.relation == "=":
        raise ValueError("injectivity is only meaningful for open half-spaces")
    rng = np.random.default_rng(0) if rng is None else rng
    band = region.band
    collected = 0
    violations = 0
    worst = np.inf
    attempts = 0
    while collected < samples:
        attempts += 1
        if attempts > 200:
            raise RuntimeError("sampler failed to populate the region")
        pts = sample_hyperboloid(ctx, samples, rng)
        margins = region.margins(pts)
        inside = pts[margins > band]
        if inside.size == 0:
            continue
        inside = inside[: samples - collected]
        anti_margins = region.margins(-inside)
        violations += int(np.sum(anti_margins > -band))
        worst = min(worst, float(anti_margins.max()) if anti_margins.size else worst)
        collected += inside.shape[0]
    return SamplingReport(samples=collected, violations=violations, worst_margin=worst)


def horizon_symmetry_check(
    ctx: SpacetimeContext,
    samples: int = 10_000,
    rng: np.random.Generator | None = None,
) -> SamplingReport:
    """Both horizons are carried onto themselves by the point reflection.

    Also checks the cross condition: the reflection of a past-horizon event
    is on the future horizon only where the two planes meet (x_1 = t = 0).
    """
    rng = np.random.default_rng(0) if rng is None else rng
    violations = 0
    worst = 0.0
    for future in (False, True):
        pts = sample_horizon(ctx, samples, rng, future=future)
        a = np.zeros(ctx.n + 1)
        a[0] = 1.0
        a[-1] = 1.0 if future else -1.0
        residuals = np.abs((-pts) @ a)
        band = ctx.tol * ctx.radius
        violations += int(np.sum(residuals > band))
        worst = max(worst, float(residuals.max()))
        # Cross check: -e on the other horizon forces x_1 = t = 0.
        other = a.copy()
        other[-1] = -other[-1]
        on_other = np.abs((-pts) @ other) <= band
        degenerate = (np.abs(pts[:, 0]) <= band) & (np.abs(pts[:, -1]) <= band)
        violations += int(np.sum(on_other & ~degenerate))
    return SamplingReport(samples=2 * samples, violations=violations, worst_margin=worst)
