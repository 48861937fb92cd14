"""Scene construction and SVG/CSV emission for the horizon figures.

The scenes show the n = 2 hyperboloid with the eternal observer's world
line, the two straight null rulings forming the past horizon, and the
throat circle with its two horizon-intersection points marked. The
compactified variant squeezes the infinite time range into a bounded band
while keeping every vertex on the hyperboloid.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .causal import throat_intersection
from .manifold import SpacetimeContext, canonical_worldline
from .minkowski import boost

LABELS = frozenset(
    {
        "hyperboloid-meridian",
        "hyperboloid-parallel",
        "worldline",
        "horizon-past",
        "horizon-future",
        "throat-circle",
        "cone-psi",
    }
)
MARKER_LABEL = "throat-intersection"

_MERIDIANS = 12
_PARALLELS = 6
DEFAULT_PSI_LIST = (-1.0, 0.0, 1.0)


@dataclass(frozen=True)
class Polyline:
    label: str
    points: np.ndarray  # shape (k, 3): columns x1, x2, t
    closed: bool = False

    def __post_init__(self):
        if self.label not in LABELS:
            raise ValueError(f"unknown polyline label {self.label!r}")
        pts = np.asarray(self.points, dtype=float)
        if pts.ndim != 2 or pts.shape[1] != 3:
            raise ValueError(f"points must have shape (k, 3), got {pts.shape}")
        object.__setattr__(self, "points", pts)


@dataclass(frozen=True)
class FigureScene:
    context: SpacetimeContext
    polylines: tuple[Polyline, ...]
    markers: np.ndarray  # shape (m, 3) marked events
    projection: tuple[float, float, float] = (0.35, 0.20, 1.0)
    compactified: bool = False
    t_max: float = 2.0

    def __post_init__(self):
        if not self.compactified and not self.t_max > 0.0:
            raise ValueError("finite scenes need t_max > 0")
        object.__setattr__(self, "markers", np.asarray(self.markers, dtype=float))

    def project(self, points: np.ndarray) -> np.ndarray:
        """Cabinet projection to screen coordinates (u, v)."""
        cu, cv, scale = self.projection
        pts = np.asarray(points, dtype=float)
        u = pts[:, 1] - cu * pts[:, 0]
        v = pts[:, 2] - cv * pts[:, 0]
        return scale * np.column_stack([u, v])


def compactify(points: np.ndarray, radius: float) -> np.ndarray:
    """Map (x1, x2, t) to (s x1, s x2, (2R/pi) atan(t/R)).

    The spatial rescale s = sqrt(R^2 + tau^2) / sqrt(R^2 + t^2) keeps every
    image point on the hyperboloid while the time extent stays below R.
    """
    pts = np.asarray(points, dtype=float)
    t = pts[:, 2]
    tau = (2.0 * radius / math.pi) * np.arctan(t / radius)
    sigma = np.sqrt((radius**2 + tau**2) / (radius**2 + t**2))
    out = np.empty_like(pts)
    out[:, 0] = sigma * pts[:, 0]
    out[:, 1] = sigma * pts[:, 1]
    out[:, 2] = tau
    return out


def _time_grid(ctx: SpacetimeContext, figure: str, t_max: float, resolution: int):
    if figure == "fig3":
        # Uniform in compactified time; the last sample sits just below the
        # boundary of the band.
        u = np.linspace(0.0, 1.0 - 1.0 / resolution, resolution)
        return ctx.radius * np.tan(0.5 * math.pi * u)
    return np.linspace(0.0, t_max, resolution)


def build_scene(
    ctx: SpacetimeContext,
    figure: str,
    t_max: float = 2.0,
    resolution: int = 64,
    psi_list=None,
    projection: tuple[float, float, float] = (0.35, 0.20, 1.0),
) -> FigureScene:
    """Assemble the polylines of one figure.

    figure: "fig2" (finite time), "fig3" (compactified), or "cones"
    ("fig2" plus light-cone curves for each rapidity in psi_list).
    """
    if ctx.n != 2:
        raise ValueError(
            "figures are defined for n = 2 only; for other dimensions export "
            "vertex data through the CSV interfaces directly"
        )
    if figure not in ("fig2", "fig3", "cones"):
        raise ValueError(f"unknown figure {figure!r}")
    if resolution < 8:
        raise ValueError(f"resolution must be >= 8, got {resolution}")
    if figure != "fig3" and not t_max > 0.0:
        raise ValueError("t_max must be positive")

    r = ctx.radius
    compactified = figure == "fig3"
    t_grid = _time_grid(ctx, figure, t_max, resolution)
    radii = np.sqrt(r**2 + t_grid**2)
    polylines: list[Polyline] = []

    for phi in np.linspace(0.0, 2.0 * math.pi, _MERIDIANS, endpoint=False):
        pts = np.column_stack(
            [radii * math.cos(phi), radii * math.sin(phi), t_grid]
        )
        polylines.append(Polyline("hyperboloid-meridian", pts))

    theta = np.linspace(0.0, 2.0 * math.pi, resolution + 1)
    level_idx = np.linspace(0, resolution - 1, _PARALLELS).round().astype(int)
    for i in level_idx:
        rr, tt = radii[i], t_grid[i]
        pts = np.column_stack(
            [rr * np.cos(theta[:-1]), rr * np.sin(theta[:-1]), np.full(resolution, tt)]
        )
        polylines.append(Polyline("hyperboloid-parallel", pts, closed=True))

    line = canonical_worldline(ctx)
    psis = np.arcsinh(t_grid / r)
    wl = line.sample(psis)
    polylines.append(Polyline("worldline", wl))

    for sign in (1.0, -1.0):
        pts = np.column_stack([t_grid, np.full_like(t_grid, sign * r), t_grid])
        polylines.append(Polyline("horizon-past", pts))

    circle = np.column_stack(
        [r * np.cos(theta[:-1]), r * np.sin(theta[:-1]), np.zeros(resolution)]
    )
    polylines.append(Polyline("throat-circle", circle, closed=True))

    if figure == "cones":
        psi_values = DEFAULT_PSI_LIST if psi_list is None else tuple(psi_list)
        s = np.linspace(-t_max, t_max, 2 * resolution - 1)
        for psi in psi_values:
            b = boost(psi, ctx.n).matrix
            for sign in (1.0, -1.0):
                # Rulings of the throat-event cone, pushed forward by the boost.
                base = np.column_stack([np.full_like(s, r), sign * s, s])
                polylines.append(Polyline("cone-psi", base @ b.T))

    # The two points where the past horizon meets the throat circle; for the
    # canonical observer these are (0, +-R, 0).
    throat = throat_intersection(ctx)
    direction = _null_space_direction(throat.plane_normal)
    markers = np.vstack(
        [
            np.append(r * direction, 0.0),
            np.append(-r * direction, 0.0),
        ]
    )

    if compactified:
        polylines = [
            Polyline(pl.label, compactify(pl.points, r), pl.closed)
            for pl in polylines
        ]
        markers = compactify(markers, r)

    return FigureScene(
        context=ctx,
        polylines=tuple(polylines),
        markers=markers,
        projection=projection,
        compactified=compactified,
        t_max=t_max,
    )


def _null_space_direction(normal: np.ndarray) -> np.ndarray:
    """Unit spatial direction orthogonal to the horizon plane normal (n = 2)."""
    d = np.array([-normal[1], normal[0]])
    return -d if d[1] < 0.0 or (d[1] == 0.0 and d[0] < 0.0) else d


def _fmt(x: float) -> str:
    return format(float(x), ".17g")


def emit_csv(scene: FigureScene, path) -> None:
    """One row per vertex: label, polyline and vertex indices, coordinates,
    and projected screen coordinates. Header-only for an empty scene."""
    rows = ["label,polyline,vertex,x1,x2,t,u,v"]
    index = 0
    for pl in scene.polylines:
        uv = scene.project(pl.points)
        for k, (p, s) in enumerate(zip(pl.points, uv)):
            rows.append(
                f"{pl.label},{index},{k},{_fmt(p[0])},{_fmt(p[1])},{_fmt(p[2])},"
                f"{_fmt(s[0])},{_fmt(s[1])}"
            )
        index += 1
    if scene.markers.size:
        uv = scene.project(scene.markers)
        for k, (p, s) in enumerate(zip(scene.markers, uv)):
            rows.append(
                f"{MARKER_LABEL},{index},{k},{_fmt(p[0])},{_fmt(p[1])},{_fmt(p[2])},"
                f"{_fmt(s[0])},{_fmt(s[1])}"
            )
    with open(path, "w", newline="") as fh:
        fh.write("\n".join(rows) + "\n")


_SVG_STYLE = (
    ".hyperboloid-meridian,.hyperboloid-parallel{stroke:#b8c0cc;stroke-width:0.35%;}"
    ".worldline{stroke:#1f4e9c;stroke-width:0.7%;}"
    ".horizon-past{stroke:#c22121;stroke-width:0.7%;}"
    ".horizon-future{stroke:#c28a21;stroke-width:0.7%;}"
    ".throat-circle{stroke:#2c8a4b;stroke-width:0.55%;}"
    ".cone-psi{stroke:#7a4ec2;stroke-width:0.45%;}"
    "path{fill:none;}"
    f"circle.{MARKER_LABEL}{{fill:#c22121;stroke:none;}}"
)


def emit_svg(scene: FigureScene, path, annotate_throat: bool = False) -> None:
    """Deterministic SVG 1.1: one path per polyline, class = label; the
    throat-intersection events become marker circles."""
    all_pts = [scene.project(pl.points) for pl in scene.polylines]
    if scene.markers.size:
        all_pts.append(scene.project(scene.markers))
    if all_pts:
        stacked = np.vstack(all_pts)
        # SVG y grows downward; flip the v axis.
        stacked = np.column_stack([stacked[:, 0], -stacked[:, 1]])
        lo = stacked.min(axis=0)
        hi = stacked.max(axis=0)
        span = np.maximum(hi - lo, 1e-9)
        lo = lo - 0.05 * span
        hi = hi + 0.05 * span
    else:
        lo = np.array([0.0, 0.0])
        hi = np.array([1.0, 1.0])
    w, h = hi - lo
    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'viewBox="{_fmt6(lo[0])} {_fmt6(lo[1])} {_fmt6(w)} {_fmt6(h)}">',
    ]
    if scene.compactified:
        parts.append(
            "<desc>Compactified time: (x1,x2,t) -> (s*x1, s*x2, (2R/pi)*atan(t/R)) "
            "with s = sqrt(R^2+tau^2)/sqrt(R^2+t^2); all vertices remain on the "
            "hyperboloid.</desc>"
        )
    parts.append(f"<style>{_SVG_STYLE}</style>")
    for pl in scene.polylines:
        uv = scene.project(pl.points)
        cmds = [f"M {_fmt6(uv[0, 0])} {_fmt6(-uv[0, 1])}"]
        cmds += [f"L {_fmt6(u)} {_fmt6(-v)}" for u, v in uv[1:]]
        if pl.closed:
            cmds.append("Z")
        parts.append(f'<path class="{pl.label}" d="{" ".join(cmds)}"/>')
    if scene.markers.size:
        uv = scene.project(scene.markers)
        radius = 0.012 * max(w, h) * (1.8 if annotate_throat else 1.0)
        cls = MARKER_LABEL + (" annotated" if annotate_throat else "")
        for u, v in uv:
            parts.append(
                f'<circle class="{cls}" cx="{_fmt6(u)}" cy="{_fmt6(-v)}" '
                f'r="{_fmt6(radius)}"/>'
            )
    parts.append("</svg>")
    with open(path, "w", newline="") as fh:
        fh.write("\n".join(parts) + "\n")


def _fmt6(x: float) -> str:
    return format(float(x), ".6g")
