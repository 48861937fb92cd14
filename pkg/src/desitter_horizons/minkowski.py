"""Flat Lorentz arithmetic on R^{n+1} with signature (+,...,+,-).

Coordinates are ordered (x_1, ..., x_n, t); the form is
    <u, v> = sum_k u_k v_k - u_t v_t.
Time orientation is fixed by the constant field (0, ..., 0, 1).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

# Absolute threshold for sign decisions on form values, scaled by the
# Euclidean magnitudes of the operands (robust near the null cone).
EPS = 1e-9


class CausalClass(Enum):
    TIMELIKE = "timelike"
    SPACELIKE = "spacelike"
    NULL = "null"
    ZERO = "zero"


class TimeDirection(Enum):
    FUTURE = "future"
    PAST = "past"
    NONE = "none"


def _as_vector(v) -> np.ndarray:
    arr = np.asarray(v, dtype=float)
    if arr.ndim != 1:
        raise ValueError(f"expected a 1-d vector, got shape {arr.shape}")
    if arr.size < 3:
        raise ValueError(
            f"vectors must have n+1 >= 3 components, got {arr.size}"
        )
    return arr


def metric(n: int) -> np.ndarray:
    """The matrix diag(1, ..., 1, -1) with n spatial entries."""
    g = np.eye(n + 1)
    g[-1, -1] = -1.0
    return g


def inner(u, v) -> float:
    """Lorentz bilinear form of two vectors of equal dimension."""
    u = _as_vector(u)
    v = _as_vector(v)
    if u.size != v.size:
        raise ValueError(f"dimension mismatch: {u.size} vs {v.size}")
    return float(u[:-1] @ v[:-1] - u[-1] * v[-1])


def sign_scale(u, v) -> float:
    """Threshold scale for sign tests on <u, v>: max(1, |u||v|) (Euclidean)."""
    return max(1.0, float(np.linalg.norm(u) * np.linalg.norm(v)))


def classify(v) -> CausalClass:
    """Trichotomy of a vector under the form, with a Zero case."""
    v = _as_vector(v)
    if float(np.linalg.norm(v)) <= EPS:
        return CausalClass.ZERO
    q = inner(v, v)
    if abs(q) <= EPS * sign_scale(v, v):
        return CausalClass.NULL
    return CausalClass.TIMELIKE if q < 0.0 else CausalClass.SPACELIKE


def time_direction(v) -> TimeDirection:
    """Future/Past split of non-spacelike vectors by the orientation field."""
    v = _as_vector(v)
    cls = classify(v)
    if cls in (CausalClass.SPACELIKE, CausalClass.ZERO):
        return TimeDirection.NONE
    # g(X, v) = -v_t for X = (0, ..., 0, 1).
    g_x_v = -v[-1]
    if g_x_v < 0.0:
        return TimeDirection.FUTURE
    if g_x_v > 0.0:
        return TimeDirection.PAST
    return TimeDirection.NONE


@dataclass(frozen=True)
class Isometry:
    """A linear map preserving the form, tagged with its time behaviour."""

    matrix: np.ndarray
    preserves_time: bool

    @property
    def n(self) -> int:
        return self.matrix.shape[0] - 1

    def apply(self, v) -> np.ndarray:
        return self.matrix @ _as_vector(v)

    def compose(self, other: "Isometry") -> "Isometry":
        """self after other: (self.compose(other)).apply(v) = self(other(v))."""
        return Isometry(
            matrix=self.matrix @ other.matrix,
            preserves_time=self.preserves_time == other.preserves_time,
        )

    def inverse(self) -> "Isometry":
        g = metric(self.n)
        return Isometry(
            matrix=g @ self.matrix.T @ g,
            preserves_time=self.preserves_time,
        )


def isometry_from_matrix(m: np.ndarray) -> Isometry:
    """Wrap a matrix, deriving the time flag from the sign of g(X, m X)."""
    m = np.asarray(m, dtype=float)
    # g(X, m X) = -m[-1, -1]; negative value means time is preserved.
    return Isometry(matrix=m, preserves_time=m[-1, -1] > 0.0)


def boost(psi: float, n: int = 2) -> Isometry:
    """Hyperbolic rotation in the (x_1, t) plane with rapidity psi."""
    m = np.eye(n + 1)
    c, s = math.cosh(psi), math.sinh(psi)
    m[0, 0] = c
    m[0, -1] = s
    m[-1, 0] = s
    m[-1, -1] = c
    return Isometry(matrix=m, preserves_time=True)


def central_symmetry(n: int = 2) -> Isometry:
    """Point reflection through the origin; reverses the time direction."""
    return Isometry(matrix=-np.eye(n + 1), preserves_time=False)


def spatial_rotation(axes: tuple[int, int], angle: float, n: int = 2) -> Isometry:
    """Plane rotation in two spatial coordinates (1-based indices in 1..n)."""
    i, j = axes
    if not (1 <= i <= n and 1 <= j <= n):
        raise ValueError(f"rotation axes must lie in 1..{n}, got {axes}")
    if i == j:
        raise ValueError("rotation axes must be distinct")
    m = np.eye(n + 1)
    c, s = math.cos(angle), math.sin(angle)
    a, b = i - 1, j - 1
    m[a, a] = c
    m[a, b] = -s
    m[b, a] = s
    m[b, b] = c
    return Isometry(matrix=m, preserves_time=True)


def verify_isometry(iso: Isometry) -> float:
    """Scaled max-norm residual of M^T G M - G; near zero for a valid isometry.

    The residual is divided by max(1, |M|_max^2) so the check stays
    meaningful for large-rapidity boosts, whose raw residual is dominated by
    rounding of huge hyperbolic entries.
    """
    g = metric(iso.n)
    raw = float(np.max(np.abs(iso.matrix.T @ g @ iso.matrix - g)))
    return raw / max(1.0, float(np.max(np.abs(iso.matrix))) ** 2)
