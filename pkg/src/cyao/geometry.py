"""Planar primitives: distances, directions, angular gaps and cones.

Point sets are ``(n, 2)`` float arrays; single points are anything indexable
as ``p[0], p[1]``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import NamedTuple, Sequence

import numpy as np

from .errors import CoincidentPoints, InvalidParameter

TAU = 2.0 * math.pi

# absolute tolerance on angles (unit-scale geometry)
EPS_ANG = 1e-12
# absolute tolerance on squared distances for general-position diagnostics
EPS_GP = 1e-9


class Point(NamedTuple):
    x: float
    y: float


def as_points(points) -> np.ndarray:
    """Coerce ``points`` into a read-only ``(n, 2)`` float64 array."""
    arr = np.array(points, dtype=float).reshape(-1, 2)
    if not np.all(np.isfinite(arr)):
        raise InvalidParameter("point coordinates must be finite")
    arr.setflags(write=False)
    return arr


def normalize_angle(a: float) -> float:
    """Map ``a`` into ``[0, 2*pi)``."""
    r = a % TAU
    if r >= TAU:
        r = 0.0
    return r


def check_aperture(theta: float) -> float:
    theta = float(theta)
    if not (0.0 < theta <= TAU + EPS_ANG):
        raise InvalidParameter(f"aperture must lie in (0, 2pi], got {theta!r}")
    return min(theta, TAU)


def dist(p, q) -> float:
    return math.hypot(p[0] - q[0], p[1] - q[1])


def direction(p, q) -> float:
    """Angle of ``q - p`` counter-clockwise from the positive x-axis."""
    dx = q[0] - p[0]
    dy = q[1] - p[1]
    if dx == 0.0 and dy == 0.0:
        raise CoincidentPoints(f"direction undefined for coincident points {tuple(p)}")
    return normalize_angle(math.atan2(dy, dx))


def ccw_gap(frm: float, to: float) -> float:
    """Counter-clockwise angular distance from ``frm`` to ``to`` in ``[0, 2*pi)``.

    Gaps within ``EPS_ANG`` of 0 or 2*pi snap to 0, so nearly equal
    directions count as equal.
    """
    g = (to - frm) % TAU
    if g < EPS_ANG or g > TAU - EPS_ANG:
        return 0.0
    return g


def cw_gap(frm: float, to: float) -> float:
    return ccw_gap(to, frm)


def in_cone(apex, orientation: float, aperture: float, p) -> bool:
    """Closed-cone membership: boundary rays at ``orientation`` and
    ``orientation + aperture`` both count as inside."""
    if aperture >= TAU:
        direction(apex, p)  # still reject p == apex
        return True
    return ccw_gap(orientation, direction(apex, p)) <= aperture + EPS_ANG


def rotate(points, angle: float, center=(0.0, 0.0)) -> np.ndarray:
    pts = np.asarray(points, dtype=float).reshape(-1, 2) - np.asarray(center)
    c, s = math.cos(angle), math.sin(angle)
    out = pts @ np.array([[c, s], [-s, c]]) + np.asarray(center)
    return out


def angle_at(apex, p, q) -> float:
    """Unsigned angle ``p apex q`` in ``[0, pi]``; 0 when either side is degenerate."""
    ux, uy = p[0] - apex[0], p[1] - apex[1]
    vx, vy = q[0] - apex[0], q[1] - apex[1]
    if (ux == 0.0 and uy == 0.0) or (vx == 0.0 and vy == 0.0):
        return 0.0
    return abs(math.atan2(ux * vy - uy * vx, ux * vx + uy * vy))


@dataclass(frozen=True)
class GeneralPositionReport:
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def check_general_position(points, eps: float = EPS_GP) -> GeneralPositionReport:
    """Find duplicate points and apexes that see two points at equal distance.

    Each violation is ``(apex, (i, j), kind)`` with kind ``"duplicate-point"``
    or ``"equal-distance"``; squared distances are compared with absolute
    tolerance ``eps``.
    """
    pts = as_points(points)
    n = len(pts)
    diff = pts[:, None, :] - pts[None, :, :]
    sq = np.einsum("ijk,ijk->ij", diff, diff)
    violations = []
    for i in range(n):
        for j in range(i + 1, n):
            if sq[i, j] <= eps:
                violations.append((i, (i, j), "duplicate-point"))
    for apex in range(n):
        others = [j for j in range(n) if j != apex and sq[apex, j] > eps]
        order = sorted(others, key=lambda j: sq[apex, j])
        for k in range(len(order) - 1):
            i, j = order[k], order[k + 1]
            if sq[apex, j] - sq[apex, i] <= eps:
                violations.append((apex, (min(i, j), max(i, j)), "equal-distance"))
    return GeneralPositionReport(violations)
