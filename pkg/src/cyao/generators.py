"""Point-set generators: the adversarial constructions plus seeded random sets."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import InvalidParameter
from .geometry import as_points

KINDS = ("ellipse-chain", "double-polygon", "two-segments", "uniform-random", "perturbed")

CHAIN_STEP = 0.5


def _ellipse(r: float, phi):
    return 0.5 + 0.5 * np.cos(phi), r * np.sin(phi)


def _next_on_ellipse(r: float, phi0: float, sign: int, step: float = CHAIN_STEP) -> float:
    """Parameter of the next point at chord distance ``step`` from ``phi0``,
    moving along the ellipse in direction ``sign``."""
    x0, y0 = _ellipse(r, phi0)

    def chord(dphi):
        x, y = _ellipse(r, phi0 + sign * dphi)
        return math.hypot(x - x0, y - y0)

    # the whole curve moves at speed <= r per unit parameter
    h = step / (8.0 * r)
    lo, hi = 0.0, h
    while chord(hi) < step:
        lo, hi = hi, hi + h
        if hi > 2 * math.pi:
            raise InvalidParameter("chain step exceeds the ellipse")
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if chord(mid) < step:
            lo = mid
        else:
            hi = mid
        if hi - lo < 1e-16:
            break
    return phi0 + sign * 0.5 * (lo + hi)


def gen_ellipse_chain(r: float) -> np.ndarray:
    """Points on the ellipse through ``p = (0, 0)`` and ``q = (1, 0)`` with
    vertical semi-axis ``r``, marched in four chains of chord length 1/2.

    Chains grow up and down from ``p`` and ``q`` until the two same-side
    frontier points are closer than 1/2; no bridging point is added.  Row 0 is
    ``p`` and row 1 is ``q``.
    """
    if not r >= 1:
        raise InvalidParameter(f"r must be >= 1, got {r!r}")
    left = [math.pi]  # parameter along the upper half, p side
    while True:
        lx, ly = _ellipse(r, left[-1])
        # the q-side frontier is the mirror image across x = 1/2
        if abs(1.0 - 2.0 * lx) < CHAIN_STEP and len(left) > 1:
            break
        left.append(_next_on_ellipse(r, left[-1], -1))
    phis = np.array(left[1:])
    up_p = np.column_stack(_ellipse(r, phis))
    up_q = np.column_stack([1.0 - up_p[:, 0], up_p[:, 1]])
    down_p = np.column_stack([up_p[:, 0], -up_p[:, 1]])
    down_q = np.column_stack([up_q[:, 0], -up_q[:, 1]])
    pts = np.vstack([[[0.0, 0.0], [1.0, 0.0]], up_p, up_q, down_p, down_q])
    return as_points(pts)


def polygon_size(epsilon: float) -> int:
    return max(3, math.ceil(4 * math.pi / epsilon))


def gen_double_polygon(epsilon: float) -> np.ndarray:
    """Two unit-side regular ``n``-gons, ``n = ceil(4 pi / epsilon)``, two units apart.

    The second polygon is the mirror image of the first across a vertical
    line, so a vertex of each faces the other and the closest inter-polygon
    pair is exactly those two vertices.
    """
    if not 0 < epsilon <= math.pi:
        raise InvalidParameter(f"epsilon must lie in (0, pi], got {epsilon!r}")
    n = polygon_size(epsilon)
    R = 1.0 / (2.0 * math.sin(math.pi / n))
    ang = 2 * math.pi * np.arange(n) / n
    P = np.column_stack([R * np.cos(ang), R * np.sin(ang)])
    shift = 2 * R + 2.0
    Q = np.column_stack([shift - P[:, 0], P[:, 1]])
    return as_points(np.vstack([P, Q]))


def gen_two_segments(alpha: float, m: int, seed: int = 0) -> np.ndarray:
    """``m`` points on each of two unit segments leaving the origin at angle ``alpha``.

    The shared endpoint (row 0) is emitted once and is not counted among the
    ``m`` per segment.  Spacing is jittered by up to ``1e-6`` so no point sees
    two others at the same distance.
    """
    if not 0 < alpha < math.pi:
        raise InvalidParameter("alpha must lie in (0, pi)")
    if m < 2:
        raise InvalidParameter("m must be >= 2")
    rng = np.random.default_rng(seed)
    s = np.arange(1, m + 1) / m
    sa = s + rng.uniform(-1e-6, 1e-6, m)
    sb = s + rng.uniform(-1e-6, 1e-6, m)
    A = np.column_stack([sa, np.zeros(m)])
    B = np.column_stack([sb * math.cos(alpha), sb * math.sin(alpha)])
    return as_points(np.vstack([[[0.0, 0.0]], A, B]))


def gen_uniform(n: int, seed: int) -> np.ndarray:
    if n < 1:
        raise InvalidParameter("n must be >= 1")
    return as_points(np.random.default_rng(seed).random((n, 2)))


def perturb(points, delta: float, seed: int) -> np.ndarray:
    if delta < 0:
        raise InvalidParameter("delta must be >= 0")
    pts = as_points(points)
    if delta == 0:
        return pts
    off = np.random.default_rng(seed).uniform(-delta, delta, pts.shape)
    return as_points(pts + off)


@dataclass(frozen=True)
class GenSpec:
    kind: str
    parameters: dict = field(default_factory=dict)
    seed: int = 0
    base: "GenSpec | None" = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise InvalidParameter(f"unknown generator kind {self.kind!r}")


def _param(spec: GenSpec, name: str):
    try:
        return spec.parameters[name]
    except KeyError:
        raise InvalidParameter(f"{spec.kind} needs parameter {name!r}") from None


def generate(spec: GenSpec) -> np.ndarray:
    if spec.kind == "ellipse-chain":
        return gen_ellipse_chain(float(_param(spec, "r")))
    if spec.kind == "double-polygon":
        return gen_double_polygon(float(_param(spec, "epsilon")))
    if spec.kind == "two-segments":
        return gen_two_segments(float(_param(spec, "alpha")), int(_param(spec, "m")), spec.seed)
    if spec.kind == "uniform-random":
        return gen_uniform(int(_param(spec, "n")), spec.seed)
    if spec.base is None:
        raise InvalidParameter("perturbed generator needs a base spec")
    return perturb(generate(spec.base), float(_param(spec, "delta")), spec.seed)
