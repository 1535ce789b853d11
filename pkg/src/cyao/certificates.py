"""Numeric and exact-arithmetic checks for the cY(2*pi/3) spanner argument.

Everything is normalized to ``a = (0, 0)``, ``b = (1, 0)``.  The inductive
set of ``a`` with respect to ``b`` is ``I_ab = {p : |ap| + t|pb| <= t|ab|}``;
the named points ``u, w, v*, u', c'`` and the angle ``psi`` are closed forms
in ``t``, and the remaining checks compare them against sampled geometry.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np
from scipy.optimize import brentq

from .errors import DomainError, InvalidParameter, PreconditionViolated
from .geometry import Point, angle_at, dist
from .polynomial import Polynomial, largest_real_root, poly_eval

P_CERT = Polynomial([-25, 90, -39, -246, 363, 138, -589, 216, 291, -204, -84, 6, 2])
CUBIC_CASE1 = Polynomial([2, 0, -4, 1])

EPS_CERT = 1e-12
SQRT3 = math.sqrt(3.0)

# Values printed to four decimals alongside the closed forms.
PRINTED = {
    "largest_root_p": 6.0411,
    "u": (0.3438, 0.5956),
    "w": (0.6561, 0.5956),
    "v_star": (0.6518, -0.7583),
    "u_prime": (0.1124, 0.3207),
    "c_prime": (0.3308, 0.9436),
    "tan_psi": 0.1885,
    "psi_deg": 10.6800,
}


@dataclass
class Certificate:
    name: str
    claimed: float
    computed: float
    residual: float
    tolerance: float
    details: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return bool(abs(self.residual) <= self.tolerance)

    def to_json(self) -> str:
        rec = {
            "format": 1,
            "name": self.name,
            "claimed": _num(self.claimed),
            "computed": _num(self.computed),
            "residual": _num(self.residual),
            "tolerance": _num(self.tolerance),
            "pass": self.passed,
        }
        if self.details:
            rec["details"] = {k: _num(v) for k, v in self.details.items()}
        return json.dumps(rec)


def _num(x):
    if isinstance(x, (bool, np.bool_)):
        return bool(x)
    if isinstance(x, (int, float, np.floating, np.integer, Fraction)):
        x = float(x)
        if math.isinf(x):
            return "inf" if x > 0 else "-inf"
        return x
    return x


def _value(name, claimed, computed, tol) -> Certificate:
    return Certificate(name, claimed, computed, computed - claimed, tol)


def _count(name, violations, total, tol=0) -> Certificate:
    return Certificate(name, 0, violations, violations, tol, {"samples": total})


@dataclass(frozen=True)
class InductiveSetParams:
    a: Point
    b: Point
    t: float

    def __post_init__(self):
        if not self.t > 1:
            raise InvalidParameter("t must exceed 1")
        if dist(self.a, self.b) == 0:
            raise InvalidParameter("a and b must differ")


def inductive_contains(params: InductiveSetParams, p, eps: float = EPS_CERT) -> bool:
    a, b, t = params.a, params.b, params.t
    return dist(a, p) + t * dist(p, b) <= t * dist(a, b) + eps


def quartic_residual(x, y, t):
    """Implicit equation of the boundary of ``I_ab``.  Positive inside ``I_ab``
    (e.g. ``(t**2 - 1)**2`` at ``b``), negative just outside; works on arrays."""
    k = (-2 + x) * x + y * y
    r2 = x * x + y * y
    return k * k * t**4 + r2 * r2 - 2 * (2 + k) * r2 * t * t


def _root_terms(t):
    s = t * t + 2 * t - 1
    r = (t - 1) * math.sqrt((t + 1) * (3 * t - 1))
    return s, r


def named_points(t: float) -> dict:
    """Closed-form points of both cases at parameter ``t > 2``."""
    if not t > 2:
        raise DomainError(f"named points need t > 2, got {t!r}")
    mu = t * (t - 2) / (t * t - 1)
    s, r = _root_terms(t)
    u = Point(mu / 2, SQRT3 * mu / 2)
    v_star = Point(s / (2 * t * t), -r / (2 * t * t))
    tan_psi = (SQRT3 * s - r) / (s + SQRT3 * r)
    psi = math.atan(tan_psi)
    slope = (SQRT3 * s + r) / (-s + SQRT3 * r)
    upx = (5 * t**4 - 2 * t**3 + 2 * t * t + 2 * t - 1 - SQRT3 * (t - 1) * (t * t + 4 * t - 1)
           * math.sqrt((t + 1) * (3 * t - 1))) / (4 * t * t * (t * t - 1))
    cpx = (-s + SQRT3 * r) / (4 * t * t)
    v = Point(v_star.x, -v_star.y)
    return {
        "a": Point(0.0, 0.0),
        "b": Point(1.0, 0.0),
        "c": Point(0.5, SQRT3 / 2),
        "c_star": Point(0.5, -SQRT3 / 2),
        "mu": mu,
        "u": u,
        "w": Point(1 - u.x, u.y),
        "v_star": v_star,
        "v": v,
        "v_prime": Point(1 - v.x, v.y),
        "tan_psi": tan_psi,
        "psi": psi,
        "c_prime": Point(cpx, cpx * slope),
        "u_prime": Point(upx, upx * slope),
    }


def boundary_radius(t: float, phi: float) -> float:
    """Distance from ``b`` to the boundary of ``I_ab`` along direction ``phi``,
    found as the root of the quartic residual inside the unit disk at ``b``."""
    cx, cy = math.cos(phi), math.sin(phi)

    def f(rho):
        return quartic_residual(1 + rho * cx, rho * cy, t)

    if f(1.0) >= 0:
        return 1.0
    return brentq(f, 0.0, 1.0, xtol=1e-15, rtol=4 * np.finfo(float).eps)


def inductive_boundary(t: float, samples: int, a=(0.0, 0.0), b=(1.0, 0.0), skip_a: bool = False) -> np.ndarray:
    """Closed polyline of ``samples`` points on the boundary of ``I_ab``.

    The polar sweep runs around ``b``; which is valid because ``I_ab`` is
    star-shaped from ``b``.  ``skip_a`` drops the sample landing exactly on ``a``.
    """
    phis = np.linspace(0.0, 2 * math.pi, samples, endpoint=False)
    if skip_a:
        phis = phis[~np.isclose(phis, math.pi, rtol=0, atol=1e-15)]
    rho = np.array([boundary_radius(t, ph) for ph in phis])
    local = np.column_stack([1 + rho * np.cos(phis), rho * np.sin(phis)])
    a = np.asarray(a, dtype=float)
    ab = np.asarray(b, dtype=float) - a
    perp = np.array([-ab[1], ab[0]])
    return a + local[:, :1] * ab + local[:, 1:] * perp


# --- region sampling -------------------------------------------------------

STEP = 1e-3


def _segment(p, q, n):
    s = np.linspace(0.0, 1.0, max(n, 2))
    return np.outer(1 - s, p) + np.outer(s, q)


def _arc(center, radius, a0, a1, n):
    ang = np.linspace(a0, a1, max(n, 2))
    return np.column_stack([center[0] + radius * np.cos(ang), center[1] + radius * np.sin(ang)])


def _boundary(pieces, samples):
    """Sample a boundary given as ``("seg", p, q)`` / ``("arc", c, r, a0, a1)``
    pieces, spreading points by length with step at most ``STEP``."""
    lengths = []
    for pc in pieces:
        lengths.append(dist(pc[1], pc[2]) if pc[0] == "seg" else pc[2] * abs(pc[4] - pc[3]))
    total = sum(lengths)
    out = []
    for pc, ln in zip(pieces, lengths):
        n = max(int(math.ceil(ln / STEP)) + 1, int(math.ceil(samples * ln / total)) + 1)
        out.append(_segment(np.asarray(pc[1]), np.asarray(pc[2]), n) if pc[0] == "seg" else _arc(*pc[1:], n))
    return np.vstack(out)


def region_na(t: float, samples: int) -> np.ndarray:
    """Boundary of the hull of sector C(a, b, c) minus I_ab: uc, arc c->v, chord v->u."""
    q = named_points(t)
    u, c, v = q["u"], q["c"], q["v"]
    return _boundary([("seg", u, c), ("arc", (0.0, 0.0), 1.0, math.pi / 3, math.atan2(v.y, v.x)),
                      ("seg", v, u)], samples)


def region_nb(t: float, samples: int) -> np.ndarray:
    """Mirror image of :func:`region_na` across ``x = 1/2``: wc, arc c->v', chord v'->w."""
    q = named_points(t)
    w, c, vp = q["w"], q["c"], q["v_prime"]
    return _boundary([("seg", w, c), ("arc", (1.0, 0.0), 1.0, 2 * math.pi / 3,
                                      math.atan2(vp.y, vp.x - 1.0)), ("seg", vp, w)], samples)


def region_na_rotated(t: float, samples: int) -> np.ndarray:
    """Boundary of the hull of the rotated upper sector (between ab and ac') minus
    I_ab: u'c', arc c'->v, chord v->u'."""
    q = named_points(t)
    up, cp, v = q["u_prime"], q["c_prime"], q["v"]
    return _boundary([("seg", up, cp), ("arc", (0.0, 0.0), 1.0, math.atan2(cp.y, cp.x),
                                        math.atan2(v.y, v.x)), ("seg", v, up)], samples)


def max_pair(A: np.ndarray, B: np.ndarray, chunk: int = 4096):
    """Farthest pair between two sample sets: ``(distance, index_in_A, index_in_B)``."""
    nb = (B * B).sum(axis=1)
    best = (-np.inf, -1, -1)
    for s in range(0, len(A), chunk):
        blk = A[s:s + chunk]
        d2 = (blk * blk).sum(axis=1)[:, None] + nb[None, :] - 2.0 * (blk @ B.T)
        i, j = np.unravel_index(int(np.argmax(d2)), d2.shape)
        if d2[i, j] > best[0]:
            best = (d2[i, j], s + int(i), int(j))
    _, i, j = best
    return dist(A[i], B[j]), i, j


# --- inequalities ----------------------------------------------------------

def triangle_bound_margin(a, b, c, alpha: float) -> float:
    """``|ab| - (1 - 2 sin(alpha/2)) |ac| - |bc|``; nonnegative when the triangle bound holds."""
    return dist(a, b) - (1 - 2 * math.sin(alpha / 2)) * dist(a, c) - dist(b, c)


def verify_lemma1(a, b, c, alpha: float) -> Certificate:
    if dist(a, c) > dist(a, b) or angle_at(a, b, c) > alpha + EPS_CERT or not alpha < math.pi:
        raise PreconditionViolated("need |ac| <= |ab| and angle bac <= alpha < pi")
    m = triangle_bound_margin(a, b, c, alpha)
    return Certificate("triangle_bound", 0.0, m, min(m, 0.0), EPS_CERT)


def triangle_bound_sweep(n: int = 100_000, seed: int = 0) -> Certificate:
    """Random admissible triples with ``a`` at the origin; counts failures."""
    rng = np.random.default_rng(seed)
    b = rng.uniform(-1, 1, (n, 2))
    lab = np.hypot(b[:, 0], b[:, 1])
    ang_b = np.arctan2(b[:, 1], b[:, 0])
    rel = rng.uniform(-math.pi, math.pi, n) * rng.random(n)
    r = lab * np.sqrt(rng.random(n))
    c = np.column_stack([r * np.cos(ang_b + rel), r * np.sin(ang_b + rel)])
    phi = np.abs(rel)
    alpha = phi + (math.pi - phi) * rng.random(n)
    lac = np.hypot(c[:, 0], c[:, 1])
    lbc = np.hypot(*(b - c).T)
    margin = lab - (1 - 2 * np.sin(alpha / 2)) * lac - lbc
    bad = int(np.sum(margin < -EPS_CERT))
    cert = _count("triangle_bound_sweep", bad, n)
    cert.details["min_margin"] = float(margin.min())
    return cert


def verify_lemma2(t: float, samples: int) -> Certificate:
    """Boundary samples of I_ab (other than ``a``) lie strictly inside the disk
    centered at ``b`` through ``a``, and satisfy the defining equation."""
    if not t > 1:
        raise InvalidParameter("t must exceed 1")
    pts = inductive_boundary(t, samples, skip_a=True)
    rb = np.hypot(pts[:, 0] - 1, pts[:, 1])
    ra = np.hypot(pts[:, 0], pts[:, 1])
    eq = np.abs(ra + t * rb - t)
    outside = int(np.sum(rb >= 1.0))
    off = int(np.sum(eq > 1e-9))
    cert = _count("boundary_in_disk", outside + off, len(pts))
    cert.details.update(max_dist_to_b=float(rb.max()), max_equation_residual=float(eq.max()))
    return cert


def equal_lengths(t: float) -> Certificate:
    q = named_points(t)
    ls = [dist(q["u"], q["c"]), dist(q["w"], q["c"]), dist(q["u"], q["w"])]
    spread = max(ls) - min(ls)
    return Certificate("equal_lengths_uc_wc_uw", 0.0, spread, spread, 1e-12, {"uc": ls[0]})


def case1_max_pair(t: float, samples: int) -> Certificate:
    q = named_points(t)
    d, _, _ = max_pair(region_na(t, samples), region_nb(t, samples))
    uc = dist(q["u"], q["c"])
    return Certificate("case1_sampled_max", uc, d, max(0.0, d - uc), 1e-6)


def case1_inequality(t) -> Certificate:
    """``2 + t(1 - mu) <= t`` and ``t^3 - 4t^2 + 2 >= 0`` evaluated exactly; both
    must hold at ``t``."""
    tq = Fraction(t)
    mu = tq * (tq - 2) / (tq * tq - 1)
    path = 2 + tq * (1 - mu) <= tq
    cubic = poly_eval(CUBIC_CASE1, tq)
    ok = path and cubic >= 0 and tq > 1
    return Certificate("case1_inequality", 0.0, float(cubic), 0.0 if ok else 1.0, 0.0,
                       {"path_bound_holds": path, "cubic_root": largest_real_root(CUBIC_CASE1, 1e-15)})


def case1_equivalence(ts) -> bool:
    """The path inequality and the cubic inequality agree at every rational ``t > 1``."""
    for t in ts:
        tq = Fraction(t)
        mu = tq * (tq - 2) / (tq * tq - 1)
        if (2 + tq * (1 - mu) <= tq) != (poly_eval(CUBIC_CASE1, tq) >= 0):
            return False
    return True


def verify_case1(t: float, samples: int) -> Certificate:
    if not t > 2 or samples <= 0:
        raise InvalidParameter("need t > 2 and samples > 0")
    parts = [equal_lengths(t), case1_max_pair(t, samples), case1_inequality(t)]
    return _combine("case1", parts)


def case2_max_pair(t: float, samples: int) -> Certificate:
    q = named_points(t)
    A = region_na_rotated(t, samples)
    B = region_nb(t, samples)
    d, i, j = max_pair(A, B)
    upc = dist(q["u_prime"], q["c"])
    off = max(dist(A[i], q["u_prime"]), dist(B[j], q["c"]))
    return Certificate("case2_sampled_max", upc, d, max(abs(d - upc), off), 1e-6,
                       {"argmax_offset": off})


def case2_bound(t: float) -> Certificate:
    """``2 + t|u'c| - t``; nonpositive means the induction closes."""
    q = named_points(t)
    slack = 2 + t * dist(q["u_prime"], q["c"]) - t
    return Certificate("case2_inequality", 0.0, slack, max(0.0, slack), 1e-9)


def case2_tightness(t: float) -> Certificate:
    q = named_points(t)
    slack = 2 + t * dist(q["u_prime"], q["c"]) - t
    return Certificate("case2_tightness", 0.0, slack, slack, 1e-9)


def case2_containment(t: float, samples: int) -> Certificate:
    """Sector between ``a v*`` and ``ab`` inside I_ab, by a polar grid."""
    q = named_points(t)
    k = max(int(math.ceil(math.sqrt(samples))), 2)
    ang = np.linspace(math.atan2(q["v_star"].y, q["v_star"].x), 0.0, k)
    rad = np.linspace(0.0, 1.0, k)
    rr, aa = np.meshgrid(rad, ang)
    x, y = (rr * np.cos(aa)).ravel(), (rr * np.sin(aa)).ravel()
    lhs = np.hypot(x, y) + t * np.hypot(x - 1, y)
    bad = int(np.sum(lhs > t + 1e-12))
    return _count("case2_containment", bad, x.size)


def verify_case2(t: float, samples: int) -> Certificate:
    if not t > 2 or samples <= 0:
        raise InvalidParameter("need t > 2 and samples > 0")
    return _combine("case2", [case2_max_pair(t, samples), case2_bound(t), case2_containment(t, samples)])


def _combine(name, parts) -> Certificate:
    failed = sum(not p.passed for p in parts)
    details = {p.name: p.passed for p in parts}
    return Certificate(name, 0, failed, failed, 0, details)


def small_cone_margin(a, b, n_a, theta: float) -> float:
    """Slack in the small-cone induction step: ``T|ab| - |a n_a| - T|b n_a|`` with
    ``T = 1 / (1 - 2 sin(theta/4))``, using the triangle bound on ``|b n_a|``."""
    T = 1.0 / (1.0 - 2.0 * math.sin(theta / 4.0))
    bound = dist(a, b) - (1 - 2 * math.sin(theta / 4)) * dist(a, n_a)
    return T * dist(a, b) - dist(a, n_a) - T * bound


# --- suite -----------------------------------------------------------------

def certificate_suite(samples: int = 10_000, seed: int = 0) -> list:
    """Every certificate, in a fixed order."""
    t = largest_real_root(P_CERT, 1e-15)
    tq = Fraction(t)
    q = named_points(t)
    certs = [_value("largest_root_p", PRINTED["largest_root_p"], t, 5e-5)]

    lo, hi = tq - Fraction(1, 10_000), tq + Fraction(1, 10_000)
    flip = (P_CERT(lo) < 0 < P_CERT(hi)) or (P_CERT(lo) > 0 > P_CERT(hi))
    certs.append(Certificate("root_bracket", 0, 0 if flip else 1, 0 if flip else 1, 0,
                             {"p_lo": float(P_CERT(lo)), "p_hi": float(P_CERT(hi))}))

    for key in ("u", "w", "v_star", "u_prime", "c_prime"):
        for axis, val in zip("xy", PRINTED[key]):
            certs.append(_value(f"{key}_{axis}", val, getattr(q[key], axis), 1e-4))
    certs.append(_value("tan_psi", PRINTED["tan_psi"], q["tan_psi"], 1e-4))
    certs.append(_value("psi_deg", PRINTED["psi_deg"], math.degrees(q["psi"]), 0.01))

    for key in ("u", "v_star", "u_prime", "v"):
        r = float(quartic_residual(q[key].x, q[key].y, t))
        certs.append(Certificate(f"quartic_residual_{key}", 0.0, r, r, 1e-9))

    mu = q["mu"]
    cross = q["u"].x * q["c"].y - q["u"].y * q["c"].x
    certs.append(Certificate("u_on_segment_ac", 0.0, cross, cross, 1e-12))
    certs.append(_value("au_length", mu, dist(q["a"], q["u"]), 1e-12))
    certs.append(_value("v_star_on_unit_circle", 1.0, dist(q["a"], q["v_star"]), 1e-12))
    certs.append(_value("psi_identity", math.pi / 3 - angle_at(q["a"], q["b"], q["v_star"]), q["psi"], 1e-12))
    rot = (math.cos(math.pi / 3 + q["psi"]), math.sin(math.pi / 3 + q["psi"]))
    certs.append(Certificate("c_prime_rotation", 0.0, dist(rot, q["c_prime"]), dist(rot, q["c_prime"]), 1e-12))

    certs.append(equal_lengths(t))
    certs.append(case1_max_pair(t, samples))
    certs.append(case1_inequality(t))
    cubic_root = largest_real_root(CUBIC_CASE1, 1e-15)
    below = cubic_root < t and CUBIC_CASE1(tq) > 0
    certs.append(Certificate("cubic_root_below_t", t, cubic_root, 0.0 if below else 1.0, 0.0))
    certs.append(case2_max_pair(t, samples))
    certs.append(case2_tightness(t))
    certs.append(case2_containment(t, samples))
    certs.append(verify_lemma2(t, samples))
    certs.append(triangle_bound_sweep(100_000, seed))
    return certs
