"""Continuous Yao graphs cY(theta) and classic Yao graphs Y_k.

A point ``q`` is a cY-neighbour of ``p`` when some closed cone of aperture
``theta`` with apex ``p`` contains ``q`` and no point strictly closer to ``p``.
Points strictly closer than ``q`` are *blockers*; the edge exists iff the
blocker-free angular window around ``direction(p, q)`` is wider than ``theta``.
Equidistant points never block each other.
"""

from __future__ import annotations

import math
from bisect import bisect_left, insort
from dataclasses import dataclass
from typing import Iterable, NamedTuple

import numpy as np

from .errors import DuplicatePoints, EmptyInput, InvalidParameter
from .geometry import (
    EPS_ANG,
    TAU,
    as_points,
    ccw_gap,
    check_aperture,
    cw_gap,
    direction,
    dist,
)

# relative tolerance on squared distances below which two points tie
TIE_REL = 1e-12


@dataclass(frozen=True)
class Graph:
    """Undirected graph on point indices ``0..n-1``; edges are ``(i, j)`` with ``i < j``."""

    n: int
    edges: frozenset

    def __post_init__(self):
        for i, j in self.edges:
            if not (0 <= i < j < self.n):
                raise InvalidParameter(f"bad edge {(i, j)} for n={self.n}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable) -> "Graph":
        norm = set()
        for i, j in edges:
            i, j = int(i), int(j)
            if i == j:
                raise InvalidParameter(f"self-loop at {i}")
            norm.add((min(i, j), max(i, j)))
        return cls(n, frozenset(norm))

    @classmethod
    def complete(cls, n: int) -> "Graph":
        return cls(n, frozenset((i, j) for i in range(n) for j in range(i + 1, n)))

    def sorted_edges(self) -> list:
        return sorted(self.edges)

    def has(self, i: int, j: int) -> bool:
        return (min(i, j), max(i, j)) in self.edges

    def degrees(self) -> np.ndarray:
        deg = np.zeros(self.n, dtype=int)
        for i, j in self.edges:
            deg[i] += 1
            deg[j] += 1
        return deg

    def weight(self, points, i: int, j: int) -> float:
        return dist(points[i], points[j])

    def __len__(self) -> int:
        return len(self.edges)


class AngularGapPair(NamedTuple):
    cw: float
    ccw: float


def _polar(pts: np.ndarray, p: int):
    d = pts - pts[p]
    sq = d[:, 0] ** 2 + d[:, 1] ** 2
    ang = np.arctan2(d[:, 1], d[:, 0]) % TAU
    ang[ang >= TAU] = 0.0
    return sq, ang


def _check_distinct(pts: np.ndarray) -> None:
    if len(np.unique(pts, axis=0)) != len(pts):
        raise DuplicatePoints("point set contains coincident points")


def edge_gaps(points, p: int, q: int) -> AngularGapPair:
    """Clockwise and counter-clockwise clearance from ``direction(p, q)`` to the
    nearest blocker directions.  Both are ``2*pi`` when nothing blocks, and both
    are 0 as soon as a blocker shares the direction of ``q``."""
    pts = as_points(points)
    if p == q:
        raise InvalidParameter("p and q must differ")
    sq, _ = _polar(pts, p)
    dq = direction(pts[p], pts[q])
    thr = sq[q] * (1.0 - TIE_REL)
    cw = ccw = TAU
    for r in range(len(pts)):
        if r == p or not sq[r] < thr:
            continue
        dr = direction(pts[p], pts[r])
        cw = min(cw, cw_gap(dq, dr))
        ccw = min(ccw, ccw_gap(dq, dr))
    if cw == 0.0 or ccw == 0.0:
        return AngularGapPair(0.0, 0.0)
    return AngularGapPair(cw, ccw)


def has_edge(points, p: int, q: int, theta: float) -> bool:
    """Directed test: is ``q`` a cY(theta)-neighbour of ``p``?"""
    theta = check_aperture(theta)
    g = edge_gaps(points, p, q)
    if g.cw == TAU and g.ccw == TAU:
        return True
    return g.cw > 0.0 and g.cw + g.ccw > theta + EPS_ANG


class _BlockerWheel:
    """Sorted blocker directions around one apex.

    Tracks how many circular gaps between consecutive blockers exceed the
    aperture; once none does, no farther point can be a neighbour.
    """

    def __init__(self, theta: float):
        self.dirs: list = []
        self.limit = theta + EPS_ANG
        self.wide = 0

    def add(self, x: float) -> None:
        d = self.dirs
        m = len(d)
        if m == 0:
            d.append(x)
            self.wide = int(TAU > self.limit)
            return
        i = bisect_left(d, x)
        lo = d[i - 1] if i > 0 else d[-1] - TAU
        hi = d[i] if i < m else d[0] + TAU
        lim = self.limit
        self.wide += int(x - lo > lim) + int(hi - x > lim) - int(hi - lo > lim)
        insort(d, x)

    def saturated(self) -> bool:
        return bool(self.dirs) and self.wide == 0

    def admits(self, dq: float) -> bool:
        d = self.dirs
        m = len(d)
        if m == 0:
            return True
        i = bisect_left(d, dq)
        hi = d[i] if i < m else d[0] + TAU
        lo = d[i - 1] if i > 0 else d[-1] - TAU
        ccw = hi - dq
        cw = dq - lo
        if ccw < EPS_ANG or cw < EPS_ANG:
            return False
        return cw + ccw > self.limit


def _apex_neighbours(pts: np.ndarray, p: int, theta: float) -> list:
    sq, ang = _polar(pts, p)
    order = np.argsort(sq, kind="stable")
    order = order[order != p]
    sq_sorted = sq[order].tolist()
    ang_sorted = ang[order].tolist()
    idx = order.tolist()
    wheel = _BlockerWheel(theta)
    out = []
    k = 0
    for pos in range(len(idx)):
        thr = sq_sorted[pos] * (1.0 - TIE_REL)
        while k < pos and sq_sorted[k] < thr:
            wheel.add(ang_sorted[k])
            k += 1
        if wheel.saturated():
            break
        if wheel.admits(ang_sorted[pos]):
            out.append(idx[pos])
    return out


def cyao_neighbours(points, theta: float) -> list:
    """Directed neighbour lists: ``result[p]`` holds every q with has_edge(p, q)."""
    pts = as_points(points)
    if len(pts) == 0:
        raise EmptyInput("no points")
    _check_distinct(pts)
    theta = check_aperture(theta)
    return [sorted(_apex_neighbours(pts, p, theta)) for p in range(len(pts))]


def build_cyao(points, theta: float) -> Graph:
    """Build cY(theta) by sweeping each apex's points in order of distance.

    Blocker directions live in a sorted list so each candidate costs two
    binary searches; an apex stops early once its blockers leave no window
    wider than ``theta``.
    """
    nbrs = cyao_neighbours(points, theta)
    edges = set()
    for p, qs in enumerate(nbrs):
        for q in qs:
            edges.add((min(p, q), max(p, q)))
    return Graph(len(nbrs), frozenset(edges))


def build_cyao_oracle(points, theta: float) -> Graph:
    """Brute-force cY(theta): try every critical cone orientation explicitly.

    Orientations are the blocker directions, those directions minus
    ``theta``, and the midpoints between consecutive ones; each cone's
    closest points (ties included) are found by a linear scan.
    """
    pts = as_points(points)
    n = len(pts)
    if n == 0:
        raise EmptyInput("no points")
    _check_distinct(pts)
    theta = check_aperture(theta)
    edges = set()
    for p in range(n):
        others = np.array([j for j in range(n) if j != p], dtype=int)
        if len(others) == 0:
            continue
        sq, ang = _polar(pts, p)
        sq, ang = sq[others], ang[others]
        crit = np.unique(np.concatenate([ang, (ang - theta) % TAU]))
        nxt = np.roll(crit, -1)
        nxt[-1] += TAU
        mids = ((crit + nxt) / 2.0) % TAU
        orient = np.concatenate([crit, mids])
        if theta >= TAU:
            inside = np.ones((len(orient), len(others)), dtype=bool)
        else:
            g = (ang[None, :] - orient[:, None]) % TAU
            g[(g < EPS_ANG) | (g > TAU - EPS_ANG)] = 0.0
            inside = g <= theta + EPS_ANG
        masked = np.where(inside, sq[None, :], np.inf)
        dmin = masked.min(axis=1)
        win = inside & (sq[None, :] * (1.0 - TIE_REL) <= dmin[:, None])
        for j in others[win.any(axis=0)]:
            edges.add((min(p, int(j)), max(p, int(j))))
    return Graph(n, frozenset(edges))


def build_yao(points, k: int, offset: float = 0.0) -> Graph:
    """Classic Yao graph: ``k`` half-open cones of aperture ``2*pi/k`` per apex,
    starting at ``offset``; ties broken by lowest index."""
    if k < 1:
        raise InvalidParameter("k must be a positive integer")
    pts = as_points(points)
    n = len(pts)
    if n == 0:
        raise EmptyInput("no points")
    _check_distinct(pts)
    width = TAU / k
    edges = set()
    for p in range(n):
        sq, ang = _polar(pts, p)
        best = {}
        for j in range(n):
            if j == p:
                continue
            cone = min(int(ccw_gap(offset, ang[j]) // width), k - 1)
            cur = best.get(cone)
            if cur is None or sq[j] < sq[cur]:
                best[cone] = j
        for j in best.values():
            edges.add((min(p, j), max(p, j)))
    return Graph(n, frozenset(edges))


def sum_gap_margin(points, theta: float) -> float:
    """Smallest ``|cw + ccw - theta|`` over all ordered pairs; used to skip
    near-degenerate instances in invariance checks."""
    pts = as_points(points)
    best = math.inf
    for p in range(len(pts)):
        for q in range(len(pts)):
            if p != q:
                g = edge_gaps(pts, p, q)
                if g.cw < TAU:
                    best = min(best, abs(g.cw + g.ccw - theta))
    return best
