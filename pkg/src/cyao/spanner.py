"""Spanning ratio, connectivity, and the proven dilation bound for cY(theta)."""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import dijkstra

from .errors import DuplicatePoints, InvalidParameter, OutOfProvenRange
from .geometry import EPS_ANG, as_points, dist
from .graphs import Graph

REL_TOL = 1e-9


@dataclass(frozen=True)
class SpannerReport:
    spanning_ratio: float
    witness: tuple
    connected: bool
    component_count: int
    edge_count: int
    max_degree: int


def _adjacency(graph: Graph, pts: np.ndarray) -> list:
    adj = [[] for _ in range(graph.n)]
    for i, j in graph.sorted_edges():
        w = dist(pts[i], pts[j])
        adj[i].append((j, w))
        adj[j].append((i, w))
    return adj


def shortest_path_lengths(graph: Graph, points, source: int) -> list:
    """Single-source Euclidean-weighted shortest paths (binary-heap Dijkstra)."""
    pts = as_points(points)
    if not 0 <= source < graph.n:
        raise InvalidParameter(f"source {source} out of range")
    adj = _adjacency(graph, pts)
    best = [math.inf] * graph.n
    best[source] = 0.0
    heap = [(0.0, source)]
    while heap:
        d, u = heapq.heappop(heap)
        if d > best[u]:
            continue
        for v, w in adj[u]:
            nd = d + w
            if nd < best[v]:
                best[v] = nd
                heapq.heappush(heap, (nd, v))
    return best


def all_pairs_lengths(graph: Graph, points) -> np.ndarray:
    """Dense ``(n, n)`` matrix of graph distances, ``inf`` between components."""
    pts = as_points(points)
    n = graph.n
    if not graph.edges:
        out = np.full((n, n), np.inf)
        np.fill_diagonal(out, 0.0)
        return out
    e = np.array(graph.sorted_edges())
    w = np.hypot(*(pts[e[:, 0]] - pts[e[:, 1]]).T)
    mat = csr_matrix((w, (e[:, 0], e[:, 1])), shape=(n, n))
    return dijkstra(mat, directed=False)


def connectivity(graph: Graph):
    """Return ``(connected, labels)``; labels number components by first vertex."""
    parent = list(range(graph.n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i, j in graph.edges:
        ri, rj = find(i), find(j)
        if ri != rj:
            parent[max(ri, rj)] = min(ri, rj)
    labels = []
    seen = {}
    for v in range(graph.n):
        labels.append(seen.setdefault(find(v), len(seen)))
    return len(seen) <= 1, labels


def spanning_ratio(graph: Graph, points) -> SpannerReport:
    """Exact dilation: max over pairs of graph distance over Euclidean distance.

    A disconnected graph reports ``inf`` with the lexicographically first pair
    lying in different components as witness.
    """
    pts = as_points(points)
    n = graph.n
    if n != len(pts):
        raise InvalidParameter(f"graph has {n} vertices but {len(pts)} points given")
    if n < 2:
        raise InvalidParameter("spanning ratio needs at least two points")
    diff = pts[:, None, :] - pts[None, :, :]
    euclid = np.sqrt(np.einsum("ijk,ijk->ij", diff, diff))
    iu = np.triu_indices(n, 1)
    if np.any(euclid[iu] == 0.0):
        raise DuplicatePoints("spanning ratio undefined for coincident points")
    connected, labels = connectivity(graph)
    comps = len(set(labels))
    deg = graph.degrees()
    if not connected:
        lab = np.asarray(labels)
        j = int(np.argmax(lab != lab[0]))
        ratio, witness = math.inf, (0, j)
    else:
        ratios = all_pairs_lengths(graph, pts)[iu] / euclid[iu]
        k = int(np.argmax(ratios))
        ratio, witness = float(ratios[k]), (int(iu[0][k]), int(iu[1][k]))
    return SpannerReport(
        spanning_ratio=ratio,
        witness=witness,
        connected=connected,
        component_count=comps,
        edge_count=len(graph),
        max_degree=int(deg.max()) if n else 0,
    )


@lru_cache(maxsize=None)
def certified_ratio() -> float:
    """Largest real root of the degree-12 certificate polynomial (about 6.0411)."""
    from .certificates import P_CERT, largest_real_root

    return largest_real_root(P_CERT, 1e-15)


def dilation_upper_bound(theta: float) -> float:
    """Proven spanning-ratio bound for cY(theta), ``0 < theta <= 2*pi/3``."""
    limit = 2.0 * math.pi / 3.0
    if not theta > 0.0:
        raise InvalidParameter("aperture must be positive")
    if theta > limit + EPS_ANG:
        raise OutOfProvenRange(f"no proven bound for theta={theta!r} > 2pi/3")
    t_star = certified_ratio()
    denom = 1.0 - 2.0 * math.sin(theta / 4.0)
    if theta >= limit - EPS_ANG or denom <= 0.0:
        return t_star
    return min(t_star, 1.0 / denom)
