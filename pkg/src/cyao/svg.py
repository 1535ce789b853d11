"""Standalone SVG 1.1 drawings of point sets, graphs and inductive-set overlays.

Geometry is written in data coordinates inside a y-flipping group, so the
coordinates in the file are the plane coordinates themselves.
"""

from __future__ import annotations

import math
import xml.etree.ElementTree as ET

import numpy as np

from .certificates import inductive_boundary, named_points
from .graphs import Graph
from .io import fmt

SVG_NS = "http://www.w3.org/2000/svg"
NAMED = ("c", "c_star", "u", "w", "v_star", "u_prime", "c_prime")


def _pts_attr(arr) -> str:
    return " ".join(f"{fmt(x)},{fmt(y)}" for x, y in arr)


def cone_rays(a, b, theta: float):
    """Boundary ray endpoints of the cone at ``a`` bisected by ``ab`` (length ``|ab|``)."""
    ax, ay = a
    d = math.atan2(b[1] - ay, b[0] - ax)
    r = math.hypot(b[0] - ax, b[1] - ay)
    return [(ax + r * math.cos(d + s * theta / 2), ay + r * math.sin(d + s * theta / 2)) for s in (-1, 1)]


def render_svg(points, graph: Graph | None = None, *, inductive=(), ab=((0.0, 0.0), (1.0, 0.0)),
               cone_theta: float | None = None, named_t: float | None = None,
               boundary_samples: int = 2048, width: int = 640) -> str:
    """Render points (circles), edges (lines) and optional overlays.

    ``inductive`` lists ``t`` values whose inductive-set boundaries for the
    pair ``ab`` are drawn as polylines; ``cone_theta`` adds the two cones
    bisected by ``ab`` and ``ba``; ``named_t`` marks the closed-form points
    (only meaningful for ``a = (0, 0)``, ``b = (1, 0)``).
    """
    pts = np.asarray(points, dtype=float).reshape(-1, 2)
    a, b = ab
    extra = []
    polylines = []
    for t in inductive:
        poly = inductive_boundary(t, boundary_samples, a, b)
        polylines.append((t, poly))
        extra.append(poly)
    cones = []
    if cone_theta is not None:
        for apex, other in ((a, b), (b, a)):
            rays = cone_rays(apex, other, cone_theta)
            cones.append((apex, rays))
            extra.append(np.array([apex, *rays]))
    marks = {}
    if named_t is not None:
        q = named_points(named_t)
        marks = {k: q[k] for k in NAMED}
        extra.append(np.array(list(marks.values())))

    allpts = np.vstack([pts, *extra]) if extra else pts
    if len(allpts) == 0:
        allpts = np.zeros((1, 2))
    lo = allpts.min(axis=0)
    hi = allpts.max(axis=0)
    span = max(float((hi - lo).max()), 1e-9)
    pad = 0.05 * span
    lo, hi = lo - pad, hi + pad
    w, h = hi - lo
    rad = 0.006 * max(w, h)

    root = ET.Element("svg", xmlns=SVG_NS, version="1.1", width=str(width),
                      height=str(int(round(width * h / w))),
                      viewBox=f"{fmt(lo[0])} {fmt(-hi[1])} {fmt(w)} {fmt(h)}")
    plane = ET.SubElement(root, "g", transform="scale(1,-1)")
    stroke = {"vector-effect": "non-scaling-stroke", "fill": "none"}

    g_edges = ET.SubElement(plane, "g", id="edges", stroke="#555", **{"stroke-width": "1"})
    if graph is not None:
        for i, j in graph.sorted_edges():
            ET.SubElement(g_edges, "line", x1=fmt(pts[i, 0]), y1=fmt(pts[i, 1]),
                          x2=fmt(pts[j, 0]), y2=fmt(pts[j, 1]), **{"vector-effect": "non-scaling-stroke"})

    if polylines:
        g_ind = ET.SubElement(plane, "g", id="inductive", stroke="#1f77b4", **{"stroke-width": "1.5"})
        for t, poly in polylines:
            closed = np.vstack([poly, poly[:1]])
            ET.SubElement(g_ind, "polyline", points=_pts_attr(closed), **{"data-t": fmt(t)}, **stroke)

    if cones:
        g_cone = ET.SubElement(plane, "g", id="cones", stroke="#d62728", **{"stroke-dasharray": "4 3"})
        for apex, (r1, r2) in cones:
            d = f"M {fmt(r1[0])} {fmt(r1[1])} L {fmt(apex[0])} {fmt(apex[1])} L {fmt(r2[0])} {fmt(r2[1])}"
            ET.SubElement(g_cone, "path", d=d, **stroke)

    g_pts = ET.SubElement(plane, "g", id="points", fill="#000")
    for x, y in pts:
        ET.SubElement(g_pts, "circle", cx=fmt(x), cy=fmt(y), r=fmt(rad))

    if marks:
        g_named = ET.SubElement(root, "g", id="named", fill="#2ca02c",
                                **{"font-size": fmt(3 * rad), "font-family": "sans-serif"})
        for name, p in marks.items():
            ET.SubElement(g_named, "circle", cx=fmt(p.x), cy=fmt(-p.y), r=fmt(0.8 * rad), **{"class": "named"})
            label = ET.SubElement(g_named, "text", x=fmt(p.x + rad), y=fmt(-p.y - rad))
            label.text = name.replace("_star", "*").replace("_prime", "'")

    ET.indent(root)
    return '<?xml version="1.0" encoding="UTF-8"?>\n' + ET.tostring(root, encoding="unicode") + "\n"
