"""Parameter sweeps: generate, build cY(theta), measure, one row per setting."""

from __future__ import annotations

import math
import os
from concurrent.futures import ProcessPoolExecutor

from .errors import InvalidParameter
from .generators import GenSpec, generate
from .graphs import build_cyao
from .spanner import spanning_ratio

# which generator parameter the swept values bind to
SWEPT = {
    "ellipse-chain": "r",
    "double-polygon": "epsilon",
    "two-segments": "m",
    "uniform-random": "n",
}


def thread_cap() -> int:
    try:
        return max(1, int(os.environ.get("CYAO_THREADS", "1")))
    except ValueError:
        return 1


def _measure(job):
    spec, theta = job
    pts = generate(spec)
    graph = build_cyao(pts, theta)
    rep = spanning_ratio(graph, pts) if len(pts) >= 2 else None
    return (len(pts), len(graph), rep.connected if rep else True,
            rep.spanning_ratio if rep else 1.0)


def run_sweep(kind: str, values, thetas, *, seeds: int = 1, fixed=None, workers: int | None = None) -> list:
    """Rows of ``edge_count``, ``connected`` and ``spanning_ratio`` per ``(value, theta)``.

    With ``seeds > 1`` each row averages over seeds ``0..seeds-1``; a row is
    connected only if every seed was, and one disconnected seed makes the
    mean ratio infinite.
    """
    if kind not in SWEPT:
        raise InvalidParameter(f"cannot sweep generator kind {kind!r}")
    values, thetas = list(values), list(thetas)
    if not values or not thetas:
        raise InvalidParameter("sweep needs at least one value and one theta")
    if seeds < 1:
        raise InvalidParameter("seeds must be >= 1")
    param = SWEPT[kind]
    jobs = []
    for v in values:
        for th in thetas:
            for s in range(seeds):
                spec = GenSpec(kind, {**(fixed or {}), param: v}, seed=s)
                jobs.append((spec, th))
    workers = workers or thread_cap()
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as ex:
            results = list(ex.map(_measure, jobs))
    else:
        results = [_measure(j) for j in jobs]
    rows = []
    for k in range(0, len(jobs), seeds):
        chunk = results[k:k + seeds]
        spec, th = jobs[k]
        ratios = [c[3] for c in chunk]
        rows.append({
            "kind": kind,
            "param": param,
            "value": float(spec.parameters[param]),
            "theta_rad": float(th),
            "seeds": seeds,
            "n_points": sum(c[0] for c in chunk) / seeds,
            "edge_count": sum(c[1] for c in chunk) / seeds,
            "connected": all(c[2] for c in chunk),
            "spanning_ratio": math.inf if any(math.isinf(r) for r in ratios) else sum(ratios) / seeds,
        })
    return rows
