"""File formats: point CSV, edge-list JSON, report JSON, sweep CSV.

Every format carries a version (``"format": 1`` in JSON, a leading
``# format: 1`` comment in CSV); readers reject other versions.
"""

from __future__ import annotations

import csv
import io
import json
import math
import os
import tempfile
from pathlib import Path

import numpy as np

from .errors import DimensionMismatch, EmptyInput, ParseError
from .graphs import Graph

FORMAT = 1


def fmt(x: float) -> str:
    """17 significant digits: lossless for doubles."""
    return f"{x:.17g}"


def atomic_write(path, text: str) -> None:
    path = Path(path)
    fd, tmp = tempfile.mkstemp(dir=path.parent or ".", prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", newline="") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _check_version(value, where: str) -> None:
    try:
        version = int(value)
    except (TypeError, ValueError):
        raise ParseError(f"{where}: unreadable format version {value!r}") from None
    if version != FORMAT:
        raise ParseError(f"{where}: unsupported format version {version}")


# --- points ----------------------------------------------------------------

def points_to_csv(points) -> str:
    out = [f"# format: {FORMAT}", "x,y"]
    out += [f"{fmt(x)},{fmt(y)}" for x, y in np.asarray(points, dtype=float)]
    return "\n".join(out) + "\n"


def points_from_csv(text: str, where: str = "<points>") -> np.ndarray:
    rows = []
    header = None
    for lineno, line in enumerate(text.splitlines(), 1):
        s = line.strip()
        if not s:
            continue
        if s.startswith("#"):
            key, _, val = s[1:].partition(":")
            if key.strip() == "format":
                _check_version(val.strip(), where)
            continue
        cells = next(csv.reader([s]))
        if header is None:
            header = [c.strip() for c in cells]
            if header != ["x", "y"]:
                raise ParseError(f"{where}: expected header 'x,y', got {s!r}")
            continue
        if len(cells) != 2:
            raise ParseError(f"{where}:{lineno}: expected two columns")
        try:
            x, y = float(cells[0]), float(cells[1])
        except ValueError:
            raise ParseError(f"{where}:{lineno}: not a number in {s!r}") from None
        if not (math.isfinite(x) and math.isfinite(y)):
            raise ParseError(f"{where}:{lineno}: non-finite coordinate")
        rows.append((x, y))
    if header is None:
        raise ParseError(f"{where}: missing header")
    if not rows:
        raise EmptyInput(f"{where}: no points")
    return np.array(rows, dtype=float)


def read_points(path) -> np.ndarray:
    return points_from_csv(Path(path).read_text(), str(path))


# --- graphs ----------------------------------------------------------------

def graph_to_json(graph: Graph, theta: float | None) -> str:
    rec = {
        "format": FORMAT,
        "n": graph.n,
        "theta_rad": theta,
        "edges": [list(e) for e in graph.sorted_edges()],
    }
    return json.dumps(rec) + "\n"


def graph_from_json(text: str, where: str = "<graph>"):
    """Return ``(graph, theta_rad_or_None)``."""
    try:
        rec = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{where}: {exc}") from None
    if not isinstance(rec, dict) or "n" not in rec or "edges" not in rec:
        raise ParseError(f"{where}: expected an object with 'n' and 'edges'")
    _check_version(rec.get("format"), where)
    try:
        n = int(rec["n"])
        edges = [(int(i), int(j)) for i, j in rec["edges"]]
        graph = Graph.from_edges(n, edges)
    except (TypeError, ValueError) as exc:
        raise ParseError(f"{where}: bad edge list ({exc})") from None
    theta = rec.get("theta_rad")
    return graph, (None if theta is None else float(theta))


def read_graph(path):
    return graph_from_json(Path(path).read_text(), str(path))


def check_sizes(graph: Graph, points) -> None:
    if graph.n != len(points):
        raise DimensionMismatch(f"graph has n={graph.n} but the point file has {len(points)} rows")


# --- reports ---------------------------------------------------------------

def _jnum(x):
    return "inf" if isinstance(x, float) and math.isinf(x) else x


def report_to_json(report, theta: float | None, bound: float | None) -> str:
    rec = {
        "format": FORMAT,
        "spanning_ratio": _jnum(report.spanning_ratio),
        "witness": list(report.witness),
        "connected": report.connected,
        "component_count": report.component_count,
        "edge_count": report.edge_count,
        "max_degree": report.max_degree,
        "theta_rad": theta,
        "bound": bound,
    }
    return json.dumps(rec, indent=2) + "\n"


SWEEP_COLUMNS = ("kind", "param", "value", "theta_rad", "seeds", "n_points",
                 "edge_count", "connected", "spanning_ratio")


def sweep_to_csv(rows) -> str:
    buf = io.StringIO()
    buf.write(f"# format: {FORMAT}\n")
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(SWEEP_COLUMNS)
    for r in rows:
        w.writerow([
            r["kind"], r["param"], fmt(r["value"]), fmt(r["theta_rad"]), r["seeds"],
            fmt(r["n_points"]), fmt(r["edge_count"]), str(r["connected"]).lower(),
            "inf" if math.isinf(r["spanning_ratio"]) else fmt(r["spanning_ratio"]),
        ])
    return buf.getvalue()


def sweep_from_csv(text: str) -> list:
    lines = text.splitlines()
    body = []
    for s in lines:
        if s.startswith("#"):
            key, _, val = s[1:].partition(":")
            if key.strip() == "format":
                _check_version(val.strip(), "<sweep>")
            continue
        body.append(s)
    rows = []
    for rec in csv.DictReader(body):
        rows.append({
            "kind": rec["kind"],
            "param": rec["param"],
            "value": float(rec["value"]),
            "theta_rad": float(rec["theta_rad"]),
            "seeds": int(rec["seeds"]),
            "n_points": float(rec["n_points"]),
            "edge_count": float(rec["edge_count"]),
            "connected": rec["connected"] == "true",
            "spanning_ratio": float(rec["spanning_ratio"]),
        })
    return rows
