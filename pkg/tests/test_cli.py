import json
import math
import re
import subprocess
import sys
import xml.etree.ElementTree as ET

import numpy as np
import pytest

from cyao.cli import main
from cyao.errors import ParseError
from cyao.generators import gen_uniform
from cyao.io import (
    graph_from_json, points_from_csv, points_to_csv, read_points, sweep_from_csv,
)

T_STAR = "6.041018656685165"
SVG = "{http://www.w3.org/2000/svg}"


def write_points(path, rows):
    path.write_text(points_to_csv(rows))
    return str(path)


def run(*argv):
    return main([str(a) for a in argv])


def test_generate_double_polygon(tmp_path):
    out = tmp_path / "dp.csv"
    assert run("generate", "--kind", "double-polygon", "--epsilon", 0.5, "-o", out) == 0
    text = out.read_text()
    assert text.splitlines()[:2] == ["# format: 1", "x,y"]
    assert len(read_points(out)) == 2 * math.ceil(4 * math.pi / 0.5)


def test_generate_uniform_to_stdout(capsys):
    assert run("generate", "--kind", "uniform", "--n", 2, "--seed", 7) == 0
    assert len(points_from_csv(capsys.readouterr().out)) == 2


def test_generate_ellipse_on_curve(tmp_path):
    out = tmp_path / "e.csv"
    assert run("generate", "--kind", "ellipse-chain", "--r", 4, "-o", out) == 0
    pts = read_points(out)
    resid = ((pts[:, 0] - 0.5) / 0.5) ** 2 + (pts[:, 1] / 4) ** 2 - 1
    assert np.max(np.abs(resid)) <= 1e-9


def test_generate_values_are_lossless(tmp_path):
    out = tmp_path / "u.csv"
    run("generate", "--kind", "uniform", "--n", 30, "--seed", 2, "-o", out)
    assert np.array_equal(read_points(out), gen_uniform(30, 2))


def test_generate_perturbed(tmp_path):
    base = tmp_path / "base.csv"
    out = tmp_path / "p.csv"
    run("generate", "--kind", "double-polygon", "--epsilon", 1.0, "-o", base)
    assert run("generate", "--kind", "perturbed", "--input", base, "--delta", 0, "-o", out) == 0
    assert np.array_equal(read_points(out), read_points(base))
    assert run("generate", "--kind", "perturbed", "--delta", 0.1) == 1


def test_generate_two_segments_degrees(tmp_path):
    out = tmp_path / "s.csv"
    assert run("generate", "--kind", "two-segments", "--alpha", 90, "--unit", "deg",
               "--m", 3, "-o", out) == 0
    pts = read_points(out)
    assert len(pts) == 7 and np.allclose(pts[4:, 0], 0, atol=1e-15)


def test_build_examples(tmp_path, capsys):
    two = write_points(tmp_path / "two.csv", [(0, 0), (1, 0)])
    assert run("build", "--points", two, "--theta", 90, "--unit", "deg") == 0
    rec = json.loads(capsys.readouterr().out)
    assert rec["edges"] == [[0, 1]] and rec["n"] == 2 and rec["format"] == 1
    assert rec["theta_rad"] == pytest.approx(math.pi / 2)

    line = write_points(tmp_path / "line.csv", [(0, 0), (1, 0), (3, 0)])
    assert run("build", "--points", line, "--theta", math.pi / 2) == 0
    assert json.loads(capsys.readouterr().out)["edges"] == [[0, 1], [1, 2]]


def test_build_rejects_bad_theta(tmp_path):
    line = write_points(tmp_path / "line.csv", [(0, 0), (1, 0)])
    assert run("build", "--points", line, "--theta", 0) == 1
    assert run("build", "--points", line, "--theta", 7) == 1
    assert run("build", "--points", line, "--theta", 361, "--unit", "deg") == 1


def test_build_input_errors(tmp_path):
    assert run("build", "--points", tmp_path / "missing.csv", "--theta", 1) == 3
    bad = tmp_path / "bad.csv"
    bad.write_text("x,y\n0,zero\n")
    assert run("build", "--points", bad, "--theta", 1) == 1
    empty = tmp_path / "empty.csv"
    empty.write_text("# format: 1\nx,y\n")
    assert run("build", "--points", empty, "--theta", 1) == 1
    future = tmp_path / "future.csv"
    future.write_text("# format: 2\nx,y\n0,0\n")
    assert run("build", "--points", future, "--theta", 1) == 1


def test_usage_errors_exit_one():
    assert run() == 1
    assert run("frobnicate") == 1
    assert run("build", "--theta", 1) == 1


def test_pipeline_is_byte_identical(tmp_path):
    outs = []
    for k in range(2):
        d = tmp_path / str(k)
        d.mkdir()
        run("generate", "--kind", "uniform", "--n", 25, "--seed", 3, "-o", d / "p.csv")
        run("build", "--points", d / "p.csv", "--theta", 2.0, "-o", d / "g.json")
        run("analyze", "--points", d / "p.csv", "--graph", d / "g.json", "-o", d / "r.json")
        outs.append([(d / f).read_bytes() for f in ("p.csv", "g.json", "r.json")])
    assert outs[0] == outs[1]


def test_analyze_complete_graph(tmp_path, capsys):
    pts = write_points(tmp_path / "p.csv", [(0, 0), (1, 0), (0.3, 2)])
    g = tmp_path / "g.json"
    g.write_text(json.dumps({"format": 1, "n": 3, "theta_rad": None, "edges": [[0, 1], [0, 2], [1, 2]]}))
    assert run("analyze", "--points", pts, "--graph", g) == 0
    rec = json.loads(capsys.readouterr().out)
    assert rec["spanning_ratio"] == 1.0 and rec["connected"] and rec["bound"] is None


def test_analyze_double_polygon(tmp_path, capsys):
    p, g = tmp_path / "p.csv", tmp_path / "g.json"
    run("generate", "--kind", "double-polygon", "--epsilon", 0.5, "-o", p)
    run("build", "--points", p, "--theta", math.pi + 0.5, "-o", g)
    assert run("analyze", "--points", p, "--graph", g) == 0
    rec = json.loads(capsys.readouterr().out)
    assert rec["spanning_ratio"] == "inf" and rec["component_count"] == 2
    assert rec["bound"] is None


def test_analyze_random_within_bound(tmp_path, capsys):
    p, g = tmp_path / "p.csv", tmp_path / "g.json"
    run("generate", "--kind", "uniform", "--n", 40, "--seed", 1, "-o", p)
    run("build", "--points", p, "--theta", 2 * math.pi / 3, "-o", g)
    run("analyze", "--points", p, "--graph", g)
    rec = json.loads(capsys.readouterr().out)
    assert rec["spanning_ratio"] <= 6.0411
    assert rec["bound"] == pytest.approx(float(T_STAR), abs=1e-12)


def test_analyze_size_mismatch(tmp_path):
    p = write_points(tmp_path / "p.csv", [(0, 0), (1, 0)])
    g = tmp_path / "g.json"
    g.write_text(json.dumps({"format": 1, "n": 3, "theta_rad": 1.0, "edges": [[0, 1]]}))
    assert run("analyze", "--points", p, "--graph", g) == 1


def test_graph_format_version_rejected(tmp_path):
    with pytest.raises(ParseError):
        graph_from_json(json.dumps({"format": 7, "n": 1, "edges": []}))
    with pytest.raises(ParseError):
        graph_from_json(json.dumps({"n": 1, "edges": []}))


def test_verify_output_and_exit(tmp_path):
    out = tmp_path / "certs.jsonl"
    code = run("verify", "--samples", 2000, "-o", out)
    recs = [json.loads(line) for line in out.read_text().splitlines()]
    by_name = {r["name"]: r for r in recs}
    assert {"name", "claimed", "computed", "residual", "tolerance", "pass"} <= set(recs[0])
    assert by_name["tan_psi"]["pass"] and by_name["case2_tightness"]["pass"]
    assert abs(by_name["tan_psi"]["computed"] - 0.1885) <= 1e-4
    assert code == (0 if all(r["pass"] for r in recs) else 2)


def test_sweep_writes_table_and_figure(tmp_path):
    out = tmp_path / "sweep.csv"
    assert run("sweep", "--kind", "ellipse-chain", "--values", "1,2,4,8", "--thetas", math.pi,
               "-o", out) == 0
    rows = sweep_from_csv(out.read_text())
    ratios = [r["spanning_ratio"] for r in rows]
    assert [r["value"] for r in rows] == [1, 2, 4, 8]
    assert all(a <= b for a, b in zip(ratios, ratios[1:]))
    png = out.with_suffix(".png")
    assert png.read_bytes()[:8] == b"\x89PNG\r\n\x1a\n"


def test_sweep_open_range(tmp_path):
    out = tmp_path / "u.csv"
    thetas = ",".join(str(v) for v in (2 * math.pi / 3, 2.3, 2.6, 2.9, math.pi))
    assert run("sweep", "--kind", "uniform", "--values", 40, "--thetas", thetas,
               "--seeds", 2, "--no-figure", "-o", out) == 0
    rows = sweep_from_csv(out.read_text())
    assert len(rows) == 5 and all(r["seeds"] == 2 and r["connected"] for r in rows)
    assert not out.with_suffix(".png").exists()


def test_sweep_empty_theta_list():
    assert run("sweep", "--kind", "uniform", "--values", 10, "--thetas", "") == 1


def _svg(path):
    return ET.parse(path).getroot()


def test_plot_counts_elements(tmp_path):
    p = write_points(tmp_path / "p.csv", [(0, 0), (1, 0), (3, 0)])
    g = tmp_path / "g.json"
    run("build", "--points", p, "--theta", math.pi / 2, "-o", g)
    out = tmp_path / "fig.svg"
    assert run("plot", "--points", p, "--graph", g, "-o", out) == 0
    root = _svg(out)
    assert len(root.findall(f".//{SVG}circle")) == 3
    assert len(root.findall(f".//{SVG}line")) == 2


def _polylines(root):
    out = {}
    for el in root.findall(f".//{SVG}polyline"):
        coords = np.array([[float(v) for v in pair.split(",")] for pair in el.get("points").split()])
        out[float(el.get("data-t"))] = coords
    return out


def _distance_to_polyline(poly, p):
    a, b = poly[:-1], poly[1:]
    ab = b - a
    s = np.clip(((p - a) * ab).sum(1) / (ab * ab).sum(1), 0, 1)
    return np.min(np.hypot(*(a + s[:, None] * ab - p).T))


def test_plot_inductive_overlay(tmp_path):
    p = write_points(tmp_path / "p.csv", [(0, 0), (1, 0)])
    out = tmp_path / "ind.svg"
    assert run("plot", "--points", p, "--inductive", T_STAR, "-o", out) == 0
    poly = _polylines(_svg(out))[float(T_STAR)]
    assert _distance_to_polyline(poly, np.array([0.3438, 0.5956])) <= 1e-3


def test_plot_nested_boundaries(tmp_path):
    p = write_points(tmp_path / "p.csv", [(0, 0), (1, 0)])
    out = tmp_path / "two.svg"
    assert run("plot", "--points", p, "--inductive", 2, "--inductive", T_STAR, "-o", out) == 0
    lines = _polylines(_svg(out))
    small, big = lines[2.0], lines[float(T_STAR)]
    rb = lambda q: np.hypot(q[:, 0] - 1, q[:, 1])
    assert not np.allclose(small, big)
    assert np.all(rb(small) <= rb(big) + 1e-12)


def test_plot_overlays(tmp_path):
    p = write_points(tmp_path / "p.csv", [(0, 0), (1, 0)])
    out = tmp_path / "o.svg"
    assert run("plot", "--points", p, "--cones", 120, "--unit", "deg", "--named", T_STAR,
               "--ab", "0,0,1,0", "-o", out) == 0
    root = _svg(out)
    assert len(root.findall(f".//{SVG}path")) == 2
    labels = {el.text for el in root.findall(f".//{SVG}text")}
    assert {"u", "w", "v*", "u'", "c'", "c"} <= labels
    assert run("plot", "--points", p, "--ab", "0,0,1", "-o", out) == 1


def test_console_script_exit_code(tmp_path):
    proc = subprocess.run([sys.executable, "-m", "cyao", "build", "--points", str(tmp_path / "x.csv"),
                           "--theta", "1"], capture_output=True, text=True)
    assert proc.returncode == 3
    assert re.search(r"I/O error", proc.stderr)
