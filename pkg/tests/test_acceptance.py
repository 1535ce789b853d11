"""Acceptance gate: one test per numbered criterion, each at its stated tolerance."""

import math
import time

import numpy as np

from cyao.certificates import certificate_suite, triangle_bound_sweep, verify_lemma2
from cyao.generators import gen_double_polygon, gen_ellipse_chain, gen_two_segments, gen_uniform
from cyao.geometry import TAU, rotate
from cyao.graphs import build_cyao, build_cyao_oracle, build_yao, sum_gap_margin
from cyao.spanner import connectivity, dilation_upper_bound, spanning_ratio

T_STAR = 6.041018656685165


def _sets(count, max_n, seed, min_n=2):
    rng = np.random.default_rng(seed)
    for _ in range(count):
        n = int(rng.integers(min_n, max_n + 1))
        yield rng.random((n, 2))


def test_criterion_1_certificates(criterion):
    start = time.perf_counter()
    certs = certificate_suite(samples=10_000, seed=0)
    elapsed = time.perf_counter() - start
    failed = [f"{c.name} (computed {c.computed!r}, claimed {c.claimed!r}, tol {c.tolerance:g})"
              for c in certs if not c.passed]
    ok = not failed and elapsed < 10
    criterion(1, ok, f"{len(certs) - len(failed)}/{len(certs)} certificates pass in {elapsed:.1f}s"
              + (f"; failing: {', '.join(failed)}" if failed else ""))
    assert not failed, failed
    assert elapsed < 10


def test_criterion_2_oracle_equivalence(criterion):
    start = time.perf_counter()
    thetas = (0.1, math.pi / 3, 2 * math.pi / 3, math.pi, 1.5 * math.pi, TAU)
    diffs = 0
    for pts in _sets(200, 40, seed=2):
        for th in thetas:
            diffs += len(build_cyao(pts, th).edges ^ build_cyao_oracle(pts, th).edges)
    elapsed = time.perf_counter() - start
    criterion(2, diffs == 0 and elapsed < 60, f"{diffs} edge differences over 200 sets x 6 apertures, {elapsed:.1f}s")
    assert diffs == 0
    assert elapsed < 60


def test_criterion_3_dilation_bound(criterion):
    start = time.perf_counter()
    thetas = (math.pi / 6, math.pi / 3, math.pi / 2, 2 * math.pi / 3)
    violations, worst = 0, {th: 0.0 for th in thetas}
    for pts in _sets(500, 50, seed=3):
        for th in thetas:
            ratio = spanning_ratio(build_cyao(pts, th), pts).spanning_ratio
            worst[th] = max(worst[th], ratio)
            violations += ratio > dilation_upper_bound(th) + 1e-9
    elapsed = time.perf_counter() - start
    summary = ", ".join(f"{th:.3f}: {w:.4f}/{dilation_upper_bound(th):.4f}" for th, w in worst.items())
    criterion(3, violations == 0 and elapsed < 300, f"{violations} violations, worst ratio/bound {summary}, {elapsed:.1f}s")
    assert violations == 0
    assert elapsed < 300


def test_criterion_4_connectivity(criterion):
    thetas = (0.2, math.pi / 2, 2 * math.pi / 3, math.pi)
    failures = 0
    for pts in _sets(1000, 60, seed=4):
        for th in thetas:
            failures += not connectivity(build_cyao(pts, th))[0]
    criterion(4, failures == 0, f"{failures} disconnected graphs over 1000 sets x 4 apertures")
    assert failures == 0


def test_criterion_5_disconnection(criterion):
    results = {}
    for eps in (0.1, 0.5, 1.0):
        pts = gen_double_polygon(eps)
        wide = connectivity(build_cyao(pts, math.pi + eps))[1]
        results[eps] = (int(max(wide)) + 1, connectivity(build_cyao(pts, math.pi))[0])
    ok = all(k == 2 and conn for k, conn in results.values())
    criterion(5, ok, "; ".join(f"eps={e}: {k} components at pi+eps, connected at pi={c}"
                               for e, (k, c) in results.items()))
    assert ok, results


def test_criterion_6_not_a_spanner(criterion):
    start = time.perf_counter()
    ratios = []
    for r in (1, 2, 4, 8, 16, 32, 64, 128, 256):
        pts = gen_ellipse_chain(r)
        ratios.append(spanning_ratio(build_cyao(pts, math.pi), pts).spanning_ratio)
    elapsed = time.perf_counter() - start
    monotone = all(a <= b for a, b in zip(ratios, ratios[1:]))
    ok = monotone and max(ratios) > 10 and elapsed < 120
    criterion(6, ok, f"ratios {', '.join(f'{x:.3f}' for x in ratios)}; nondecreasing={monotone}, {elapsed:.1f}s")
    assert monotone
    assert max(ratios) > 10
    assert elapsed < 120


def test_criterion_7_quadratic_edges(criterion):
    counts = {}
    for m in (10, 20, 40):
        g = build_cyao(gen_two_segments(math.pi / 2, m), math.pi / 4)
        counts[m] = sum(1 for i, j in g.edges if 1 <= i <= m < j)
    ok = all(c == m * m for m, c in counts.items())
    criterion(7, ok, ", ".join(f"m={m}: {c} cross edges" for m, c in counts.items()))
    assert ok, counts


def test_criterion_8_property_suites(criterion):
    rng = np.random.default_rng(8)
    bad = {"monotonicity": 0, "yao_containment": 0, "rotation": 0}
    skipped = 0
    for pts in _sets(200, 40, seed=80, min_n=3):
        a, b = sorted(rng.uniform(0.05, TAU, 2))
        bad["monotonicity"] += not build_cyao(pts, b).edges <= build_cyao(pts, a).edges
        k, offset = int(rng.integers(3, 13)), float(rng.uniform(0, TAU))
        bad["yao_containment"] += not build_yao(pts, k, offset).edges <= build_cyao(pts, TAU / k).edges
        th, rot = float(rng.uniform(0.05, TAU)), float(rng.uniform(0, TAU))
        if sum_gap_margin(pts, th) < 1e-9:
            skipped += 1
        else:
            bad["rotation"] += build_cyao(pts, th) != build_cyao(rotate(pts, rot, (0.5, 0.5)), th)
    sweep = triangle_bound_sweep(100_000, seed=0)
    bad["triangle_bound"] = int(sweep.computed)
    bad["boundary_in_disk"] = sum(not verify_lemma2(t, 10_000).passed for t in (1.5, 2.0, T_STAR))
    ok = not any(bad.values())
    criterion(8, ok, ", ".join(f"{k}={v}" for k, v in bad.items()) + f" (rotation trials skipped: {skipped})")
    assert ok, bad
