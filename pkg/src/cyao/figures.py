"""Matplotlib figures written next to the sweep tables."""

from __future__ import annotations

import math
from collections import defaultdict

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402


def plot_sweep(rows, path, title: str | None = None) -> None:
    """Spanning ratio against the swept parameter, one line per aperture.

    Disconnected settings (infinite ratio) are drawn as crosses on the top edge.
    """
    by_theta = defaultdict(list)
    for r in rows:
        by_theta[r["theta_rad"]].append(r)
    fig, ax = plt.subplots(figsize=(6, 4))
    finite = [r["spanning_ratio"] for r in rows if not math.isinf(r["spanning_ratio"])]
    top = max(finite) * 1.1 if finite else 1.0
    for theta, rs in sorted(by_theta.items()):
        rs = sorted(rs, key=lambda r: r["value"])
        xs = [r["value"] for r in rs]
        ys = [r["spanning_ratio"] for r in rs]
        label = f"θ = {math.degrees(theta):.4g}°"
        line, = ax.plot([x for x, y in zip(xs, ys) if not math.isinf(y)],
                        [y for y in ys if not math.isinf(y)], marker="o", ms=3, label=label)
        bad = [x for x, y in zip(xs, ys) if math.isinf(y)]
        if bad:
            ax.plot(bad, [top] * len(bad), "x", color=line.get_color())
    values = [r["value"] for r in rows]
    if values and min(values) > 0 and max(values) / min(values) >= 16:
        ax.set_xscale("log", base=2)
    ax.set_xlabel(rows[0]["param"] if rows else "")
    ax.set_ylabel("spanning ratio")
    if title:
        ax.set_title(title)
    ax.legend(frameon=False, fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
