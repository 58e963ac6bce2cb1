"""Figures for threshold reports (needs matplotlib)."""

from __future__ import annotations

from fractions import Fraction

from .chordal import TreeOrder, linear_extension
from .graph import LabeledGraph
from .threshold import ThresholdReport, symbolic_assignment


def plot_threshold(
    g: LabeledGraph, t: TreeOrder, report: ThresholdReport, path: str, samples: int = 400
) -> None:
    """Plot every x_v(p) up to just past the threshold and mark the bracket."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    xs = symbolic_assignment(g, t)
    stop = min(Fraction(1), report.hi * Fraction(5, 4))
    grid = [stop * k / samples for k in range(samples + 1)]

    fig, ax = plt.subplots(figsize=(6, 4))
    for v in linear_extension(t):
        f = xs[v]
        pts, vals = [], []
        for p in grid:
            if f.den.sign_at(p) <= 0:
                break
            pts.append(float(p))
            vals.append(float(f(p)))
        lw = 2.0 if v == report.critical_vertex else 0.8
        ax.plot(pts, vals, lw=lw, label=v if v == report.critical_vertex else None)
    ax.axhline(1.0, color="k", lw=0.6, ls=":")
    ax.axvline(float(report.lo), color="tab:green", lw=0.8, ls="--", label=f"p* ~ {float(report.lo):.6f}")
    ax.set_xlim(0, float(stop))
    ax.set_ylim(0, 1.2)
    ax.set_xlabel("uniform label p")
    ax.set_ylabel("x_v(p)")
    ax.legend(loc="upper left", frameon=False)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
