"""Figure rendering for sweep outputs.

One figure per sweep: the median per-edge exponent log3(count)/e against
c, one series per n, with the certified construction exponent alongside
and the two regime ceilings (1 and log3 2) as reference lines.
"""

from __future__ import annotations

import math
import statistics

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .numerics import LOG3_2


def _medians(records, attr: str) -> dict[int, tuple[list[float], list[float]]]:
    by_cell: dict[tuple[int, float], list[float]] = {}
    for r in records:
        value = getattr(r, attr)
        if not math.isnan(value):
            by_cell.setdefault((r.n, r.c), []).append(value)
    series: dict[int, tuple[list[float], list[float]]] = {}
    for (n, c), values in sorted(by_cell.items()):
        xs, ys = series.setdefault(n, ([], []))
        xs.append(c)
        ys.append(statistics.median(values))
    return series


def render_sweep_figure(records, path) -> None:
    """Write the ratio3-vs-c figure for a list of SweepRecords."""
    fig, ax = plt.subplots(figsize=(7.0, 4.5))
    for n, (xs, ys) in _medians(records, "ratio3").items():
        ax.plot(xs, ys, marker="o", label=f"n={n} estimate")
    for n, (xs, ys) in _medians(records, "construction_ratio3").items():
        ax.plot(xs, ys, marker="s", linestyle="--", label=f"n={n} construction")
    ax.axhline(1.0, color="grey", linewidth=0.8)
    ax.axhline(LOG3_2, color="grey", linewidth=0.8, linestyle=":")
    ax.text(0.02, LOG3_2 + 0.005, "log3 2", transform=ax.get_yaxis_transform(), fontsize=8)
    ax.set_xscale("log")
    ax.set_xlabel("c  (edge probability p = c / sqrt(n))")
    ax.set_ylabel("median log3(count) / e")
    ax.set_title("Gallai colouring count per edge across the density sweep")
    ax.legend(fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
