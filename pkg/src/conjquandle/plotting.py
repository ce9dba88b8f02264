"""Figures written next to survey reports."""

from __future__ import annotations

from collections import Counter
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

STYLE = {
    "figure.figsize": (6.4, 4.0),
    "figure.dpi": 120,
    "font.size": 10,
    "axes.spines.top": False,
    "axes.spines.right": False,
    "savefig.bbox": "tight",
}


def _family(name: str) -> str:
    if "*" in name:
        return "product"
    return name.split(":")[0]


def plot_methods(groups: list[dict], path) -> Path:
    """Stacked bars: goodness method counts per group family."""
    counts: dict[str, Counter] = {}
    for g in groups:
        fam = _family(g["name"])
        for c in g["classes"]:
            counts.setdefault(fam, Counter())[c["goodness"]["method"]] += 1
    fams = sorted(counts)
    methods = sorted({m for c in counts.values() for m in c})
    with plt.rc_context(STYLE):
        fig, ax = plt.subplots()
        bottom = [0] * len(fams)
        for m in methods:
            vals = [counts[f][m] for f in fams]
            ax.bar(fams, vals, bottom=bottom, label=m.replace("_", " "))
            bottom = [b + v for b, v in zip(bottom, vals)]
        ax.set_ylabel("classes")
        ax.set_yscale("symlog")
        ax.set_title("how goodness was decided")
        ax.legend(frameon=False, fontsize=8)
        out = Path(path)
        fig.savefig(out, metadata={"Software": None})
        plt.close(fig)
    return out


def plot_cycle_lengths(groups: list[dict], path) -> Path:
    """Class size against the longest translation cycle, marked by Hayashi verdict."""
    xs, ys, ok = [], [], []
    for g in groups:
        for c in g["classes"]:
            for cs in c.get("translation_cycle_structures", []):
                xs.append(c["size"])
                ys.append(cs[-1][0])
                ok.append(c["hayashi"])
    with plt.rc_context(STYLE):
        fig, ax = plt.subplots()
        good = [(x, y) for x, y, h in zip(xs, ys, ok) if h]
        bad = [(x, y) for x, y, h in zip(xs, ys, ok) if not h]
        if good:
            ax.scatter(*zip(*good), s=10, alpha=0.6, label="regular cycle in every translation")
        if bad:
            ax.scatter(*zip(*bad), s=18, marker="x", color="crimson", label="no regular cycle")
        ax.set_xscale("log")
        ax.set_xlabel("class size")
        ax.set_ylabel("longest cycle of a left translation")
        ax.legend(frameon=False, fontsize=8)
        out = Path(path)
        fig.savefig(out, metadata={"Software": None})
        plt.close(fig)
    return out


def write_figures(groups: list[dict], directory) -> list[str]:
    d = Path(directory)
    d.mkdir(parents=True, exist_ok=True)
    return [str(plot_methods(groups, d / "goodness_methods.png")),
            str(plot_cycle_lengths(groups, d / "translation_cycles.png"))]
