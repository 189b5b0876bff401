"""Figures for reports and table reproductions, written to files."""

from __future__ import annotations

from pathlib import Path
from typing import Sequence

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
from matplotlib.ticker import MaxNLocator  # noqa: E402


def plot_weight_distribution(counts: Sequence[int], title: str, path) -> Path:
    """Bar chart of A_w over w, log scale when the counts span decades."""
    path = Path(path)
    w = [i for i, a in enumerate(counts) if a]
    a = [counts[i] for i in w]
    fig, ax = plt.subplots(figsize=(6, 3.5))
    ax.bar(w, a, color="tab:blue")
    if a and max(a) > 100 * min(a):
        ax.set_yscale("log")
    ax.set_xlabel("weight")
    ax.set_ylabel("codewords")
    ax.set_title(title)
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)
    return path


def _distance(params):
    return params[2] if params is not None and len(params) > 2 else None


def plot_table(result, path) -> Path:
    """Expected against observed minimum distance per row, mismatches in red."""
    path = Path(path)
    tags = [r.tag for r in result.rows]
    exp = [_distance(r.expected.get("params")) for r in result.rows]
    obs = [_distance(r.observed.get("params")) for r in result.rows]
    x = range(len(tags))
    fig, ax = plt.subplots(figsize=(max(5, 0.45 * len(tags) + 2), 3.8))
    ax.plot(x, [e or 0 for e in exp], "s", mfc="none", color="k", label="expected d")
    colors = ["tab:green" if r.ok else "tab:red" for r in result.rows]
    ax.scatter(x, [o or 0 for o in obs], c=colors, marker="o", label="observed d", zorder=3)
    ax.set_xticks(list(x))
    ax.set_xticklabels(tags, rotation=60, ha="right", fontsize=8)
    ax.set_ylabel("minimum distance")
    ax.yaxis.set_major_locator(MaxNLocator(integer=True))
    ax.set_title(f"table {result.name}: {result.passed}/{len(result.rows)} rows match")
    ax.legend(fontsize=8)
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)
    return path
