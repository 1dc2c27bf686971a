"""Figures for the CLI report path: index-set grids and dimension histograms.

Index sets are drawn on a grid whose columns are the last coordinate and
whose rows enumerate the remaining coordinates in row-major order, so any
number of variables fits on one page.
"""

from __future__ import annotations

import itertools
import math
from collections import Counter

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

from .algebra import AlgebraContext  # noqa: E402


def _grid(ctx: AlgebraContext, members) -> np.ndarray:
    ncols = ctx.r[-1]
    nrows = ctx.n // ncols
    grid = np.zeros((nrows, ncols))
    for m in members:
        k = ctx.index_of(m)
        grid[k // ncols, k % ncols] = 1
    return grid


def _row_labels(ctx: AlgebraContext) -> list[str]:
    if ctx.s == 1:
        return [""]
    return [",".join(map(str, t)) for t in itertools.product(*(range(ri) for ri in ctx.r[:-1]))]


def plot_index_sets(ctx: AlgebraContext, panels: dict[str, list], path, title: str | None = None):
    """One panel per named subset of the index set; highlighted cells are members."""
    k = len(panels)
    nrows = ctx.n // ctx.r[-1]
    width = max(3.0, 0.35 * ctx.r[-1] + 1.5)
    height = max(2.2, 0.35 * nrows + 1.6)
    fig, axes = plt.subplots(1, k, figsize=(width * k, height), squeeze=False)
    for ax, (name, members) in zip(axes[0], panels.items()):
        ax.imshow(_grid(ctx, members), cmap="Greys", vmin=0, vmax=1.4, aspect="equal")
        ax.set_xticks(range(ctx.r[-1]))
        ax.set_yticks(range(nrows))
        ax.set_yticklabels(_row_labels(ctx))
        ax.set_xticks(np.arange(-0.5, ctx.r[-1]), minor=True)
        ax.set_yticks(np.arange(-0.5, nrows), minor=True)
        ax.grid(which="minor", color="0.7", linewidth=0.5)
        ax.tick_params(which="minor", length=0)
        ax.set_xlabel(f"m{ctx.s}")
        if ctx.s > 1:
            ax.set_ylabel(",".join(f"m{i + 1}" for i in range(ctx.s - 1)))
        ax.set_title(f"{name} ({len(members)})", fontsize=10)
    if title:
        fig.suptitle(title, fontsize=11)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path


def plot_dimension_histogram(dimensions, n: int, path, title: str | None = None):
    counts = Counter(dimensions)
    xs = np.arange(n + 1)
    fig, ax = plt.subplots(figsize=(max(4.0, 0.3 * n + 2), 3))
    ax.bar(xs, [counts.get(int(x), 0) for x in xs], color="0.35")
    ax.set_xlabel("dimension")
    ax.set_ylabel("codes")
    ax.set_xlim(-0.6, n + 0.6)
    ax.yaxis.get_major_locator().set_params(integer=True)
    if n > 20:
        ax.set_xticks(xs[:: math.ceil(n / 20)])
    else:
        ax.set_xticks(xs)
    if title:
        ax.set_title(title, fontsize=10)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path
