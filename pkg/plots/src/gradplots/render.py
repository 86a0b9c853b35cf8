"""Render runtime-scaling figures from sweep CSVs.

The input is the CSV written by ``gradprep sweep`` (one row per target
instance).  Two figure kinds are supported:

* round-count curves: amplification rounds L and the bootstrapped L'
  against the target dimension N, one panel per (family, param) group;
* the random-family norm plot: the recovered bit-average norm against N
  with the diagonal y = N drawn in red as reference.

Plots are pure functions of the CSV; rendering the same job twice
produces byte-identical image files.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np
import pandas as pd
from matplotlib.figure import Figure

# columns every sweep CSV must carry for the round-count curves
ROUND_COLUMNS = ("family", "param", "N", "L_core", "Lp_core")
# additional columns needed to recover the bit-average norm
NORM_COLUMNS = ("l1", "lambda1_prime")

_ROUND_STYLES = (
    {"color": "black", "marker": "o", "linestyle": "-", "label": "L"},
    {"color": "tab:blue", "marker": "s", "linestyle": "--", "label": "L'"},
)


@dataclass(frozen=True)
class PlotJob:
    """One figure request: which CSV, which family subset, where to save."""

    csv_path: str | Path
    out_path: str | Path
    family: str | None = None
    loglog: bool = True


def _load(job: PlotJob) -> pd.DataFrame:
    df = pd.read_csv(job.csv_path)
    if df.empty:
        raise ValueError(f"sweep CSV {job.csv_path} has no data rows")
    missing = [c for c in ROUND_COLUMNS if c not in df.columns]
    if missing:
        raise ValueError(f"sweep CSV {job.csv_path} lacks columns {missing}")
    if job.family is not None:
        df = df[df["family"] == job.family]
        if df.empty:
            raise ValueError(f"no rows for family {job.family!r} in {job.csv_path}")
    return df.sort_values(["family", "param", "N"], kind="stable")


def _recovered_norm(df: pd.DataFrame) -> np.ndarray:
    # the sweep stores lambda1' = |Abar|^2 / (N l1), so the norm is exact
    return np.sqrt(df["lambda1_prime"].to_numpy() * df["N"].to_numpy() * df["l1"].to_numpy())


def _panel_title(family: str, param: float) -> str:
    if param:
        return f"{family}, param {param:g}"
    return family


def _norm_figure(df: pd.DataFrame, loglog: bool) -> Figure:
    missing = [c for c in NORM_COLUMNS if c not in df.columns]
    if missing:
        raise ValueError(f"sweep CSV lacks columns {missing} needed for the norm plot")
    fig, ax = plt.subplots(figsize=(4.8, 3.6), constrained_layout=True)
    for param, group in df.groupby("param", sort=True):
        ax.plot(
            group["N"].to_numpy(),
            _recovered_norm(group),
            color="tab:blue",
            marker="s",
            linestyle="-",
            label=f"seed {param:g}" if param else "recovered norm",
        )
    n_grid = np.sort(df["N"].unique())
    ax.plot(n_grid, n_grid, color="red", linestyle="-", label="N")
    if loglog:
        ax.set_xscale("log", base=2)
        ax.set_yscale("log", base=2)
    ax.set_xlabel("N")
    ax.set_ylabel("bit-average norm")
    ax.set_title("random targets")
    ax.legend(fontsize=8)
    return fig


def _round_figure(df: pd.DataFrame, loglog: bool) -> Figure:
    groups = list(df.groupby(["family", "param"], sort=True))
    ncols = min(3, len(groups))
    nrows = math.ceil(len(groups) / ncols)
    fig, axes = plt.subplots(
        nrows,
        ncols,
        figsize=(4.0 * ncols, 3.2 * nrows),
        constrained_layout=True,
        squeeze=False,
    )
    flat = axes.ravel()
    for ax in flat[len(groups) :]:
        ax.set_visible(False)
    for ax, ((family, param), group) in zip(flat, groups):
        n = group["N"].to_numpy()
        for column, style in zip(("L_core", "Lp_core"), _ROUND_STYLES):
            ax.plot(n, group[column].to_numpy(), **style)
        if loglog:
            ax.set_xscale("log", base=2)
            ax.set_yscale("log", base=2)
        ax.set_xlabel("N")
        ax.set_ylabel("rounds")
        ax.set_title(_panel_title(family, param))
        ax.legend(fontsize=8)
    return fig


def build_figure(job: PlotJob) -> Figure:
    """Build the matplotlib figure for a job without saving it.

    A job whose rows are all from the ``random`` family gets the norm
    plot with the red reference diagonal; anything else gets the
    round-count curves.
    """
    df = _load(job)
    if set(df["family"].unique()) == {"random"}:
        return _norm_figure(df, job.loglog)
    return _round_figure(df, job.loglog)


def plot_runtime(job: PlotJob) -> Path:
    """Render a job to its output path and return that path."""
    fig = build_figure(job)
    out = Path(job.out_path)
    out.parent.mkdir(parents=True, exist_ok=True)
    try:
        fig.savefig(out, dpi=150)
    finally:
        plt.close(fig)
    return out
