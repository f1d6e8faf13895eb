"""Render benchmark statistics to figure files (headless matplotlib)."""

from __future__ import annotations

from collections import defaultdict
from pathlib import Path
from typing import Sequence

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .bench import StatRow


def plot_termination(rows: Sequence[StatRow], path: Path | str) -> Path:
    """Overhead-vs-n curves (one line per algorithm, log-x), with the
    2.5%..97.5% band shaded."""
    by_algo: dict[str, list[StatRow]] = defaultdict(list)
    for r in rows:
        if r.metric == "overhead_pct":
            by_algo[r.algorithm].append(r)
    fig, ax = plt.subplots(figsize=(7, 5))
    for algo, series in sorted(by_algo.items()):
        series.sort(key=lambda r: r.n)
        ns = [r.n for r in series]
        ax.plot(ns, [r.median for r in series], marker="o", label=algo)
        ax.fill_between(
            ns, [r.q025 for r in series], [r.q975 for r in series], alpha=0.15
        )
    ax.set_xscale("log", base=2)
    ax.set_xlabel("list size n")
    ax.set_ylabel("comparisons above log2(n!) (%)")
    ax.set_title("Termination overhead")
    ax.legend(fontsize=8)
    ax.grid(True, alpha=0.3)
    path = Path(path)
    fig.savefig(path, dpi=150, bbox_inches="tight")
    plt.close(fig)
    return path


def plot_profiles(rows: Sequence[StatRow], path: Path | str) -> list[Path]:
    """One figure per list size: median normalized error vs comparisons made,
    one curve per (algorithm, estimator)."""
    by_n: dict[int, dict[str, list[StatRow]]] = defaultdict(lambda: defaultdict(list))
    for r in rows:
        if r.metric.startswith("profile_") and r.k is not None:
            label = f"{r.algorithm} ({r.metric.removeprefix('profile_')})"
            by_n[r.n][label].append(r)
    path = Path(path)
    written: list[Path] = []
    for n, curves in sorted(by_n.items()):
        fig, ax = plt.subplots(figsize=(7, 5))
        for label, series in sorted(curves.items()):
            series.sort(key=lambda r: r.k)
            ax.plot([r.k for r in series], [r.median for r in series], label=label)
        ax.set_xlabel("comparisons performed")
        ax.set_ylabel("normalized Spearman footrule (median)")
        ax.set_title(f"Anytime performance profile, n={n}")
        ax.legend(fontsize=8)
        ax.grid(True, alpha=0.3)
        out = (
            path
            if len(by_n) == 1
            else path.with_stem(f"{path.stem}_n{n}")
        )
        fig.savefig(out, dpi=150, bbox_inches="tight")
        plt.close(fig)
        written.append(out)
    return written
