"""File outputs for the command-line reports: delimited tables and figures.

The CSV writers are plain stdlib; matplotlib is imported lazily inside the
plotting helpers so that the non-plotting paths never pay for it.
"""

from __future__ import annotations

import csv
from pathlib import Path
from typing import Sequence


def write_epsilon_csv(path: str | Path, values: Sequence[int]) -> None:
    """Rows of i, epsilon(i)."""
    with open(path, "w", newline="") as handle:
        writer = csv.writer(handle)
        writer.writerow(["i", "epsilon"])
        for i, value in enumerate(values, start=1):
            writer.writerow([i, value])


def plot_epsilon(path: str | Path, values: Sequence[int]) -> None:
    """Step chart of the +-1 sequence; the dyadic blocks of -1 stand out."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    positions = range(1, len(values) + 1)
    fig, ax = plt.subplots(figsize=(max(6.0, len(values) * 0.12), 2.8))
    ax.step(positions, values, where="mid", color="tab:blue")
    ax.scatter(positions, values, s=12, color="tab:blue")
    ax.set_ylim(-1.5, 1.5)
    ax.set_yticks([-1, 1])
    ax.set_xlabel("i")
    ax.set_ylabel("epsilon(i)")
    ax.grid(True, alpha=0.3)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def write_classification_csv(path: str | Path, statuses: Sequence[tuple[int, str]]) -> None:
    """Rows of i, status with status one of +1, -1, perturbed."""
    with open(path, "w", newline="") as handle:
        writer = csv.writer(handle)
        writer.writerow(["i", "status"])
        for i, status in statuses:
            writer.writerow([i, status])


def plot_classification(path: str | Path, statuses: Sequence[tuple[int, str]]) -> None:
    """Bar chart of the per-generator behavior inside the window."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    colors = {"+1": "tab:green", "-1": "tab:red", "perturbed": "tab:gray"}
    heights = {"+1": 1, "-1": -1, "perturbed": 0}
    fig, ax = plt.subplots(figsize=(max(6.0, len(statuses) * 0.25), 3.0))
    for i, status in statuses:
        h = heights[status]
        if h:
            ax.bar(i, h, color=colors[status], width=0.8)
        else:
            ax.scatter(i, 0, marker="x", color=colors[status], zorder=3)
    ax.axhline(0, color="black", linewidth=0.8)
    ax.set_ylim(-1.5, 1.5)
    ax.set_yticks([-1, 0, 1])
    ax.set_yticklabels(["-e_i", "perturbed", "+e_i"])
    ax.set_xlabel("generator index")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
