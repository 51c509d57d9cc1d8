"""Report figures: a per-point status strip saved next to the text output."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

_STATUS_COLOR = {"pass": "#2a9d34", "fail": "#d62728", "inconclusive": "#ff9f1c"}
_STATUS_LEVEL = {"pass": 1, "inconclusive": 0, "fail": -1}


def render_report_figure(report, path) -> None:
    """Scatter of check status per sampled point; works for any report that
    exposes .lines or .diagonal_checks/.escape_checks."""
    groups = []
    if hasattr(report, "lines"):
        groups.append(("checks", report.lines))
    else:
        groups.append(("diagonal", report.diagonal_checks))
        groups.append(("escape", report.escape_checks))
    fig, axes = plt.subplots(len(groups), 1, figsize=(8, 2.2 * len(groups)),
                             squeeze=False, sharex=True)
    for ax, (label, lines) in zip(axes[:, 0], groups):
        xs = [line.n for line in lines]
        ys = [_STATUS_LEVEL[line.status] for line in lines]
        colors = [_STATUS_COLOR[line.status] for line in lines]
        ax.scatter(xs, ys, c=colors, s=28)
        ax.set_yticks([-1, 0, 1], ["fail", "inconclusive", "pass"])
        ax.set_ylim(-1.5, 1.5)
        ax.set_ylabel(label)
        ax.grid(True, axis="x", alpha=0.3)
    axes[-1, 0].set_xlabel("n")
    verdict = "true" if report.verdict else "false"
    fig.suptitle(f"{getattr(report, 'name', 'thm5')} verdict={verdict}")
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
