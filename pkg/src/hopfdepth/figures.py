"""Figures rendered alongside the survey report."""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt


def render_survey_figures(report, outdir):
    """Write the summary figures for a survey report; returns the file paths."""
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    paths = []

    groups = [g for g in report.spec.groups]
    normal = []
    non_normal = []
    for name in groups:
        recs = [r for r in report.records if r.group == name and r.verdict is not None]
        n = sum(1 for r in recs if all(r.verdict.booleans))
        normal.append(n)
        non_normal.append(len(recs) - n)

    fig, ax = plt.subplots(figsize=(7.0, 3.6))
    xs = range(len(groups))
    ax.bar(xs, normal, label="normal (= depth two)", color="#2a6f97")
    ax.bar(xs, non_normal, bottom=normal, label="not normal", color="#d1495b")
    ax.set_xticks(list(xs))
    ax.set_xticklabels(groups, rotation=45, ha="right")
    ax.set_ylabel("inclusion pairs")
    ax.set_title("corpus pairs per group")
    ax.legend(frameon=False)
    fig.tight_layout()
    p = outdir / "pairs_by_group.png"
    fig.savefig(p, dpi=120)
    plt.close(fig)
    paths.append(p)

    idx = []
    minimal_n = []
    for r in report.records:
        v = r.verdict
        if v is not None and v.depth_two and v.minimal_n is not None:
            idx.append(v.index)
            minimal_n.append(v.minimal_n)
    fig, ax = plt.subplots(figsize=(4.6, 4.2))
    if idx:
        top = max(max(idx), max(minimal_n)) + 1
        ax.plot([0, top], [0, top], color="#aaaaaa", lw=1, zorder=1)
        ax.scatter(idx, minimal_n, s=28, color="#2a6f97", zorder=2)
        ax.set_xlim(0, top)
        ax.set_ylim(0, top)
    ax.set_xlabel("dim H / dim K")
    ax.set_ylabel("minimal N")
    ax.set_title("depth-two bound vs. index")
    fig.tight_layout()
    p = outdir / "minimal_n_vs_index.png"
    fig.savefig(p, dpi=120)
    plt.close(fig)
    paths.append(p)

    return paths
