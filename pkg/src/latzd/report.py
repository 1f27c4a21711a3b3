"""Rendering helpers: CSV rows for sweeps and matplotlib figures.

Figures are written straight to files (Agg backend); the same report
directory receives the delimited results so a sweep leaves a
self-contained bundle behind.
"""

from __future__ import annotations

import csv
import math
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402  (backend must be set first)

from .census import CensusSummary
from .zdgraph import ZdGraph


def write_census_csv(summary: CensusSummary, path: Path) -> None:
    """One row per (lattice, ideal, claim) with status and witness."""
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["lattice_id", "size", "ideal", "claim", "status", "witness"])
        for r in summary.rows:
            witness = ""
            if r.report.witness:
                witness = " ".join(
                    f"{k}={v}" for k, v in sorted(r.report.witness.items())
                )
            writer.writerow(
                [r.lattice_id, r.size, r.ideal_labels, r.report.claim_id,
                 r.report.status, witness]
            )


def claim_outcome_figure(summary: CensusSummary, path: Path) -> None:
    """Stacked bar chart of HOLDS/FAILS/VACUOUS per claim."""
    claims = sorted(summary.per_claim)
    holds = [summary.per_claim[c].get("HOLDS", 0) for c in claims]
    fails = [summary.per_claim[c].get("FAILS", 0) for c in claims]
    vacuous = [summary.per_claim[c].get("VACUOUS", 0) for c in claims]
    fig, ax = plt.subplots(figsize=(max(6, 0.9 * len(claims)), 4))
    xs = range(len(claims))
    ax.bar(xs, holds, label="HOLDS", color="#2a9d8f")
    ax.bar(xs, vacuous, bottom=holds, label="VACUOUS", color="#bdbdbd")
    bottoms = [h + v for h, v in zip(holds, vacuous)]
    ax.bar(xs, fails, bottom=bottoms, label="FAILS", color="#e63946")
    ax.set_xticks(list(xs))
    ax.set_xticklabels(claims, rotation=45, ha="right")
    ax.set_ylabel("instances")
    ax.set_title("claim outcomes across census")
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def lattice_size_figure(summary: CensusSummary, path: Path) -> None:
    sizes = sorted(summary.lattice_counts)
    counts = [summary.lattice_counts[s] for s in sizes]
    fig, ax = plt.subplots(figsize=(5, 3.5))
    ax.bar(sizes, counts, color="#457b9d")
    ax.set_xlabel("lattice size")
    ax.set_ylabel("isomorphism classes")
    ax.set_xticks(sizes)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def graph_figure(G: ZdGraph, path: Path, title: str = "") -> None:
    """Draw the graph on a circle with lattice labels as node names."""
    n = G.n
    labels = G.labels()
    fig, ax = plt.subplots(figsize=(4.5, 4.5))
    if n:
        coords = [
            (math.cos(2 * math.pi * i / n), math.sin(2 * math.pi * i / n))
            for i in range(n)
        ]
        pos = {e: coords[i] for i, e in enumerate(G.vertex_elements)}
        for a, b in G.edges():
            (x1, y1), (x2, y2) = pos[a], pos[b]
            ax.plot([x1, x2], [y1, y2], color="#555555", zorder=1)
        xs = [c[0] for c in coords]
        ys = [c[1] for c in coords]
        ax.scatter(xs, ys, s=600, color="#f1faee", edgecolors="#1d3557", zorder=2)
        for (x, y), lab in zip(coords, labels):
            ax.text(x, y, lab, ha="center", va="center", zorder=3)
        ax.set_xlim(-1.4, 1.4)
        ax.set_ylim(-1.4, 1.4)
    else:
        ax.text(0.5, 0.5, "(empty graph)", ha="center", va="center")
    ax.set_aspect("equal")
    ax.axis("off")
    if title:
        ax.set_title(title)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def write_census_bundle(summary: CensusSummary, out_dir: Path) -> list[Path]:
    """Write summary table, CSV, figures and replayable counterexample files."""
    out_dir.mkdir(parents=True, exist_ok=True)
    written = []
    summary_path = out_dir / "summary.txt"
    summary_path.write_text(summary.render())
    written.append(summary_path)
    csv_path = out_dir / "results.csv"
    write_census_csv(summary, csv_path)
    written.append(csv_path)
    fig_path = out_dir / "claim_outcomes.png"
    claim_outcome_figure(summary, fig_path)
    written.append(fig_path)
    sizes_path = out_dir / "lattice_counts.png"
    lattice_size_figure(summary, sizes_path)
    written.append(sizes_path)
    seen = set()
    for ce in summary.counterexamples:
        if ce.lattice_id in seen:
            continue
        seen.add(ce.lattice_id)
        ce_path = out_dir / f"counterexample_{ce.lattice_id}.lat"
        ce_path.write_text(ce.lattice_text)
        written.append(ce_path)
    return written
