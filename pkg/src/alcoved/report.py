"""File reports: delimited tables plus rendered figures for each command.

Every writer takes an output directory and returns the list of paths it
created.  Figures are rendered with the Agg backend so report generation
works headless; matplotlib is imported only when a figure is actually drawn.
"""

from __future__ import annotations

import csv
import os
from fractions import Fraction
from typing import Optional, Sequence

from .dosp import ConjectureReport
from .oracle import CountReport
from .series import RationalSeries, expand
from .shelling import DualGraph, bfs_weights


def _plt():
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    return plt


def _frac(x: Fraction) -> str:
    return str(x)


def _point(p: Sequence[Fraction]) -> str:
    return " ".join(_frac(x) for x in p)


def write_graph_tables(g: DualGraph, out_dir: str) -> list[str]:
    """alcoves.csv (one row per node) and edges.csv (one row per shared facet)."""
    os.makedirs(out_dir, exist_ok=True)
    rs = g.polytope.rs
    weights = bfs_weights(g)
    alcoves_path = os.path.join(out_dir, "alcoves.csv")
    with open(alcoves_path, "w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh)
        w.writerow(["node", "dist", "weight", "m_vector"]
                   + [f"vertex_{t}" for t in range(rs.rank + 1)])
        for v, a in enumerate(g.nodes):
            w.writerow([v, g.dist[v], weights[v], _point(a.m_vector)]
                       + [_point(vx) for vx in a.vertices])
    edges_path = os.path.join(out_dir, "edges.csv")
    with open(edges_path, "w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh)
        w.writerow(["u", "v", "weight", "root_c", "level", "opposite_type"])
        for e in g.edges:
            root = rs.positive_roots[e.facet.root_index]
            w.writerow([e.u, e.v, e.weight, _point(root.c), e.facet.level,
                        e.facet.opposite_type])
    return [alcoves_path, edges_path]


def write_series_text(s: RationalSeries, out_dir: str, T: int = 8) -> list[str]:
    path = os.path.join(out_dir, "series.txt")
    os.makedirs(out_dir, exist_ok=True)
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(str(s) + "\n")
        fh.write("coefficients t=0..%d: %s\n" % (T, " ".join(map(str, expand(s, T)))))
    return [path]


def draw_dual_graph(
    g: DualGraph, out_dir: str, node_labels: Optional[Sequence[str]] = None
) -> list[str]:
    """Layered drawing of the dual graph: BFS level = row, edge weights at midpoints."""
    plt = _plt()
    levels: dict[int, list[int]] = {}
    for v, d in enumerate(g.dist):
        levels.setdefault(d, []).append(v)
    pos: dict[int, tuple[float, float]] = {}
    for d, vs in levels.items():
        for i, v in enumerate(sorted(vs)):
            pos[v] = (i - (len(vs) - 1) / 2.0, -float(d))
    width = max(len(vs) for vs in levels.values())
    fig, ax = plt.subplots(figsize=(max(4.0, 1.6 * width), max(3.0, 1.2 * len(levels))))
    for e in g.edges:
        (x1, y1), (x2, y2) = pos[e.u], pos[e.v]
        ax.plot([x1, x2], [y1, y2], color="0.4", zorder=1)
        ax.annotate(str(e.weight), ((x1 + x2) / 2, (y1 + y2) / 2),
                    textcoords="offset points", xytext=(4, 3), fontsize=9, color="0.25")
    xs = [pos[v][0] for v in range(len(g.nodes))]
    ys = [pos[v][1] for v in range(len(g.nodes))]
    ax.scatter(xs, ys, s=320, zorder=2, facecolor="white", edgecolor="black")
    for v in range(len(g.nodes)):
        ax.annotate(str(v), pos[v], ha="center", va="center", fontsize=9, zorder=3)
        if node_labels is not None:
            ax.annotate(node_labels[v], pos[v], textcoords="offset points",
                        xytext=(0, 13), ha="center", fontsize=7, color="0.3", zorder=3)
    ax.set_axis_off()
    ax.margins(0.15)
    path = os.path.join(out_dir, "dual_graph.png")
    os.makedirs(out_dir, exist_ok=True)
    fig.savefig(path, dpi=150, bbox_inches="tight")
    plt.close(fig)
    return [path]


def write_count_table(rep: CountReport, out_dir: str) -> list[str]:
    path = os.path.join(out_dir, "counts.csv")
    os.makedirs(out_dir, exist_ok=True)
    with open(path, "w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh)
        w.writerow(["t", "direct_count", "series_coefficient", "ok"])
        for row in rep.rows:
            w.writerow([row.t, row.oracle, row.series, row.ok])
    return [path]


def draw_counts(rep: CountReport, out_dir: str) -> list[str]:
    plt = _plt()
    ts = [row.t for row in rep.rows]
    fig, ax = plt.subplots(figsize=(5, 3.4))
    ax.plot(ts, [row.series for row in rep.rows], "-", label="series expansion")
    ax.plot(ts, [row.oracle for row in rep.rows], "o", mfc="none", label="direct count")
    bad = [row for row in rep.rows if not row.ok]
    if bad:
        ax.plot([r.t for r in bad], [r.oracle for r in bad], "rx", ms=10, label="mismatch")
    ax.set_xlabel("dilation t")
    ax.set_ylabel("lattice points")
    ax.legend()
    fig.tight_layout()
    path = os.path.join(out_dir, "counts.png")
    os.makedirs(out_dir, exist_ok=True)
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return [path]


def write_winding_table(hist: dict[int, int], out_dir: str) -> list[str]:
    path = os.path.join(out_dir, "winding.csv")
    os.makedirs(out_dir, exist_ok=True)
    with open(path, "w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh)
        w.writerow(["winding", "count"])
        for d in sorted(hist):
            w.writerow([d, hist[d]])
    return [path]


def draw_winding(hist: dict[int, int], out_dir: str) -> list[str]:
    plt = _plt()
    fig, ax = plt.subplots(figsize=(4.2, 3))
    ds = sorted(hist)
    ax.bar(ds, [hist[d] for d in ds], color="0.55")
    ax.set_xlabel("winding number")
    ax.set_ylabel("hypersimplicial DOSPs")
    ax.set_xticks(ds)
    fig.tight_layout()
    path = os.path.join(out_dir, "winding.png")
    os.makedirs(out_dir, exist_ok=True)
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return [path]


def write_conjecture_tables(rep: ConjectureReport, out_dir: str) -> list[str]:
    """Per-root verdicts plus one row per failure (empty file when none)."""
    os.makedirs(out_dir, exist_ok=True)
    roots_path = os.path.join(out_dir, "conjecture_roots.csv")
    with open(roots_path, "w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh)
        w.writerow(["root", "root_m_vector", "ok", "cover_histogram", "failures"])
        for rr in rep.per_root:
            hist = " ".join(f"{d}:{c}" for d, c in sorted(rr.cover_histogram.items()))
            w.writerow([rr.root, _point(rr.root_m_vector), rr.ok, hist, len(rr.failures)])
    fail_path = os.path.join(out_dir, "conjecture_failures.csv")
    with open(fail_path, "w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh)
        w.writerow(["root", "node", "m_vector", "cover_count", "cover_labels",
                    "image", "reason", "colliding_node"])
        for rr in rep.per_root:
            for f in rr.failures:
                w.writerow([rr.root, f.node, _point(f.m_vector), f.cover_count,
                            " | ".join(f.cover_labels), f.image, f.reason,
                            "" if f.colliding_node is None else f.colliding_node])
    return [roots_path, fail_path]


def write_label_table(g: DualGraph, labels: Sequence[str], out_dir: str,
                      name: str = "labels.csv") -> list[str]:
    """Node-to-DOSP map of one rooted graph, in BFS order."""
    path = os.path.join(out_dir, name)
    os.makedirs(out_dir, exist_ok=True)
    with open(path, "w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh)
        w.writerow(["node", "dist", "cover_count", "label"])
        for v in range(len(g.nodes)):
            w.writerow([v, g.dist[v], len(g.covers[v]), labels[v]])
    return [path]
