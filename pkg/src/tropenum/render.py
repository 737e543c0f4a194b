"""SVG figures of subdivisions and tropical curves (matplotlib, headless)."""

from __future__ import annotations

from pathlib import Path
from typing import Sequence

import matplotlib

matplotlib.use("Agg")
from matplotlib.figure import Figure  # noqa: E402
from matplotlib.patches import Polygon as MplPolygon  # noqa: E402

from .lattice import LatticePolygon, Point  # noqa: E402
from .tropical import CellComplex, TropicalCurveGraph  # noqa: E402

TRIANGLE_COLOR = "#9ecae1"
PARALLELOGRAM_COLOR = "#fdd0a2"
PATH_COLOR = "#d62728"

# fixed salt + no date => byte-identical output across runs
matplotlib.rcParams["svg.hashsalt"] = "tropenum"
matplotlib.rcParams["svg.fonttype"] = "none"
_SVG_META = {"Date": None, "Creator": "tropenum"}


def _save(fig: Figure, out: str | Path) -> Path:
    out = Path(out)
    out.parent.mkdir(parents=True, exist_ok=True)
    fig.savefig(out, format="svg", metadata=_SVG_META)
    return out


def _draw_cells(ax, poly: LatticePolygon, cells: Sequence[Sequence[Point]], path: Sequence[Point] | None):
    for c in cells:
        color = TRIANGLE_COLOR if len(c) == 3 else PARALLELOGRAM_COLOR
        ax.add_patch(MplPolygon(list(c), closed=True, facecolor=color, edgecolor="black", linewidth=0.8))
    ax.add_patch(MplPolygon(list(poly.vertices), closed=True, fill=False, edgecolor="black", linewidth=1.6))
    pts = poly.lattice_points()
    ax.plot([p[0] for p in pts], [p[1] for p in pts], "k.", markersize=4)
    if path:
        ax.plot([p[0] for p in path], [p[1] for p in path], color=PATH_COLOR, linewidth=2.0)
    x0, y0, x1, y1 = poly.bounding_box()
    ax.set_xlim(x0 - 0.5, x1 + 0.5)
    ax.set_ylim(y0 - 0.5, y1 + 0.5)
    ax.set_aspect("equal")
    ax.set_xticks(range(x0, x1 + 1))
    ax.set_yticks(range(y0, y1 + 1))


def render_subdivision(poly: LatticePolygon, cells, out, path=None, title: str | None = None) -> Path:
    """Polygon outline, cells filled by type, path in red."""
    fig = Figure(figsize=(4, 4))
    ax = fig.add_subplot(1, 1, 1)
    _draw_cells(ax, poly, cells, path)
    if title:
        ax.set_title(title, fontsize=9)
    return _save(fig, out)


def render_contribution(poly: LatticePolygon, record: dict, out) -> Path:
    cells = [tuple(tuple(v) for v in c["vertices"]) for c in record["cells"]]
    path = [tuple(p) for p in record.get("path", [])]
    sgn = "+" if record.get("sign", 1) > 0 else "-"
    title = (f"mu={record.get('multiplicity')}  odd={record.get('odd')}  sign={sgn}  "
             f"irreducible={record.get('irreducible')}")
    return render_subdivision(poly, cells, out, path=path, title=title)


def render_tropical(curve: TropicalCurveGraph, cx: CellComplex, out) -> Path:
    """Corner locus on the left, dual subdivision on the right."""
    fig = Figure(figsize=(8, 4))
    ax1 = fig.add_subplot(1, 2, 1)
    ax2 = fig.add_subplot(1, 2, 2)

    xs = [float(v[0]) for v in curve.vertices] + [float(e.start[0]) for e in curve.lines]
    ys = [float(v[1]) for v in curve.vertices] + [float(e.start[1]) for e in curve.lines]
    cx_, cy_ = (sum(xs) / len(xs), sum(ys) / len(ys)) if xs else (0.0, 0.0)
    span = max([max(xs) - min(xs), max(ys) - min(ys), 1.0]) if xs else 1.0
    reach = 0.75 * span + 1.0

    def lw(w):
        return 1.0 + 0.8 * (w - 1)

    for e in curve.edges:
        ax1.plot([float(e.start[0]), float(e.end[0])], [float(e.start[1]), float(e.end[1])], "k-", linewidth=lw(e.weight))
    for r in curve.rays:
        dx, dy = r.direction
        n = (dx * dx + dy * dy) ** 0.5
        sx, sy = float(r.start[0]), float(r.start[1])
        ax1.plot([sx, sx + reach * dx / n], [sy, sy + reach * dy / n], "k-", linewidth=lw(r.weight))
    for ln in curve.lines:
        dx, dy = ln.direction
        n = (dx * dx + dy * dy) ** 0.5
        sx, sy = float(ln.start[0]), float(ln.start[1])
        ax1.plot([sx - reach * dx / n, sx + reach * dx / n], [sy - reach * dy / n, sy + reach * dy / n], "k-", linewidth=lw(ln.weight))
    if curve.vertices:
        ax1.plot(xs[: len(curve.vertices)], ys[: len(curve.vertices)], "o", color=PATH_COLOR, markersize=3)
    ax1.set_xlim(cx_ - reach, cx_ + reach)
    ax1.set_ylim(cy_ - reach, cy_ + reach)
    ax1.set_aspect("equal")
    ax1.set_title("tropical curve", fontsize=9)

    for c in cx.cells:
        if len(c) >= 3:
            ax2.add_patch(MplPolygon(list(c), closed=True, facecolor=TRIANGLE_COLOR if len(c) == 3 else PARALLELOGRAM_COLOR,
                                     edgecolor="black", linewidth=0.8))
        else:
            ax2.plot([c[0][0], c[1][0]], [c[0][1], c[1][1]], "k-", linewidth=1.5)
    A = cx.support
    ax2.plot([p[0] for p in A], [p[1] for p in A], "k.", markersize=5)
    ax2.set_xlim(min(p[0] for p in A) - 0.5, max(p[0] for p in A) + 0.5)
    ax2.set_ylim(min(p[1] for p in A) - 0.5, max(p[1] for p in A) + 0.5)
    ax2.set_aspect("equal")
    ax2.set_title("dual subdivision", fontsize=9)
    return _save(fig, out)
