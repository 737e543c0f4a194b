"""Compression of the two regions cut out by a lattice path.

A path from p to q splits the polygon into the part above it (``plus``,
bounded by the clockwise boundary arc from p to q) and the part below it
(``minus``, bounded by the counterclockwise arc).  A compression step at the
first convex corner either cuts the corner off as a triangle or reflects it
across the chord, adding a parallelogram.  Sequences ending on the boundary
arc yield the compressing subdivisions of that region.

Cells travel through the hot path as raw vertex tuples (3 for a triangle,
4 for a parallelogram in cyclic order); the public operations wrap them in
``Cell``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .lattice import Cell, LatticePolygon, Point, boundary_lattice_points, _side_sign
from .order import LambdaOrder, validate_for_polygon
from .paths import LatticePath

RawCell = tuple[Point, ...]


@dataclass(frozen=True)
class PolygonContext:
    """Everything about (polygon, order) the compression search needs."""

    poly: LatticePolygon
    order: LambdaOrder
    p: Point
    q: Point
    inside: frozenset
    boundary: frozenset
    plus_arc: tuple[Point, ...]
    minus_arc: tuple[Point, ...]

    def arc(self, side: int) -> tuple[Point, ...]:
        return self.plus_arc if side > 0 else self.minus_arc


@lru_cache(maxsize=64)
def polygon_context(poly: LatticePolygon, order: LambdaOrder) -> PolygonContext:
    p, q = validate_for_polygon(order, poly)
    ring = boundary_lattice_points(poly)
    ip, iq = ring.index(p), ring.index(q)
    n = len(ring)
    ccw = [ring[(ip + k) % n] for k in range((iq - ip) % n + 1)]
    cw = [ring[(ip - k) % n] for k in range((ip - iq) % n + 1)]
    return PolygonContext(
        poly=poly,
        order=order,
        p=p,
        q=q,
        inside=frozenset(poly.lattice_points()),
        boundary=frozenset(ring),
        plus_arc=tuple(cw),
        minus_arc=tuple(ccw),
    )


def reduced_image(path: tuple[Point, ...]) -> tuple[Point, ...]:
    """Path vertices with straight-through points removed (the image as a polyline)."""
    out = [path[0]]
    for k in range(1, len(path) - 1):
        a, b, c = out[-1], path[k], path[k + 1]
        if (b[0] - a[0]) * (c[1] - b[1]) - (b[1] - a[1]) * (c[0] - b[0]) != 0:
            out.append(b)
    out.append(path[-1])
    return tuple(out)


@dataclass
class SearchStats:
    terminals: int = 0
    dead_ends: int = 0
    collisions: int = 0

    def add(self, other: "SearchStats") -> None:
        self.terminals += other.terminals
        self.dead_ends += other.dead_ends
        self.collisions += other.collisions


def search(path: tuple[Point, ...], side: int, ctx: PolygonContext, stats: SearchStats | None = None) -> list[tuple[RawCell, ...]]:
    """All terminal cell lists for one side of ``path`` (raw cells, deduplicated)."""
    target = reduced_image(ctx.arc(side))
    inside = ctx.inside
    found: list[tuple[RawCell, ...]] = []
    cells: list[RawCell] = []
    dead = 0

    def explore(pts: tuple[Point, ...], start: int) -> None:
        nonlocal dead
        n = len(pts)
        j = start
        while j < n - 1:
            a, b, c = pts[j - 1], pts[j], pts[j + 1]
            if side * ((b[0] - a[0]) * (c[1] - b[1]) - (b[1] - a[1]) * (c[0] - b[0])) > 0:
                break
            j += 1
        else:
            if reduced_image(pts) == target:
                found.append(tuple(cells))
            else:
                dead += 1
            return
        nxt = j - 1 if j > 1 else 1
        cells.append((a, b, c))
        explore(pts[:j] + pts[j + 1:], nxt)
        cells.pop()
        w = (a[0] + c[0] - b[0], a[1] + c[1] - b[1])
        if w in inside:
            cells.append((a, b, c, w))
            explore(pts[:j] + (w,) + pts[j + 1:], nxt)
            cells.pop()

    explore(tuple(path), 1)
    unique = {_canonical(cs): cs for cs in found}
    if stats is not None:
        stats.terminals += len(found)
        stats.dead_ends += dead
        stats.collisions += len(found) - len(unique)
    if len(unique) == len(found):
        return found
    return [unique[k] for k in sorted(unique)]


def _canonical(cells: tuple[RawCell, ...]) -> tuple:
    return tuple(sorted((len(c), tuple(sorted(c))) for c in cells))


# Step-level operations, mostly for inspection and tests.


@dataclass(frozen=True)
class Region:
    side: str
    current_path: tuple[Point, ...]
    target_boundary: tuple[Point, ...]
    ambient: LatticePolygon

    @classmethod
    def of(cls, path: LatticePath | tuple, side: str, poly: LatticePolygon, order: LambdaOrder) -> "Region":
        ctx = polygon_context(poly, order)
        pts = path.points if isinstance(path, LatticePath) else tuple(tuple(p) for p in path)
        return cls(side, pts, ctx.arc(_side_sign(side)), poly)

    @property
    def is_empty(self) -> bool:
        return reduced_image(self.current_path) == reduced_image(self.target_boundary)


@dataclass(frozen=True)
class CompressionState:
    region: Region
    cells: tuple[Cell, ...] = field(default=())

    def with_path(self, path: tuple[Point, ...], cell: Cell) -> "CompressionState":
        r = self.region
        return CompressionState(Region(r.side, path, r.target_boundary, r.ambient), self.cells + (cell,))


def find_pivot(st: CompressionState) -> int | None:
    """Smallest interior index where the region is convex, or None."""
    s = _side_sign(st.region.side)
    pts = st.region.current_path
    for j in range(1, len(pts) - 1):
        a, b, c = pts[j - 1], pts[j], pts[j + 1]
        if s * ((b[0] - a[0]) * (c[1] - b[1]) - (b[1] - a[1]) * (c[0] - b[0])) > 0:
            return j
    return None


def step_triangle(st: CompressionState, j: int) -> CompressionState:
    pts = st.region.current_path
    cell = Cell("triangle", (pts[j - 1], pts[j], pts[j + 1]))
    return st.with_path(pts[:j] + pts[j + 1:], cell)


def step_parallelogram(st: CompressionState, j: int) -> CompressionState | None:
    """Reflect the pivot across its chord; None when the reflected point leaves the polygon."""
    pts = st.region.current_path
    a, b, c = pts[j - 1], pts[j], pts[j + 1]
    w = (a[0] + c[0] - b[0], a[1] + c[1] - b[1])
    if not st.region.ambient.contains(w):
        return None
    return st.with_path(pts[:j] + (w,) + pts[j + 1:], Cell("parallelogram", (a, b, c, w)))


def compressing_subdivisions(region: Region, order: LambdaOrder | None = None, stats: SearchStats | None = None) -> list[list[Cell]]:
    """Distinct compressing subdivisions of the region, in canonical order.

    An empty region (path already on the boundary arc) yields one empty list.
    """
    from .order import LAMBDA0

    ctx = polygon_context(region.ambient, order or LAMBDA0)
    side = _side_sign(region.side)
    if reduced_image(region.target_boundary) != reduced_image(ctx.arc(side)):
        raise ValueError("region target does not match the polygon boundary arc")
    raw = search(region.current_path, side, ctx, stats)
    result = [sorted((Cell.from_vertices(c) for c in cs), key=Cell.key) for cs in raw]
    result.sort(key=lambda cs: [c.key() for c in cs])
    return result
