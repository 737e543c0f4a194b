"""Exact integer geometry on the planar lattice.

Points are plain ``(i, j)`` integer pairs (``LatticePoint`` is a named tuple
and compares equal to the bare tuple).  Areas are *normalized*: twice the
Euclidean area, so a unimodular triangle has area 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable, NamedTuple, Sequence

Point = tuple[int, int]


class LatticePoint(NamedTuple):
    i: int
    j: int


class LatticeSegment(NamedTuple):
    a: Point
    b: Point

    @property
    def lattice_length(self) -> int:
        return lattice_length(self.a, self.b)


def lattice_length(a: Point, b: Point) -> int:
    """Number of primitive steps between two lattice points."""
    return gcd(abs(b[0] - a[0]), abs(b[1] - a[1]))


def cross(o: Point, a: Point, b: Point) -> int:
    """z-component of (a - o) x (b - o)."""
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def turn(prev: Point, v: Point, nxt: Point) -> int:
    """(v - prev) x (next - v); positive for a left (counterclockwise) turn."""
    return (v[0] - prev[0]) * (nxt[1] - v[1]) - (v[1] - prev[1]) * (nxt[0] - v[0])


def shoelace2(vertices: Sequence[Point]) -> int:
    """Signed twice-area of a closed polygon (positive when counterclockwise)."""
    n = len(vertices)
    s = 0
    for k in range(n):
        x0, y0 = vertices[k]
        x1, y1 = vertices[(k + 1) % n]
        s += x0 * y1 - x1 * y0
    return s


def segment_points(a: Point, b: Point) -> list[Point]:
    """Lattice points on the closed segment from a to b, in order."""
    g = lattice_length(a, b)
    if g == 0:
        return [tuple(a)]
    di, dj = (b[0] - a[0]) // g, (b[1] - a[1]) // g
    return [(a[0] + k * di, a[1] + k * dj) for k in range(g + 1)]


@dataclass(frozen=True)
class LatticePolygon:
    """Convex lattice polygon with counterclockwise vertices.

    The constructor normalizes orientation, drops repeated and collinear
    vertices, and rejects non-convex input.  ``degenerate=True`` allows a
    zero-area result (a segment or a point).
    """

    vertices: tuple[Point, ...]
    degenerate: bool = False

    def __post_init__(self):
        verts = _clean_cycle([tuple(v) for v in self.vertices])
        if len(verts) >= 3 and shoelace2(verts) < 0:
            verts = verts[::-1]
        if len(verts) < 3:
            if not self.degenerate:
                raise ValueError(f"polygon has zero area: {self.vertices!r}")
        else:
            n = len(verts)
            for k in range(n):
                if cross(verts[k - 1], verts[k], verts[(k + 1) % n]) <= 0:
                    raise ValueError(f"polygon is not strictly convex: {self.vertices!r}")
        object.__setattr__(self, "vertices", tuple(verts))

    def edges(self) -> list[tuple[Point, Point]]:
        v = self.vertices
        return [(v[k], v[(k + 1) % len(v)]) for k in range(len(v))]

    def contains(self, pt: Point) -> bool:
        """Closed containment test."""
        v = self.vertices
        if len(v) < 3:
            if len(v) == 1:
                return tuple(pt) == v[0]
            return cross(v[0], v[1], pt) == 0 and _between(v[0], v[1], pt)
        return all(cross(a, b, pt) >= 0 for a, b in self.edges())

    def bounding_box(self) -> tuple[int, int, int, int]:
        xs = [p[0] for p in self.vertices]
        ys = [p[1] for p in self.vertices]
        return min(xs), min(ys), max(xs), max(ys)

    def lattice_points(self) -> list[Point]:
        """All lattice points of the closed polygon, sorted."""
        x0, y0, x1, y1 = self.bounding_box()
        return [(i, j) for i in range(x0, x1 + 1) for j in range(y0, y1 + 1) if self.contains((i, j))]


@dataclass(frozen=True)
class Cell:
    """A triangle or parallelogram of a subdivision.

    Parallelogram vertices are cyclic, so ``v0 + v2 == v1 + v3``.
    """

    kind: str
    vertices: tuple[Point, ...]

    def __post_init__(self):
        verts = tuple(tuple(v) for v in self.vertices)
        object.__setattr__(self, "vertices", verts)
        if self.kind == "triangle":
            if len(verts) != 3 or cross(*verts) == 0:
                raise ValueError(f"bad triangle {verts!r}")
        elif self.kind == "parallelogram":
            if len(verts) != 4:
                raise ValueError(f"bad parallelogram {verts!r}")
            a, b, c, w = verts
            if (a[0] + c[0], a[1] + c[1]) != (b[0] + w[0], b[1] + w[1]) or shoelace2(verts) == 0:
                raise ValueError(f"bad parallelogram {verts!r}")
        else:
            raise ValueError(f"unknown cell kind {self.kind!r}")

    @classmethod
    def from_vertices(cls, vertices: Sequence[Point]) -> "Cell":
        return cls("triangle" if len(vertices) == 3 else "parallelogram", tuple(vertices))

    @property
    def area(self) -> int:
        return abs(shoelace2(self.vertices))

    def edges(self) -> list[tuple[Point, Point]]:
        v = self.vertices
        return [(v[k], v[(k + 1) % len(v)]) for k in range(len(v))]

    def key(self) -> tuple:
        return (len(self.vertices), tuple(sorted(self.vertices)))


def _between(a: Point, b: Point, p: Point) -> bool:
    return min(a[0], b[0]) <= p[0] <= max(a[0], b[0]) and min(a[1], b[1]) <= p[1] <= max(a[1], b[1])


def _clean_cycle(verts: list[Point]) -> list[Point]:
    out: list[Point] = []
    for v in verts:
        if not out or out[-1] != v:
            out.append(v)
    while len(out) > 1 and out[0] == out[-1]:
        out.pop()
    changed = True
    while changed and len(out) >= 3:
        changed = False
        n = len(out)
        for k in range(n):
            a, b, c = out[k - 1], out[k], out[(k + 1) % n]
            if cross(a, b, c) == 0 and _between(a, c, b):
                del out[k]
                changed = True
                break
    return out


def _vertices(p: LatticePolygon | Cell | Sequence[Point]) -> tuple[Point, ...]:
    if isinstance(p, (LatticePolygon, Cell)):
        return p.vertices
    return tuple(tuple(v) for v in p)


def normalized_area(p: LatticePolygon | Cell | Sequence[Point]) -> int:
    """Twice the Euclidean area; 0 for a degenerate polygon."""
    verts = _vertices(p)
    if len(verts) < 3:
        return 0
    return abs(shoelace2(verts))


def boundary_count(p: LatticePolygon | Cell | Sequence[Point]) -> int:
    verts = _vertices(p)
    n = len(verts)
    return sum(lattice_length(verts[k], verts[(k + 1) % n]) for k in range(n))


def boundary_lattice_points(p: LatticePolygon | Cell | Sequence[Point]) -> list[Point]:
    """Boundary lattice points in counterclockwise order, starting at the first vertex."""
    verts = _vertices(p)
    n = len(verts)
    out: list[Point] = []
    for k in range(n):
        out.extend(segment_points(verts[k], verts[(k + 1) % n])[:-1])
    return out


def interior_lattice_points(p: LatticePolygon) -> set[Point]:
    on_boundary = set(boundary_lattice_points(p))
    return {pt for pt in p.lattice_points() if pt not in on_boundary}


def interior_count(p: LatticePolygon | Cell | Sequence[Point]) -> int:
    """Interior lattice point count from Pick's theorem."""
    return (normalized_area(p) - boundary_count(p) + 2) // 2


def interior_angle_lt_pi(prev: Point, v: Point, nxt: Point, side: str | int) -> bool:
    """Whether a region on ``side`` of the oriented path prev -> v -> next is convex at v.

    ``side`` is ``"plus"``/``+1`` for the region to the left of the direction
    of travel, ``"minus"``/``-1`` for the region to the right.
    """
    s = _side_sign(side)
    return s * turn(prev, v, nxt) > 0


def _side_sign(side: str | int) -> int:
    if side in ("plus", "+", 1):
        return 1
    if side in ("minus", "-", -1):
        return -1
    raise ValueError(f"unknown side {side!r}")


def convex_hull(points: Iterable[Point]) -> list[Point]:
    """Monotone chain hull, counterclockwise, collinear points dropped."""
    pts = sorted(set(tuple(p) for p in points))
    if len(pts) <= 2:
        return pts
    lower: list[Point] = []
    for p in pts:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: list[Point] = []
    for p in reversed(pts):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]
