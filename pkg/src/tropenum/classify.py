"""Nodality, rank, multiplicity, sign and irreducibility of subdivisions."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, prod
from typing import Sequence

from .lattice import Cell, LatticePolygon, Point, boundary_lattice_points, cross, normalized_area

RawCell = tuple[Point, ...]


@dataclass(frozen=True)
class Subdivision:
    ambient: LatticePolygon
    cells: tuple[Cell, ...]
    provenance: tuple[Point, ...] | None = None

    def __post_init__(self):
        cells = tuple(c if isinstance(c, Cell) else Cell.from_vertices(c) for c in self.cells)
        object.__setattr__(self, "cells", tuple(sorted(cells, key=Cell.key)))

    @property
    def raw(self) -> list[RawCell]:
        return [c.vertices for c in self.cells]

    def vertices(self) -> set[Point]:
        return {v for c in self.cells for v in c.vertices}


def _raw(S: Subdivision | Sequence) -> list[RawCell]:
    return S.raw if isinstance(S, Subdivision) else [tuple(c.vertices) if isinstance(c, Cell) else tuple(c) for c in S]


def _area2(c: RawCell) -> int:
    (x0, y0), (x1, y1), (x2, y2) = c[0], c[1], c[2]
    a = abs((x1 - x0) * (y2 - y0) - (y1 - y0) * (x2 - x0))
    return a if len(c) == 3 else 2 * a


def _tri_interior(c: RawCell) -> int:
    a, b, e = c
    bnd = (gcd(abs(a[0] - b[0]), abs(a[1] - b[1])) + gcd(abs(b[0] - e[0]), abs(b[1] - e[1]))
           + gcd(abs(e[0] - a[0]), abs(e[1] - a[1])))
    return (_area2(c) - bnd + 2) // 2


def _edge(u: Point, v: Point) -> tuple[Point, Point]:
    return (u, v) if u <= v else (v, u)


def _cell_edges(c: RawCell):
    n = len(c)
    return [_edge(c[k], c[(k + 1) % n]) for k in range(n)]


def _on_boundary(poly: LatticePolygon, u: Point, v: Point) -> bool:
    return any(cross(a, b, u) == 0 and cross(a, b, v) == 0 for a, b in poly.edges())


@dataclass
class NodalityReport:
    shapes_ok: bool
    boundary_vertices_ok: bool
    face_to_face_ok: bool
    area_ok: bool

    @property
    def nodal(self) -> bool:
        return self.shapes_ok and self.boundary_vertices_ok and self.face_to_face_ok and self.area_ok


def nodality_report(S: Subdivision) -> NodalityReport:
    cells = _raw(S)
    poly = S.ambient
    shapes_ok = True
    for c in cells:
        try:
            Cell.from_vertices(c)
        except ValueError:
            shapes_ok = False
    verts = {v for c in cells for v in c}
    boundary_ok = all(b in verts for b in boundary_lattice_points(poly))
    area_ok = sum(_area2(c) for c in cells) == normalized_area(poly) and all(poly.contains(v) for v in verts)
    f2f = _face_to_face(cells, verts, poly)
    return NodalityReport(shapes_ok, boundary_ok, f2f, area_ok)


def _face_to_face(cells: list[RawCell], verts: set[Point], poly: LatticePolygon) -> bool:
    uses: dict[tuple[Point, Point], int] = {}
    for c in cells:
        for e in _cell_edges(c):
            uses[e] = uses.get(e, 0) + 1
    for (u, v), k in uses.items():
        g = gcd(abs(v[0] - u[0]), abs(v[1] - u[1]))
        if g > 1:
            di, dj = (v[0] - u[0]) // g, (v[1] - u[1]) // g
            if any((u[0] + s * di, u[1] + s * dj) in verts for s in range(1, g)):
                return False
        if k != (1 if _on_boundary(poly, u, v) else 2):
            return False
    return True


def is_nodal(S: Subdivision) -> bool:
    """Triangles and parallelograms only, every boundary lattice point a vertex, edge-to-edge."""
    return nodality_report(S).nodal


def rank(S: Subdivision | Sequence) -> int:
    cells = _raw(S)
    verts = {v for c in cells for v in c}
    return len(verts) - sum(1 for c in cells if len(c) == 4) - 1


def multiplicity(S: Subdivision | Sequence) -> int:
    return prod(_area2(c) for c in _raw(S) if len(c) == 3)


def is_odd(S: Subdivision | Sequence) -> bool:
    return all(_area2(c) % 2 == 1 for c in _raw(S) if len(c) == 3)


def triangle_interior_total(S: Subdivision | Sequence) -> int:
    return sum(_tri_interior(c) for c in _raw(S) if len(c) == 3)


def sign(S: Subdivision | Sequence) -> int:
    """+1 if the triangles have an even total of interior lattice points, else -1."""
    return 1 if triangle_interior_total(S) % 2 == 0 else -1


def components(S: Subdivision | Sequence) -> list[set[tuple[Point, Point]]]:
    """Edge classes of the dual curve: a triangle joins its three edges, a
    parallelogram joins each pair of opposite sides."""
    cells = _raw(S)
    parent: dict = {}

    def find(x):
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    def union(x, y):
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[rx] = ry

    for c in cells:
        es = _cell_edges(c)
        for e in es:
            parent.setdefault(e, e)
        if len(c) == 3:
            union(es[0], es[1])
            union(es[1], es[2])
        else:
            union(es[0], es[2])
            union(es[1], es[3])
    groups: dict = {}
    for e in parent:
        groups.setdefault(find(e), set()).add(e)
    return list(groups.values())


def is_irreducible(S: Subdivision | Sequence) -> bool:
    return len(components(S)) == 1


def genus_of(S: Subdivision | Sequence, poly: LatticePolygon) -> int:
    from .lattice import boundary_count

    return rank(S) - (boundary_count(poly) - 1)


def max_horizontal_width(S: Subdivision | Sequence) -> int:
    return max((abs(u[0] - v[0]) for c in _raw(S) for u, v in _cell_edges(c)), default=0)


@dataclass(frozen=True)
class Classification:
    nodal: bool
    rank: int
    multiplicity: int
    odd: bool
    sign: int
    irreducible: bool
    genus: int

    def to_json(self) -> dict:
        return {
            "nodal": self.nodal,
            "rank": self.rank,
            "multiplicity": self.multiplicity,
            "odd": self.odd,
            "sign": self.sign,
            "irreducible": self.irreducible,
            "genus": self.genus,
        }


def classify(S: Subdivision) -> Classification:
    return Classification(
        nodal=is_nodal(S),
        rank=rank(S),
        multiplicity=multiplicity(S),
        odd=is_odd(S),
        sign=sign(S),
        irreducible=is_irreducible(S),
        genus=genus_of(S, S.ambient),
    )


def subdivision_to_json(S: Subdivision, cl: Classification | None = None) -> dict:
    cl = cl or classify(S)
    out = {
        "cells": [{"kind": c.kind, "vertices": [list(v) for v in c.vertices]} for c in S.cells],
        **cl.to_json(),
    }
    if S.provenance is not None:
        out["path"] = [list(p) for p in S.provenance]
    return out
