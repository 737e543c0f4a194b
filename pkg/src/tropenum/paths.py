"""Enumeration of lambda-admissible lattice paths."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Iterator

from .lattice import LatticePolygon, Point
from .order import LambdaOrder, validate_for_polygon


@dataclass(frozen=True)
class LatticePath:
    points: tuple[Point, ...]

    @property
    def length(self) -> int:
        return len(self.points) - 1

    def to_json(self) -> list[list[int]]:
        return [list(p) for p in self.points]


def enumerate_paths(poly: LatticePolygon, order: LambdaOrder, n: int) -> Iterator[LatticePath]:
    """All strictly lambda-increasing paths of length ``n`` from p to q.

    Since the polygon is convex, every increasing choice of lattice points
    gives an admissible path, so this is just combinations over the sorted
    interior-of-range points.
    """
    for pts in iter_path_tuples(poly, order, n):
        yield LatticePath(pts)


def iter_path_tuples(poly: LatticePolygon, order: LambdaOrder, n: int) -> Iterator[tuple[Point, ...]]:
    if n < 1:
        raise ValueError("path length must be >= 1")
    p, q = validate_for_polygon(order, poly)
    pts = sorted(poly.lattice_points(), key=order.key)
    middle = pts[1:-1]
    for chosen in combinations(middle, n - 1):
        yield (p, *chosen, q)


def count_paths(poly: LatticePolygon, n: int) -> int:
    m = len(poly.lattice_points())
    return comb(m - 2, n - 1)


def is_admissible(path: LatticePath | tuple, poly: LatticePolygon, order: LambdaOrder) -> bool:
    pts = path.points if isinstance(path, LatticePath) else tuple(path)
    p, q = validate_for_polygon(order, poly)
    if len(pts) < 2 or pts[0] != p or pts[-1] != q:
        return False
    keys = [order.key(x) for x in pts]
    if any(a >= b for a, b in zip(keys, keys[1:])):
        return False
    return all(poly.contains(x) for x in pts)
