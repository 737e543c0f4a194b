"""Tropical curves of lift functions and their dual regular subdivisions.

Everything is exact: lift values are ``Fraction``s, vertices of the corner
locus are rational points.  The corner locus is computed from ties between
the affine forms ``i*x + j*y - nu(i, j)``; the subdivision is computed
separately from the lower convex hull of the lifted points.  The two are
compared by ``duality_check``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import gcd
from typing import Mapping

from .errors import DegenerateSupportError
from .lattice import Point, convex_hull, cross, lattice_length

RPoint = tuple[Fraction, Fraction]


@dataclass(frozen=True)
class LiftFunction:
    values: Mapping[Point, Fraction]

    def __post_init__(self):
        vals = {tuple(int(c) for c in k): Fraction(v) for k, v in dict(self.values).items()}
        if not vals:
            raise DegenerateSupportError("empty support")
        object.__setattr__(self, "values", vals)

    @classmethod
    def from_lists(cls, support, lift) -> "LiftFunction":
        if len(support) != len(lift):
            raise ValueError("support and lift have different lengths")
        return cls({tuple(p): Fraction(v) for p, v in zip(support, lift)})

    @property
    def support(self) -> list[Point]:
        return sorted(self.values)

    def form(self, a: Point, x: RPoint) -> Fraction:
        return a[0] * x[0] + a[1] * x[1] - self.values[a]


def legendre_value(f: LiftFunction, x) -> Fraction:
    x = (Fraction(x[0]), Fraction(x[1]))
    return max(f.form(a, x) for a in f.values)


def dominant(f: LiftFunction, x: RPoint) -> list[Point]:
    vals = {a: f.form(a, x) for a in f.values}
    top = max(vals.values())
    return sorted(a for a, v in vals.items() if v == top)


@dataclass(frozen=True)
class TropicalEdge:
    start: RPoint
    end: RPoint | None  # None for a ray or a line
    direction: tuple[int, int]  # primitive, from start towards end / infinity
    weight: int
    dual: tuple[Point, Point]


@dataclass
class TropicalCurveGraph:
    vertices: list[RPoint] = field(default_factory=list)
    vertex_duals: list[tuple[Point, ...]] = field(default_factory=list)
    edges: list[TropicalEdge] = field(default_factory=list)
    rays: list[TropicalEdge] = field(default_factory=list)
    lines: list[TropicalEdge] = field(default_factory=list)

    def to_json(self) -> dict:
        def fx(p):
            return [str(p[0]), str(p[1])]

        def ej(e):
            out = {"start": fx(e.start), "direction": list(e.direction), "weight": e.weight, "dual": [list(e.dual[0]), list(e.dual[1])]}
            if e.end is not None:
                out["end"] = fx(e.end)
            return out

        return {
            "vertices": [fx(v) for v in self.vertices],
            "edges": [ej(e) for e in self.edges],
            "rays": [ej(e) for e in self.rays],
            "lines": [ej(e) for e in self.lines],
        }


def _primitive(v: tuple[int, int]) -> tuple[int, int]:
    g = gcd(abs(v[0]), abs(v[1]))
    return (v[0] // g, v[1] // g)


def _solve2(a11, a12, b1, a21, a22, b2):
    det = a11 * a22 - a12 * a21
    if det == 0:
        return None
    return (Fraction(b1 * a22 - a12 * b2, 1) / det, Fraction(a11 * b2 - b1 * a21, 1) / det)


def _check_support(f: LiftFunction) -> None:
    if len(f.values) < 2:
        raise DegenerateSupportError("support must contain at least two points")


def corner_locus(f: LiftFunction) -> TropicalCurveGraph:
    """The non-smooth locus of the Legendre transform as a weighted graph."""
    _check_support(f)
    A = f.support
    nu = f.values
    verts: dict[RPoint, tuple[Point, ...]] = {}
    for a, b, c in combinations(A, 3):
        if cross(a, b, c) == 0:
            continue
        x = _solve2(a[0] - b[0], a[1] - b[1], nu[a] - nu[b], a[0] - c[0], a[1] - c[1], nu[a] - nu[c])
        if x is None or x in verts:
            continue
        if legendre_value(f, x) == f.form(a, x):
            verts[x] = tuple(convex_hull(dominant(f, x)))
    g = TropicalCurveGraph()
    order = sorted(verts)
    g.vertices = order
    g.vertex_duals = [verts[v] for v in order]

    for a, b in combinations(A, 2):
        u = _primitive((a[1] - b[1], b[0] - a[0]))
        # base point on the tie line (a - b) . X = nu(a) - nu(b)
        di, dj = a[0] - b[0], a[1] - b[1]
        rhs = nu[a] - nu[b]
        x0 = (rhs / di, Fraction(0)) if di != 0 else (Fraction(0), rhs / dj)
        lo: Fraction | None = None
        hi: Fraction | None = None
        empty = False
        for c in A:
            if c == a or c == b:
                continue
            k = (c[0] - a[0]) * u[0] + (c[1] - a[1]) * u[1]
            slack = (nu[c] - nu[a]) - ((c[0] - a[0]) * x0[0] + (c[1] - a[1]) * x0[1])
            if k > 0:
                t = slack / k
                hi = t if hi is None else min(hi, t)
            elif k < 0:
                t = slack / k
                lo = t if lo is None else max(lo, t)
            elif slack < 0:
                empty = True
                break
        if empty or (lo is not None and hi is not None and lo >= hi):
            continue
        if lo is not None and hi is not None:
            ts = (lo + hi) / 2
        elif lo is not None:
            ts = lo + 1
        elif hi is not None:
            ts = hi - 1
        else:
            ts = Fraction(0)
        sample = (x0[0] + ts * u[0], x0[1] + ts * u[1])
        dom = dominant(f, sample)
        ends = {min(dom, key=lambda p: p[0] * di + p[1] * dj), max(dom, key=lambda p: p[0] * di + p[1] * dj)}
        if ends != {a, b}:
            continue
        w = lattice_length(a, b)

        def at(t):
            return (x0[0] + t * u[0], x0[1] + t * u[1])

        if lo is not None and hi is not None:
            g.edges.append(TropicalEdge(at(lo), at(hi), u, w, (a, b)))
        elif lo is not None:
            g.rays.append(TropicalEdge(at(lo), None, u, w, (a, b)))
        elif hi is not None:
            g.rays.append(TropicalEdge(at(hi), None, (-u[0], -u[1]), w, (a, b)))
        else:
            g.lines.append(TropicalEdge(x0, None, u, w, (a, b)))
    return g


def balancing_ok(curve: TropicalCurveGraph) -> bool:
    """Weighted primitive directions sum to zero at every vertex."""
    for v in curve.vertices:
        sx = sy = 0
        for e in curve.edges:
            if e.start == v:
                sx += e.weight * e.direction[0]
                sy += e.weight * e.direction[1]
            elif e.end == v:
                sx -= e.weight * e.direction[0]
                sy -= e.weight * e.direction[1]
        for r in curve.rays:
            if r.start == v:
                sx += r.weight * r.direction[0]
                sy += r.weight * r.direction[1]
        if sx or sy:
            return False
    return True


@dataclass(frozen=True)
class CellComplex:
    """Polyhedral subdivision of conv(A); in the collinear case the cells are segments."""

    support: tuple[Point, ...]
    cells: tuple[tuple[Point, ...], ...]

    def edge_cells(self) -> dict[tuple[Point, Point], list[int]]:
        out: dict[tuple[Point, Point], list[int]] = {}
        for k, c in enumerate(self.cells):
            if len(c) < 3:
                continue
            for s in range(len(c)):
                u, v = c[s], c[(s + 1) % len(c)]
                out.setdefault((min(u, v), max(u, v)), []).append(k)
        return out


def regular_subdivision(f: LiftFunction) -> CellComplex:
    """Projection of the lower faces of the convex hull of the lifted points."""
    _check_support(f)
    A = f.support
    nu = f.values
    if all(cross(A[0], A[1], c) == 0 for c in A[2:]) if len(A) > 2 else True:
        return CellComplex(tuple(A), tuple(_lower_chain(A, nu)))
    faces = set()
    for a, b, c in combinations(A, 3):
        if cross(a, b, c) == 0:
            continue
        # plane z = alpha*i + beta*j + gamma through the three lifted points
        s = _solve2(b[0] - a[0], b[1] - a[1], nu[b] - nu[a], c[0] - a[0], c[1] - a[1], nu[c] - nu[a])
        alpha, beta = s
        gamma = nu[a] - alpha * a[0] - beta * a[1]
        on = []
        below = False
        for p in A:
            z = alpha * p[0] + beta * p[1] + gamma
            if nu[p] < z:
                below = True
                break
            if nu[p] == z:
                on.append(p)
        if not below:
            faces.add(tuple(convex_hull(on)))
    return CellComplex(tuple(A), tuple(sorted(faces)))


def _lower_chain(A: list[Point], nu) -> list[tuple[Point, Point]]:
    base = A[0]
    dirv = (A[-1][0] - base[0], A[-1][1] - base[1])
    pts = sorted(A, key=lambda p: (p[0] - base[0]) * dirv[0] + (p[1] - base[1]) * dirv[1])
    t = [(p[0] - base[0]) * dirv[0] + (p[1] - base[1]) * dirv[1] for p in pts]
    hull: list[int] = []
    for k in range(len(pts)):
        while len(hull) >= 2:
            i0, i1 = hull[-2], hull[-1]
            # drop i1 if it lies on or above the chord from i0 to k
            if (nu[pts[i1]] - nu[pts[i0]]) * (t[k] - t[i0]) >= (nu[pts[k]] - nu[pts[i0]]) * (t[i1] - t[i0]):
                hull.pop()
            else:
                break
        hull.append(k)
    return [(pts[hull[s]], pts[hull[s + 1]]) for s in range(len(hull) - 1)]


def duality_check(curve: TropicalCurveGraph, cx: CellComplex) -> bool:
    """Vertices match cells, bounded edges match interior edges, rays match
    boundary edges, with orthogonal directions and matching weights."""
    if cx.cells and len(cx.cells[0]) == 2:
        if curve.vertices or curve.edges or curve.rays:
            return False
        segs = sorted(tuple(sorted(s)) for s in cx.cells)
        got = sorted(tuple(sorted(e.dual)) for e in curve.lines)
        if segs != got:
            return False
        return all(_orthogonal_weighted(e) for e in curve.lines)

    cell_index = {frozenset(c): k for k, c in enumerate(cx.cells)}
    if len(curve.vertices) != len(cx.cells):
        return False
    vcell: dict[RPoint, int] = {}
    for v, dual in zip(curve.vertices, curve.vertex_duals):
        k = cell_index.get(frozenset(dual))
        if k is None:
            return False
        vcell[v] = k
    if len(set(vcell.values())) != len(cx.cells):
        return False

    ec = cx.edge_cells()
    interior = {e: ks for e, ks in ec.items() if len(ks) == 2}
    boundary = {e: ks for e, ks in ec.items() if len(ks) == 1}
    if len(curve.edges) != len(interior) or len(curve.rays) != len(boundary) or curve.lines:
        return False
    seen = set()
    for e in curve.edges:
        key = (min(e.dual), max(e.dual))
        if key not in interior or key in seen or not _orthogonal_weighted(e):
            return False
        seen.add(key)
        if {vcell.get(e.start), vcell.get(e.end)} != set(interior[key]):
            return False
    for r in curve.rays:
        key = (min(r.dual), max(r.dual))
        if key not in boundary or key in seen or not _orthogonal_weighted(r):
            return False
        seen.add(key)
        k = boundary[key][0]
        if vcell.get(r.start) != k:
            return False
        a = r.dual[0]
        third = next(p for p in cx.cells[k] if p not in r.dual)
        if (third[0] - a[0]) * r.direction[0] + (third[1] - a[1]) * r.direction[1] >= 0:
            return False
    return True


def _orthogonal_weighted(e: TropicalEdge) -> bool:
    a, b = e.dual
    if (b[0] - a[0]) * e.direction[0] + (b[1] - a[1]) * e.direction[1] != 0:
        return False
    if gcd(abs(e.direction[0]), abs(e.direction[1])) != 1:
        return False
    return e.weight == lattice_length(a, b)
