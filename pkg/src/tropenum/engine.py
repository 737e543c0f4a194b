"""Counting pipeline: paths -> compressions -> nodal subdivisions -> exact totals."""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from typing import Callable, Iterator

from . import classify as cl
from .compression import PolygonContext, SearchStats, polygon_context, search
from .errors import GenusOutOfRangeError, WelschingerNonInvariantError
from .lattice import LatticePolygon, Point, boundary_count, interior_count, normalized_area
from .order import LAMBDA0, LambdaOrder
from .paths import iter_path_tuples
from .surfaces import SurfaceSpec, cremona_normalize, format_spec, newton_polygon

KINDS = ("complex_total", "complex_irreducible", "welschinger")


@dataclass(frozen=True)
class CountRequest:
    spec: SurfaceSpec | None
    genus: int = 0
    order: LambdaOrder = LAMBDA0
    kinds: tuple[str, ...] = KINDS
    ack_noninvariant: bool = False
    cremona: bool = True
    polygon: LatticePolygon | None = None

    def __post_init__(self):
        bad = set(self.kinds) - set(KINDS)
        if bad:
            raise ValueError(f"unknown count kinds {sorted(bad)}")
        if self.spec is None and self.polygon is None:
            raise ValueError("a surface spec or a polygon is required")

    def effective_spec(self) -> SurfaceSpec | None:
        s = self.spec
        if s is not None and self.cremona and s.kind == "P3blow":
            return cremona_normalize(s)
        return s

    def ambient(self) -> LatticePolygon:
        if self.polygon is not None:
            return self.polygon
        return newton_polygon(self.effective_spec())


@dataclass
class Diagnostics:
    paths_enumerated: int = 0
    dead_ends: int = 0
    rank_violations: int = 0
    dedup_collisions: int = 0
    face_to_face_rejections: int = 0
    non_nodal: int = 0
    nodal_subdivisions: int = 0

    def add(self, o: "Diagnostics") -> None:
        for k in self.__dataclass_fields__:
            setattr(self, k, getattr(self, k) + getattr(o, k))

    def to_json(self) -> dict:
        return {k: getattr(self, k) for k in self.__dataclass_fields__}


@dataclass
class CountReport:
    complex_total: int = 0
    complex_irreducible: int = 0
    welschinger: int = 0
    positives: int = 0
    negatives: int = 0
    diagnostics: Diagnostics = field(default_factory=Diagnostics)

    def add(self, o: "CountReport") -> None:
        self.complex_total += o.complex_total
        self.complex_irreducible += o.complex_irreducible
        self.welschinger += o.welschinger
        self.positives += o.positives
        self.negatives += o.negatives
        self.diagnostics.add(o.diagnostics)


@dataclass(frozen=True)
class Contribution:
    path: tuple[Point, ...]
    cells: tuple[tuple[Point, ...], ...]
    multiplicity: int
    odd: bool
    sign: int
    irreducible: bool
    genus: int

    def to_json(self) -> dict:
        cells = sorted(self.cells, key=lambda c: (len(c), sorted(c)))
        return {
            "path": [list(p) for p in self.path],
            "cells": [{"kind": "triangle" if len(c) == 3 else "parallelogram", "vertices": [list(v) for v in c]} for c in cells],
            "multiplicity": self.multiplicity,
            "odd": self.odd,
            "sign": self.sign,
            "irreducible": self.irreducible,
            "genus": self.genus,
        }


def _check(req: CountRequest, poly: LatticePolygon) -> int:
    delta = interior_count(poly)
    if not 0 <= req.genus <= delta:
        raise GenusOutOfRangeError(f"genus {req.genus} outside [0, {delta}]")
    if req.genus != 0 and "welschinger" in req.kinds and not req.ack_noninvariant:
        raise WelschingerNonInvariantError(
            "the signed real count is not invariant for genus >= 1; pass the acknowledgement flag to compute it anyway"
        )
    return boundary_count(poly) - 1 + req.genus


class _PathWorker:
    """Processes single paths against a fixed polygon context."""

    def __init__(self, ctx: PolygonContext, n: int):
        self.ctx = ctx
        self.n = n
        self.area = normalized_area(ctx.poly)
        self.boundary = tuple(sorted(ctx.boundary))
        self.edges = ctx.poly.edges()

    def _on_boundary(self, u: Point, v: Point) -> bool:
        for a, b in self.edges:
            if ((b[0] - a[0]) * (u[1] - a[1]) - (b[1] - a[1]) * (u[0] - a[0]) == 0
                    and (b[0] - a[0]) * (v[1] - a[1]) - (b[1] - a[1]) * (v[0] - a[0]) == 0):
                return True
        return False

    def run(self, path: tuple[Point, ...], records: bool = False):
        rep = CountReport()
        diag = rep.diagnostics
        diag.paths_enumerated = 1
        stats = SearchStats()
        plus = search(path, 1, self.ctx, stats)
        minus = search(path, -1, self.ctx, stats) if plus else []
        diag.dead_ends = stats.dead_ends
        diag.dedup_collisions = stats.collisions
        out: list[Contribution] = []
        r = len(self.boundary) - 1
        for sp in plus:
            for sm in minus:
                cells = sp + sm
                verts = {v for c in cells for v in c}
                if any(b not in verts for b in self.boundary):
                    diag.non_nodal += 1
                    continue
                if not self._face_to_face(cells, verts):
                    diag.face_to_face_rejections += 1
                    continue
                npar = sum(1 for c in cells if len(c) == 4)
                rk = len(verts) - npar - 1
                if rk != self.n:
                    diag.rank_violations += 1
                    continue
                diag.nodal_subdivisions += 1
                mu = cl.multiplicity(cells)
                irreducible = cl.is_irreducible(cells)
                odd = cl.is_odd(cells)
                sgn = cl.sign(cells)
                rep.complex_total += mu
                if irreducible:
                    rep.complex_irreducible += mu
                    if odd:
                        rep.welschinger += sgn
                        if sgn > 0:
                            rep.positives += 1
                        else:
                            rep.negatives += 1
                if records:
                    out.append(Contribution(path, cells, mu, odd, sgn, irreducible, rk - r))
        if records:
            out.sort(key=lambda r: sorted((len(c), sorted(c)) for c in r.cells))
        return rep, out

    def _face_to_face(self, cells, verts) -> bool:
        uses: dict = {}
        area = 0
        for c in cells:
            n = len(c)
            (x0, y0), (x1, y1), (x2, y2) = c[0], c[1], c[2]
            a = abs((x1 - x0) * (y2 - y0) - (y1 - y0) * (x2 - x0))
            area += a if n == 3 else 2 * a
            for k in range(n):
                u, v = c[k], c[(k + 1) % n]
                e = (u, v) if u <= v else (v, u)
                uses[e] = uses.get(e, 0) + 1
        if area != self.area:
            return False
        for (u, v), k in uses.items():
            di, dj = v[0] - u[0], v[1] - u[1]
            if abs(di) > 1 or abs(dj) > 1:
                g = cl.gcd(abs(di), abs(dj))
                if g > 1:
                    si, sj = di // g, dj // g
                    for s in range(1, g):
                        if (u[0] + s * si, u[1] + s * sj) in verts:
                            return False
            if k == 2:
                continue
            if k != 1 or not self._on_boundary(u, v):
                return False
        return True


def _worker_batch(args):
    ctx, n, batch, records = args
    w = _PathWorker(ctx, n)
    total = CountReport()
    recs: list[Contribution] = []
    for path in batch:
        rep, out = w.run(path, records)
        total.add(rep)
        recs.extend(out)
    return total, recs


def _batches(it: Iterator, size: int):
    batch = []
    for x in it:
        batch.append(x)
        if len(batch) >= size:
            yield batch
            batch = []
    if batch:
        yield batch


def _run(req: CountRequest, workers: int | None, records: bool):
    poly = req.ambient()
    n = _check(req, poly)
    ctx = polygon_context(poly, req.order)
    paths = iter_path_tuples(poly, req.order, n)
    workers = workers or 1
    if workers <= 1:
        w = _PathWorker(ctx, n)
        for path in paths:
            yield w.run(path, records)
        return
    import multiprocessing as mp

    jobs = ((ctx, n, batch, records) for batch in _batches(paths, 64))
    with mp.get_context("fork" if os.name == "posix" else "spawn").Pool(workers) as pool:
        # imap keeps submission order, so the reduction is deterministic.
        for res in pool.imap(_worker_batch, jobs, chunksize=1):
            yield res


def count(req: CountRequest, workers: int | None = 1, emit: Callable[[Contribution], None] | None = None) -> CountReport:
    """Exact complex and signed real counts for the request.

    ``emit``, when given, receives every contribution record in
    deterministic order.
    """
    total = CountReport()
    for rep, recs in _run(req, workers, records=emit is not None):
        total.add(rep)
        if emit is not None:
            for rec in recs:
                emit(rec)
    return total


def enumerate_contributions(req: CountRequest, workers: int | None = 1) -> Iterator[Contribution]:
    """Every nodal subdivision with its data, in path order then canonical order."""
    for _, recs in _run(req, workers, records=True):
        yield from recs


def report_json(req: CountRequest, rep: CountReport) -> dict:
    spec = req.spec
    return {
        "spec": format_spec(spec) if spec is not None else None,
        "effective_spec": format_spec(req.effective_spec()) if spec is not None else None,
        "genus": req.genus,
        "lambda": str(req.order),
        "counts": {k: getattr(rep, k) for k in KINDS if k in req.kinds},
        "configuration_dependent": req.genus != 0 and "welschinger" in req.kinds,
        "diagnostics": rep.diagnostics.to_json(),
    }


def invariance_audit(spec: SurfaceSpec, genus: int, orders: list[LambdaOrder], kinds: tuple[str, ...] = KINDS,
                     ack_noninvariant: bool = False) -> bool:
    """True iff every requested count agrees across all orders."""
    if len(orders) < 2:
        raise ValueError("need at least two orders")
    seen = None
    for o in orders:
        rep = count(CountRequest(spec, genus, o, kinds, ack_noninvariant))
        vals = tuple(getattr(rep, k) for k in kinds)
        if seen is None:
            seen = vals
        elif vals != seen:
            return False
    return True
