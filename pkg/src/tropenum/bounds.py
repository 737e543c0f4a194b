"""Lower bounds for the signed real count and the canonical lambda0 paths."""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial

from .compression import polygon_context
from .engine import CountRequest, _PathWorker
from .errors import HypothesesViolatedError
from .order import LAMBDA0
from .paths import LatticePath, is_admissible, iter_path_tuples
from .surfaces import SurfaceSpec, cremona_normalize, newton_polygon, r_of


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


@dataclass(frozen=True)
class RhoBound:
    spec: SurfaceSpec
    rho: int


def rho(spec: SurfaceSpec) -> int:
    """Guaranteed number of real rational curves, rounded up to an integer."""
    kind, deg = spec.kind, spec.degrees
    if kind == "P2":
        (d,) = deg
        if d < 1:
            raise HypothesesViolatedError("need d >= 1")
        return _ceil_div(factorial(d), 2)
    if kind == "Quadric":
        d1, d2 = deg
        if min(d1, d2) < 1:
            raise HypothesesViolatedError("need d1, d2 >= 1")
        return max(d1, d2)
    if kind == "P1blow":
        d, d1 = deg
        if not d > d1 > 0:
            raise HypothesesViolatedError("need d > d1 > 0")
        return _ceil_div(factorial(d), 2 * factorial(d1))
    if kind == "P2blow":
        d, d1, d2 = deg
        if not (d1 + d2 < d and d1 >= d2 > 0):
            raise HypothesesViolatedError("need d1 + d2 < d and d1 >= d2 > 0")
        return _ceil_div(factorial(d - d2), factorial(d1))
    d, d1, d2, d3 = deg
    if not d1 >= d2 >= d3 > 0:
        raise HypothesesViolatedError("need d1 >= d2 >= d3 > 0")
    if d - d2 - d3 < 0:
        raise HypothesesViolatedError("need d >= d2 + d3")
    if d1 + d2 + d3 <= d:
        return _ceil_div(factorial(d - d2 - d3), factorial(d1))
    return _ceil_div(factorial(d1), factorial(d - d2 - d3))


def canonical_path(spec: SurfaceSpec) -> LatticePath:
    """Left column down, a two-row staircase, then the right column down.

    The plane and three-point blow-up lists are the published ones; the
    quadric, P1blow and P2blow lists follow the same pattern (P1blow and
    P2blow are the three-point list with the missing multiplicities set to 0;
    the quadric uses its full left and right columns).
    """
    if spec.kind == "P3blow":
        spec = cremona_normalize(spec)
    kind, deg = spec.kind, spec.degrees
    pts: list[tuple[int, int]] = []
    if kind == "P2":
        (d,) = deg
        pts += [(0, d - j) for j in range(d + 1)]
        for i in range(1, d):
            pts += [(i, 1), (i, 0)]
        pts.append((d, 0))
    elif kind == "Quadric":
        d1, d2 = deg
        pts += [(0, d2 - j) for j in range(d2 + 1)]
        for i in range(1, d1):
            pts += [(i, 1), (i, 0)]
        pts += [(d1, d2 - j) for j in range(d2 + 1)]
    else:
        d, *ms = deg
        d1, d2, d3 = (ms + [0, 0])[:3]
        pts += [(0, d - d2 - j) for j in range(d - d2 - d3 + 1)]
        for i in range(1, d3 + 1):
            pts += [(i, d3 - i + 1), (i, d3 - i)]
        for i in range(d3 + 1, d - d1):
            pts += [(i, 1), (i, 0)]
        pts += [(d - d1, d1 - j) for j in range(d1 + 1)]
    path = LatticePath(tuple(pts))
    poly = newton_polygon(spec)
    if path.length != r_of(spec) or not is_admissible(path, poly, LAMBDA0):
        raise HypothesesViolatedError(f"no canonical path for {spec}")
    return path


def canonical_contribution(spec: SurfaceSpec) -> tuple[int, int]:
    """(odd positive, odd negative) irreducible nodal subdivisions from the canonical path."""
    if spec.kind == "P3blow":
        spec = cremona_normalize(spec)
    path = canonical_path(spec)
    poly = newton_polygon(spec)
    w = _PathWorker(polygon_context(poly, LAMBDA0), path.length)
    rep, _ = w.run(path.points)
    return rep.positives, rep.negatives


@dataclass
class PositivityAudit:
    negatives: int = 0
    triangles_with_interior: int = 0
    wide_edges: int = 0
    subdivisions: int = 0

    @property
    def ok(self) -> bool:
        return self.negatives == 0 and self.triangles_with_interior == 0 and self.wide_edges == 0


def lambda0_positivity_audit(spec: SurfaceSpec, g: int = 0, detail: bool = False) -> bool | PositivityAudit:
    """No negative odd irreducible subdivision over all lambda0 paths, and no
    triangle with interior lattice points in any generated nodal subdivision."""
    from . import classify as cl

    req = CountRequest(spec, g, LAMBDA0, ack_noninvariant=True)
    poly = req.ambient()
    n = r_of(req.effective_spec()) + g
    w = _PathWorker(polygon_context(poly, LAMBDA0), n)
    audit = PositivityAudit()
    for path in iter_path_tuples(poly, LAMBDA0, n):
        rep, recs = w.run(path, records=True)
        audit.negatives += rep.negatives
        for rec in recs:
            audit.subdivisions += 1
            if cl.triangle_interior_total(rec.cells) != 0:
                audit.triangles_with_interior += 1
            if cl.max_horizontal_width(rec.cells) > 1:
                audit.wide_edges += 1
    return audit if detail else audit.ok
