"""Toric Del Pezzo surfaces and the Newton polygons of their divisor classes."""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import InvalidDivisorError
from .lattice import LatticePolygon, boundary_count, interior_count

KINDS = ("P2", "Quadric", "P1blow", "P2blow", "P3blow")

_PREFIX = {"p2": "P2", "quadric": "Quadric", "p1": "P1blow", "p2b": "P2blow", "p3b": "P3blow"}
_ARITY = {"P2": (1, 0), "Quadric": (2, None), "P1blow": (1, 1), "P2blow": (1, 2), "P3blow": (1, 3)}


@dataclass(frozen=True)
class SurfaceSpec:
    """A surface together with the degrees of a divisor class on it.

    ``degrees`` is ``(d,)`` for P2, ``(d1, d2)`` for the quadric and
    ``(d, d1[, d2[, d3]])`` for the blow-ups of the plane.
    """

    kind: str
    degrees: tuple[int, ...]

    def __post_init__(self):
        if self.kind not in KINDS:
            raise InvalidDivisorError(f"unknown surface kind {self.kind!r}")
        object.__setattr__(self, "degrees", tuple(int(x) for x in self.degrees))
        expected = {"P2": 1, "Quadric": 2, "P1blow": 2, "P2blow": 3, "P3blow": 4}[self.kind]
        if len(self.degrees) != expected:
            raise InvalidDivisorError(f"{self.kind} takes {expected} degrees, got {self.degrees}")
        if any(x < 0 for x in self.degrees):
            raise InvalidDivisorError(f"negative degree in {self.degrees}")
        if self.kind == "P2" and self.degrees[0] < 1:
            raise InvalidDivisorError("P2 needs d >= 1")
        if self.kind == "Quadric" and min(self.degrees) < 1:
            raise InvalidDivisorError("quadric bidegree entries must be >= 1")

    @property
    def d(self) -> int:
        return self.degrees[0]

    def __str__(self) -> str:
        return format_spec(self)


def parse_spec(text: str) -> SurfaceSpec:
    """Parse ``p2:d``, ``quadric:d1,d2``, ``p1:d;d1``, ``p2b:d;d1,d2`` or ``p3b:d;d1,d2,d3``."""
    m = re.fullmatch(r"\s*([A-Za-z0-9]+)\s*:\s*([0-9,;\s]+)", text)
    if not m or m.group(1).lower() not in _PREFIX:
        raise InvalidDivisorError(f"cannot parse surface spec {text!r}")
    kind = _PREFIX[m.group(1).lower()]
    body = m.group(2).replace(" ", "")
    if kind in ("P2", "Quadric"):
        if ";" in body:
            raise InvalidDivisorError(f"unexpected ';' in {text!r}")
        nums = [int(x) for x in body.split(",")]
    else:
        head, _, tail = body.partition(";")
        if not tail or "," in head:
            raise InvalidDivisorError(f"expected 'd;d1,...' in {text!r}")
        nums = [int(head)] + [int(x) for x in tail.split(",")]
    return SurfaceSpec(kind, tuple(nums))


def format_spec(s: SurfaceSpec) -> str:
    rev = {v: k for k, v in _PREFIX.items()}
    prefix = rev[s.kind]
    if s.kind in ("P2", "Quadric"):
        return f"{prefix}:" + ",".join(map(str, s.degrees))
    return f"{prefix}:{s.degrees[0]};" + ",".join(map(str, s.degrees[1:]))


def _vertex_list(s: SurfaceSpec) -> list[tuple[int, int]]:
    if s.kind == "P2":
        (d,) = s.degrees
        return [(0, 0), (d, 0), (0, d)]
    if s.kind == "Quadric":
        d1, d2 = s.degrees
        return [(0, 0), (d1, 0), (d1, d2), (0, d2)]
    if s.kind == "P1blow":
        d, d1 = s.degrees
        return [(0, 0), (d - d1, 0), (d - d1, d1), (0, d)]
    if s.kind == "P2blow":
        d, d1, d2 = s.degrees
        return [(0, 0), (d - d1, 0), (d - d1, d1), (d2, d - d2), (0, d - d2)]
    d, d1, d2, d3 = s.degrees
    return [(d3, 0), (d - d1, 0), (d - d1, d1), (d2, d - d2), (0, d - d2), (0, d3)]


def _edge_lengths_ok(s: SurfaceSpec) -> bool:
    d, *rest = s.degrees
    if s.kind == "P2":
        return d >= 1
    if s.kind == "Quadric":
        return True
    d1, d2, d3 = (rest + [0, 0, 0])[:3]
    return d - d1 >= 0 and d - d1 - d2 >= 0 and d - d2 - d3 >= 0 and d - d1 - d3 >= 0 and d - d2 > 0


def newton_polygon(s: SurfaceSpec) -> LatticePolygon:
    """The Newton polygon of the linear system, with coincident vertices merged."""
    if not _edge_lengths_ok(s):
        raise InvalidDivisorError(f"divisor {format_spec(s)} gives a negative edge length")
    try:
        return LatticePolygon(tuple(_vertex_list(s)))
    except ValueError as exc:
        raise InvalidDivisorError(f"divisor {format_spec(s)}: {exc}") from None


def anticanonical_degree(s: SurfaceSpec) -> int:
    """c1(surface) . D from the divisor class alone."""
    if s.kind == "Quadric":
        d1, d2 = s.degrees
        return 2 * d1 + 2 * d2
    d, *rest = s.degrees
    return 3 * d - sum(rest)


def r_of(s: SurfaceSpec) -> int:
    """Boundary lattice points of the Newton polygon minus one."""
    r = boundary_count(newton_polygon(s)) - 1
    assert r == anticanonical_degree(s) - 1, (s, r)
    return r


def delta_of(s: SurfaceSpec) -> int:
    """Interior lattice points of the Newton polygon (arithmetic genus)."""
    return interior_count(newton_polygon(s))


def cremona_normalize(s: SurfaceSpec) -> SurfaceSpec:
    """Apply the quadratic transformation when d1 + d2 + d3 > d.

    Returns the spec unchanged (with multiplicities sorted descending) when
    d1 + d2 + d3 <= d already.
    """
    if s.kind != "P3blow":
        raise InvalidDivisorError("Cremona normalization applies to P3blow only")
    d, d1, d2, d3 = s.degrees
    if d1 + d2 + d3 <= d:
        return SurfaceSpec("P3blow", (d, *sorted((d1, d2, d3), reverse=True)))
    dp = 2 * d - d1 - d2 - d3
    new = (d - d2 - d3, d - d1 - d3, d - d1 - d2)
    if dp <= 0 or min(new) < 0:
        raise InvalidDivisorError(f"Cremona image of {format_spec(s)} is not effective: d'={dp}, d'_i={new}")
    return SurfaceSpec("P3blow", (dp, *sorted(new, reverse=True)))
