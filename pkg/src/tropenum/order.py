"""Generic linear orders on lattice points.

A ``LambdaOrder`` compares points by ``primary . p`` and breaks ties with
``tiebreak . p``.  That is the order of ``primary + eps * tiebreak`` for all
small enough ``eps > 0``, so ``i - eps*j`` is ``LambdaOrder((1, 0), (0, -1))``.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass

from .errors import NotInjectiveError, OrderValidationError, WrongExtremesError
from .lattice import LatticePolygon, Point


@dataclass(frozen=True)
class LambdaOrder:
    primary: tuple[int, int]
    tiebreak: tuple[int, int] = (0, 0)

    def __post_init__(self):
        object.__setattr__(self, "primary", tuple(int(x) for x in self.primary))
        object.__setattr__(self, "tiebreak", tuple(int(x) for x in self.tiebreak))
        if self.primary == (0, 0):
            raise OrderValidationError("primary form must be nonzero")

    def key(self, p: Point) -> tuple[int, int]:
        a, b = self.primary
        c, d = self.tiebreak
        return (a * p[0] + b * p[1], c * p[0] + d * p[1])

    def __str__(self) -> str:
        return "{},{};{},{}".format(*self.primary, *self.tiebreak)


LAMBDA0 = LambdaOrder((1, 0), (0, -1))


def compare(o: LambdaOrder, p: Point, q: Point) -> str:
    kp, kq = o.key(p), o.key(q)
    if kp < kq:
        return "less"
    if kp > kq:
        return "greater"
    return "equal"


def parse_lambda(text: str) -> LambdaOrder:
    """Parse ``a,b`` or ``a,b;c,d``."""
    m = re.fullmatch(r"\s*(-?\d+)\s*,\s*(-?\d+)\s*(?:;\s*(-?\d+)\s*,\s*(-?\d+)\s*)?", text)
    if not m:
        raise OrderValidationError(f"cannot parse lambda {text!r}")
    a, b, c, d = m.groups()
    tie = (int(c), int(d)) if c is not None else (0, 0)
    return LambdaOrder((int(a), int(b)), tie)


def endpoints(poly: LatticePolygon) -> tuple[Point, Point]:
    """p: highest lattice point on the vertical axis; q: rightmost on the horizontal axis."""
    pts = poly.lattice_points()
    on_y = [pt for pt in pts if pt[0] == 0]
    on_x = [pt for pt in pts if pt[1] == 0]
    if not on_y or not on_x:
        raise WrongExtremesError("polygon does not meet both coordinate axes")
    return max(on_y, key=lambda t: t[1]), max(on_x, key=lambda t: t[0])


def sorted_points(o: LambdaOrder, poly: LatticePolygon) -> list[Point]:
    return sorted(poly.lattice_points(), key=o.key)


def validate_for_polygon(o: LambdaOrder, poly: LatticePolygon) -> tuple[Point, Point]:
    """Check injectivity and extremes; returns ``(p, q)`` on success."""
    pts = sorted_points(o, poly)
    for a, b in zip(pts, pts[1:]):
        if o.key(a) == o.key(b):
            raise NotInjectiveError(f"{a} and {b} tie under lambda {o}")
    p, q = endpoints(poly)
    if pts[0] != p or pts[-1] != q:
        raise WrongExtremesError(f"lambda {o} has min {pts[0]} and max {pts[-1]}, expected {p} and {q}")
    return p, q


def random_orders(poly: LatticePolygon, count: int, seed: int = 0, bound: int = 7) -> list[LambdaOrder]:
    """Distinct validated orders other than lambda0, reproducible from ``seed``."""
    rng = random.Random(seed)
    found: list[LambdaOrder] = []
    seen = {LAMBDA0}
    attempts = 0
    while len(found) < count:
        attempts += 1
        if attempts > 10000:
            raise OrderValidationError("could not find enough valid orders")
        a, b = rng.randint(-bound, bound), rng.randint(-bound, bound)
        c, d = rng.randint(-bound, bound), rng.randint(-bound, bound)
        if (a, b) == (0, 0) or a * d - b * c == 0:
            continue
        o = LambdaOrder((a, b), (c, d))
        if o in seen:
            continue
        try:
            validate_for_polygon(o, poly)
        except OrderValidationError:
            continue
        seen.add(o)
        found.append(o)
    return found
