"""Named check suites run by ``tropenum verify``."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Callable

from . import bounds, oracles
from .cache import ReportCache
from .engine import KINDS, CountRequest, count, report_json
from .order import LAMBDA0, LambdaOrder
from .surfaces import format_spec, parse_spec
from .tropical import LiftFunction, balancing_ok, corner_locus, duality_check, regular_subdivision

ALT_ORDERS = (LambdaOrder((2, -1), (0, -1)), LambdaOrder((1, -2), (1, 0)), LambdaOrder((3, -2), (-1, -1)))


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str


class Runner:
    """Counts through an optional report cache, keyed like the CLI's."""

    def __init__(self, cache: ReportCache | None = None, workers: int = 1):
        self.cache = cache
        self.workers = workers
        self._memo: dict = {}

    def report(self, spec: str, genus: int = 0, order: LambdaOrder = LAMBDA0, cremona: bool = True) -> dict:
        req = CountRequest(parse_spec(spec), genus, order, KINDS, ack_noninvariant=True, cremona=cremona)
        key = request_key(req)
        mk = str(sorted(key.items()))
        if mk in self._memo:
            return self._memo[mk]
        rep = self.cache.load(key) if self.cache else None
        if rep is None:
            rep = report_json(req, count(req, self.workers))
            if self.cache:
                self.cache.store(key, rep)
        self._memo[mk] = rep
        return rep

    def counts(self, spec: str, genus: int = 0, order: LambdaOrder = LAMBDA0, cremona: bool = True) -> dict:
        return self.report(spec, genus, order, cremona)["counts"]


def request_key(req: CountRequest) -> dict:
    return {
        "spec": format_spec(req.spec) if req.spec is not None else None,
        "genus": req.genus,
        "lambda": str(req.order),
        "kinds": sorted(req.kinds),
        "cremona": req.cremona,
    }


def _eq(name: str, got, want) -> CheckResult:
    return CheckResult(name, got == want, f"got {got}, expected {want}")


def _checks_small(r: Runner) -> list[Callable[[], CheckResult]]:
    def line():
        c = r.counts("p2:1")
        return _eq("p2:1 counts", tuple(c[k] for k in KINDS), (1, 1, 1))

    def cubics():
        return _eq("p2:3 complex irreducible", r.counts("p2:3")["complex_irreducible"], oracles.kontsevich_N(3))

    def conic():
        return _eq("p2:2 complex irreducible", r.counts("p2:2")["complex_irreducible"], oracles.kontsevich_N(2))

    def max_genus():
        return _eq("p2:3 genus 1 complex total", r.counts("p2:3", 1)["complex_total"], 1)

    def sandwich():
        return CheckResult("sandwich d=3", oracles.sandwich_check(3, r.counts("p2:3")["complex_irreducible"]), "")

    def parity():
        bad = []
        for s in ("p2:1", "p2:2", "p2:3", "quadric:2,2"):
            c = r.counts(s)
            if (c["welschinger"] - c["complex_irreducible"]) % 2 or abs(c["welschinger"]) > c["complex_irreducible"]:
                bad.append(s)
        return CheckResult("parity and domination", not bad, f"failing: {bad}")

    def invariance():
        bad = []
        for s in ("p2:3", "quadric:2,2"):
            base = r.counts(s)
            for o in ALT_ORDERS[:2]:
                if r.counts(s, 0, o) != base:
                    bad.append((s, str(o)))
        return CheckResult("lambda invariance", not bad, f"failing: {bad}")

    def cremona():
        raw = r.counts("p3b:4;2,2,1", cremona=False)
        norm = r.counts("p3b:4;2,2,1", cremona=True)
        return _eq("Cremona invariance p3b:4;2,2,1", raw, norm)

    def positivity():
        bad = [s for s in ("p2:3", "quadric:2,2") if not bounds.lambda0_positivity_audit(parse_spec(s))]
        return CheckResult("lambda0 positivity", not bad, f"failing: {bad}")

    def rho_bounds():
        bad = []
        for s in ("p2:1", "p2:2", "p2:3", "quadric:2,2"):
            sp = parse_spec(s)
            if r.counts(s)["welschinger"] < bounds.rho(sp):
                bad.append(s)
        return CheckResult("welschinger >= rho", not bad, f"failing: {bad}")

    return [line, conic, cubics, max_genus, sandwich, parity, invariance, cremona, positivity, rho_bounds]


def _checks_desk(r: Runner) -> list[Callable[[], CheckResult]]:
    def kontsevich():
        bad = [d for d in range(1, 6) if r.counts(f"p2:{d}")["complex_irreducible"] != oracles.kontsevich_N(d)]
        return CheckResult("complex irreducible = Kontsevich, d<=5", not bad, f"failing degrees: {bad}")

    def w4():
        return _eq("W_4", r.counts("p2:4")["welschinger"], 240)

    def w5():
        return _eq("W_5", r.counts("p2:5")["welschinger"], 18264)

    def quartics_total():
        return _eq("p2:4 complex total", r.counts("p2:4")["complex_total"], oracles.kontsevich_N(4) + oracles.reducible_rational_quartics())

    def one_node():
        return _eq("p2:4 genus 2 complex total", r.counts("p2:4", 2)["complex_total"], oracles.one_node_count(4))

    def factorial_bound():
        bad = []
        for d in range(1, 6):
            pos, neg = bounds.canonical_contribution(parse_spec(f"p2:{d}"))
            if 2 * r.counts(f"p2:{d}")["welschinger"] < factorial(d) or neg or 2 * pos < factorial(d):
                bad.append(d)
        return CheckResult("2 W_d >= d! for d<=5", not bad, f"failing degrees: {bad}")

    def sandwich():
        bad = [d for d in (3, 4, 5) if not oracles.sandwich_check(d, r.counts(f"p2:{d}")["complex_irreducible"])]
        return CheckResult("sandwich d=3..5", not bad, f"failing: {bad}")

    def invariance():
        bad = []
        for s in ("p2:3", "p2:4", "quadric:2,2", "p3b:4;1,1,1"):
            base = r.report(s)
            for o in ALT_ORDERS:
                rep = r.report(s, 0, o)
                dg = rep["diagnostics"]
                if rep["counts"] != base["counts"] or dg["rank_violations"] or dg["face_to_face_rejections"]:
                    bad.append((s, str(o)))
        return CheckResult("lambda invariance suite", not bad, f"failing: {bad}")

    def positivity():
        specs = ("p2:3", "p2:4", "quadric:2,2", "p3b:4;1,1,1", "p2:5")
        bad = [s for s in specs if not bounds.lambda0_positivity_audit(parse_spec(s))]
        return CheckResult("lambda0 positivity audit", not bad, f"failing: {bad}")

    def rho_surfaces():
        cases = {"quadric:2,2": 2, "quadric:3,2": 3, "p1:3;1": 3, "p3b:4;1,1,1": 2, "p3b:5;2,2,2": 2}
        bad = [s for s, lo in cases.items() if r.counts(s)["welschinger"] < lo or bounds.rho(parse_spec(s)) != lo]
        return CheckResult("welschinger >= rho on blowups and quadrics", not bad, f"failing: {bad}")

    def parity():
        bad = []
        for s in ("p2:1", "p2:2", "p2:3", "p2:4", "p2:5", "quadric:2,2", "quadric:3,2", "p1:3;1", "p3b:4;1,1,1", "p3b:5;2,2,2"):
            c = r.counts(s)
            if (c["welschinger"] - c["complex_irreducible"]) % 2 or abs(c["welschinger"]) > c["complex_irreducible"]:
                bad.append(s)
        return CheckResult("parity and domination", not bad, f"failing: {bad}")

    def tropical():
        ok, bad = tropical_suite(100, seed=2024)
        return CheckResult("tropical duality suite", ok, f"{bad} failures")

    return [kontsevich, w4, w5, quartics_total, one_node, factorial_bound, sandwich, invariance, positivity, rho_surfaces, parity, tropical]


def random_lift(rng: random.Random, max_points: int = 12, box: int = 4, max_den: int = 16) -> LiftFunction:
    n = rng.randint(2, max_points)
    pts: set = set()
    while len(pts) < n:
        pts.add((rng.randint(0, box), rng.randint(0, box)))
    return LiftFunction({p: Fraction(rng.randint(-4 * max_den, 4 * max_den), rng.randint(1, max_den)) for p in sorted(pts)})


def tropical_suite(trials: int, seed: int = 0) -> tuple[bool, int]:
    rng = random.Random(seed)
    bad = 0
    for _ in range(trials):
        f = random_lift(rng)
        g = corner_locus(f)
        if not (balancing_ok(g) and duality_check(g, regular_subdivision(f))):
            bad += 1
    line = corner_locus(LiftFunction({(0, 0): 0, (1, 0): 0, (0, 1): 0}))
    line_ok = (
        len(line.vertices) == 1
        and not line.edges
        and sorted(r.direction for r in line.rays) == [(-1, 0), (0, -1), (1, 1)]
        and all(r.weight == 1 for r in line.rays)
    )
    return bad == 0 and line_ok, bad + (0 if line_ok else 1)


PRESETS = {"desk-small": _checks_small, "desk": lambda r: _checks_small(r) + _checks_desk(r)}


def run_preset(name: str, runner: Runner) -> list[CheckResult]:
    if name not in PRESETS:
        raise KeyError(f"unknown preset {name!r}; choose from {sorted(PRESETS)}")
    return [check() for check in PRESETS[name](runner)]
