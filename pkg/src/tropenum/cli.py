"""Command line front end.

    tropenum count --spec p2:4 --kinds welschinger
    tropenum paths --spec p2:3 --list
    tropenum subdivisions --spec p2:2 --path '[[0,2],[0,1],[0,0],[1,1],[1,0],[2,0]]'
    tropenum tropical --support '[[0,0],[1,0],[0,1]]' --lift '[0,0,0]' --svg line.svg
    tropenum bound --spec p2:4 --check
    tropenum verify --preset desk-small
    tropenum emit-svg --contributions p2_3.jsonl --spec p2:3 --out figs/
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from . import bounds, oracles
from .cache import ReportCache
from .classify import Subdivision, classify, subdivision_to_json
from .compression import SearchStats, polygon_context, search
from .engine import KINDS, CountRequest, count, report_json
from .errors import TropenumError, WelschingerNonInvariantError
from .lattice import boundary_count
from .order import LAMBDA0, parse_lambda, validate_for_polygon
from .paths import count_paths, is_admissible, iter_path_tuples
from .surfaces import format_spec, newton_polygon, parse_spec
from .verification import Runner, request_key, run_preset

log = logging.getLogger("tropenum")

EXIT_FAIL = 1
EXIT_INVALID = 2
EXIT_NONINVARIANT = 3


@dataclass(frozen=True)
class RunConfig:
    command: str
    spec: str | None = None
    genus: int = 0
    lam: str = str(LAMBDA0)
    kinds: tuple[str, ...] = KINDS
    workers: int = 1
    cache_dir: str | None = None
    use_cache: bool = True
    ack_noninvariant: bool = False

    def to_argv(self) -> list[str]:
        argv = [self.command]
        if self.spec is not None:
            argv += ["--spec", self.spec]
        argv += ["--genus", str(self.genus), "--lambda", self.lam, "--kinds", ",".join(self.kinds),
                 "--workers", str(self.workers)]
        if self.cache_dir is not None:
            argv += ["--cache-dir", self.cache_dir]
        if not self.use_cache:
            argv.append("--no-cache")
        if self.ack_noninvariant:
            argv.append("--ack-noninvariant")
        return argv

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> "RunConfig":
        return cls(
            command=args.command,
            spec=args.spec,
            genus=args.genus,
            lam=args.lam,
            kinds=tuple(args.kinds.split(",")),
            workers=args.workers,
            cache_dir=args.cache_dir,
            use_cache=not args.no_cache,
            ack_noninvariant=args.ack_noninvariant,
        )


def _dump(obj) -> None:
    sys.stdout.write(json.dumps(obj, indent=2) + "\n")


def _json_points(text: str) -> tuple:
    return tuple(tuple(int(c) for c in p) for p in json.loads(text))


def _default_workers() -> int:
    try:
        return len(os.sched_getaffinity(0))
    except AttributeError:
        return os.cpu_count() or 1


def cmd_count(args) -> int:
    cfg = RunConfig.from_args(args)
    req = CountRequest(parse_spec(cfg.spec), cfg.genus, parse_lambda(cfg.lam), cfg.kinds,
                       ack_noninvariant=cfg.ack_noninvariant, cremona=not args.no_cremona)
    key = request_key(req)
    cache = ReportCache(cfg.cache_dir) if cfg.use_cache else None
    want_records = bool(args.contributions or args.svg_dir)
    report = cache.load(key) if cache and not want_records else None
    if report is None:
        records: list = []
        rep = count(req, cfg.workers, emit=records.append if want_records else None)
        report = report_json(req, rep)
        if cache:
            cache.store(key, report)
        if args.contributions:
            with open(args.contributions, "w") as fh:
                for rec in records:
                    fh.write(json.dumps(rec.to_json(), separators=(",", ":")) + "\n")
        if args.svg_dir:
            from .render import render_contribution

            poly = req.ambient()
            for k, rec in enumerate(records):
                render_contribution(poly, rec.to_json(), Path(args.svg_dir) / f"contribution_{k:05d}.svg")
    _dump(report)
    return 0


def cmd_paths(args) -> int:
    spec = parse_spec(args.spec)
    req = CountRequest(spec, args.genus, parse_lambda(args.lam), ("complex_total",))
    poly = req.ambient()
    n = boundary_count(poly) - 1 + args.genus
    validate_for_polygon(req.order, poly)
    if args.list:
        for pts in iter_path_tuples(poly, req.order, n):
            sys.stdout.write(json.dumps([list(p) for p in pts]) + "\n")
    else:
        _dump({"spec": format_spec(spec), "genus": args.genus, "length": n, "paths": count_paths(poly, n)})
    return 0


def cmd_subdivisions(args) -> int:
    spec = parse_spec(args.spec)
    order = parse_lambda(args.lam)
    req = CountRequest(spec, 0, order, ("complex_total",))
    poly = req.ambient()
    path = _json_points(args.path)
    if not is_admissible(path, poly, order):
        raise TropenumError(f"path {list(path)} is not admissible for lambda {order}")
    ctx = polygon_context(poly, order)
    stats = SearchStats()
    plus = search(path, 1, ctx, stats)
    minus = search(path, -1, ctx, stats)

    def side(cs):
        return [[{"kind": "triangle" if len(c) == 3 else "parallelogram", "vertices": [list(v) for v in c]} for c in s] for s in cs]

    nodal = []
    for sp in plus:
        for sm in minus:
            S = Subdivision(poly, sp + sm, path)
            c = classify(S)
            if c.nodal:
                nodal.append(subdivision_to_json(S, c))
    _dump({
        "path": [list(p) for p in path],
        "plus": side(plus),
        "minus": side(minus),
        "nodal": nodal,
        "diagnostics": {"dead_ends": stats.dead_ends, "dedup_collisions": stats.collisions},
    })
    return 0


def cmd_tropical(args) -> int:
    from .tropical import LiftFunction, balancing_ok, corner_locus, duality_check, regular_subdivision

    support = _json_points(args.support)
    lift = [Fraction(str(v)) for v in json.loads(args.lift)]
    f = LiftFunction.from_lists(support, lift)
    curve = corner_locus(f)
    cx = regular_subdivision(f)
    if args.svg:
        from .render import render_tropical

        render_tropical(curve, cx, args.svg)
    _dump({
        "curve": curve.to_json(),
        "subdivision": [[list(p) for p in c] for c in cx.cells],
        "balanced": balancing_ok(curve),
        "dual": duality_check(curve, cx),
    })
    return 0


def cmd_bound(args) -> int:
    spec = parse_spec(args.spec)
    rho = bounds.rho(spec)
    pos, neg = bounds.canonical_contribution(spec)
    req = CountRequest(spec, 0, LAMBDA0, KINDS)
    rep = count(req, args.workers)
    out = {
        "spec": format_spec(spec),
        "rho": rho,
        "canonical_path": [list(p) for p in bounds.canonical_path(spec).points],
        "canonical_positives": pos,
        "canonical_negatives": neg,
        "welschinger": rep.welschinger,
        "checks": {
            "welschinger_ge_rho": rep.welschinger >= rho,
            "canonical_ge_rho": pos >= rho,
            "canonical_no_negatives": neg == 0,
        },
    }
    _dump(out)
    if args.check and not all(out["checks"].values()):
        return EXIT_FAIL
    return 0


def cmd_verify(args) -> int:
    if args.oracle:
        if args.oracle != "kontsevich" or args.degree is None:
            raise TropenumError("--oracle kontsevich needs --degree")
        n = oracles.kontsevich_N(args.degree)
        sys.stdout.write(f"{n}\n")
        ok = args.degree < 2 or oracles.sandwich_check(args.degree, n)
        return 0 if ok else EXIT_FAIL
    cache = None if args.no_cache else ReportCache(args.cache_dir)
    results = run_preset(args.preset, Runner(cache, args.workers))
    width = max(len(r.name) for r in results)
    for r in results:
        sys.stdout.write(f"{'PASS' if r.passed else 'FAIL'}  {r.name:<{width}}  {'' if r.passed else r.detail}\n".rstrip() + "\n")
    failed = [r for r in results if not r.passed]
    sys.stdout.write(f"{len(results) - len(failed)}/{len(results)} checks passed\n")
    return EXIT_FAIL if failed else 0


def cmd_emit_svg(args) -> int:
    from .render import render_contribution

    spec = parse_spec(args.spec)
    req = CountRequest(spec, 0, parse_lambda(args.lam), ("complex_total",), cremona=not args.no_cremona)
    poly = req.ambient()
    out = Path(args.out)
    written = []
    if args.contributions:
        with open(args.contributions) as fh:
            records = [json.loads(line) for line in fh if line.strip()]
    elif args.path:
        path = _json_points(args.path)
        order = req.order
        validate_for_polygon(order, poly)
        if not is_admissible(path, poly, order):
            raise TropenumError("path is not admissible")
        ctx = polygon_context(poly, order)
        records = []
        for sp in search(path, 1, ctx):
            for sm in search(path, -1, ctx):
                S = Subdivision(poly, sp + sm, path)
                c = classify(S)
                if c.nodal:
                    records.append(subdivision_to_json(S, c))
    else:
        raise TropenumError("emit-svg needs --contributions or --path")
    for k, rec in enumerate(records):
        if "cells" not in rec:
            raise TropenumError(f"record {k} has no cells")
        written.append(str(render_contribution(poly, rec, out / f"subdivision_{k:05d}.svg")))
    _dump({"written": written})
    return 0


def _add_common(p: argparse.ArgumentParser, spec_required: bool = True) -> None:
    p.add_argument("--spec", required=spec_required, help="surface spec, e.g. p2:4, quadric:2,3, p3b:4;1,1,1")
    p.add_argument("--genus", type=int, default=0)
    p.add_argument("--lambda", dest="lam", default=str(LAMBDA0), help="order 'a,b;c,d' (default lambda0 = 1,0;0,-1)")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="tropenum", description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("-v", "--verbose", action="store_true")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="exact complex and Welschinger counts")
    _add_common(p)
    p.add_argument("--kinds", default=",".join(KINDS))
    p.add_argument("--workers", type=int, default=_default_workers())
    p.add_argument("--cache-dir", default=None)
    p.add_argument("--no-cache", action="store_true")
    p.add_argument("--ack-noninvariant", action="store_true", help="allow signed counts at genus > 0")
    p.add_argument("--no-cremona", action="store_true", help="count on the raw P3blow hexagon")
    p.add_argument("--contributions", help="write per-subdivision JSON lines here")
    p.add_argument("--svg-dir", help="render each contribution to an SVG in this directory")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("paths", help="count or list admissible paths")
    _add_common(p)
    p.add_argument("--list", action="store_true")
    p.set_defaults(func=cmd_paths)

    p = sub.add_parser("subdivisions", help="compressing subdivisions of one path")
    _add_common(p)
    p.add_argument("--path", required=True, help="JSON list of [i,j] points")
    p.set_defaults(func=cmd_subdivisions)

    p = sub.add_parser("tropical", help="tropical curve and dual subdivision of a lift")
    p.add_argument("--support", required=True, help="JSON list of [i,j] points")
    p.add_argument("--lift", required=True, help="JSON list of values (numbers or 'p/q' strings)")
    p.add_argument("--svg")
    p.set_defaults(func=cmd_tropical)

    p = sub.add_parser("bound", help="lower bound rho and canonical-path contribution")
    p.add_argument("--spec", required=True)
    p.add_argument("--check", action="store_true")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("verify", help="oracle and invariance checks")
    p.add_argument("--preset", default="desk-small")
    p.add_argument("--oracle")
    p.add_argument("--degree", type=int)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--cache-dir", default=None)
    p.add_argument("--no-cache", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("emit-svg", help="render subdivisions to SVG")
    _add_common(p)
    p.add_argument("--contributions")
    p.add_argument("--path")
    p.add_argument("--out", required=True)
    p.add_argument("--no-cremona", action="store_true")
    p.set_defaults(func=cmd_emit_svg)
    return ap


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except WelschingerNonInvariantError as exc:
        sys.stderr.write(f"error: {exc.reason}: {exc}\n")
        return EXIT_NONINVARIANT
    except TropenumError as exc:
        sys.stderr.write(f"error: {exc.reason}: {exc}\n")
        return EXIT_INVALID
    except (ValueError, json.JSONDecodeError, OSError) as exc:
        sys.stderr.write(f"error: invalid-input: {exc}\n")
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
