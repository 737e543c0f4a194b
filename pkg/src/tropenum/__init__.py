"""Exact tropical counts of nodal curves and Welschinger invariants on toric Del Pezzo surfaces."""

__version__ = "0.1.0"

from .engine import CountReport, CountRequest, count, enumerate_contributions, invariance_audit  # noqa: E402
from .order import LAMBDA0, LambdaOrder, parse_lambda  # noqa: E402
from .surfaces import SurfaceSpec, parse_spec  # noqa: E402

__all__ = [
    "CountReport",
    "CountRequest",
    "LAMBDA0",
    "LambdaOrder",
    "SurfaceSpec",
    "count",
    "enumerate_contributions",
    "invariance_audit",
    "parse_lambda",
    "parse_spec",
]
