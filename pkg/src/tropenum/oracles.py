"""Independent reference values; nothing here is used by the counting pipeline."""

from __future__ import annotations

from functools import lru_cache
from math import comb, factorial


@lru_cache(maxsize=None)
def kontsevich_N(d: int) -> int:
    """Number of rational plane curves of degree d through 3d - 1 general points."""
    if d < 1:
        raise ValueError("degree must be >= 1")
    if d == 1:
        return 1
    total = 0
    for da in range(1, d):
        db = d - da
        total += kontsevich_N(da) * kontsevich_N(db) * (
            da * da * db * db * comb(3 * d - 4, 3 * da - 2) - da ** 3 * db * comb(3 * d - 4, 3 * da - 1)
        )
    return total


def sandwich_check(d: int, N: int) -> bool:
    """(3d-4)! * 54^-d <= N <= (3d-5)!, compared in integers."""
    if d < 2:
        raise ValueError("the sandwich bound needs d >= 2")
    return factorial(3 * d - 4) <= N * 54 ** d and N <= factorial(3 * d - 5)


def reducible_rational_quartics() -> int:
    # line through 2 of the 11 points times the unique cubic through the other 9
    return comb(11, 2)


def one_node_count(d: int) -> int:
    """Degree of the discriminant: 1-nodal plane curves of degree d in a general pencil."""
    return 3 * (d - 1) ** 2
