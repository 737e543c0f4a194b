from __future__ import annotations

from math import factorial

import pytest

from tropenum.bounds import canonical_contribution, canonical_path, lambda0_positivity_audit, rho
from tropenum.errors import HypothesesViolatedError
from tropenum.order import LAMBDA0
from tropenum.paths import is_admissible
from tropenum.surfaces import newton_polygon, parse_spec, r_of


def test_rho_examples():
    assert rho(parse_spec("p2:4")) == 12
    assert rho(parse_spec("quadric:3,2")) == 3
    assert rho(parse_spec("p3b:5;2,2,2")) == 2
    assert rho(parse_spec("p3b:4;1,1,1")) == 2
    assert rho(parse_spec("p1:3;1")) == 3
    assert [rho(parse_spec(f"p2:{d}")) for d in range(1, 6)] == [1, 1, 3, 12, 60]


@pytest.mark.parametrize("bad", ["p1:2;2", "p3b:4;1,2,1", "p2b:3;2,1", "p2b:4;1,0", "p1:3;0"])
def test_rho_hypotheses(bad):
    with pytest.raises(HypothesesViolatedError):
        rho(parse_spec(bad))


def test_canonical_path_examples():
    assert canonical_path(parse_spec("p2:2")).points == ((0, 2), (0, 1), (0, 0), (1, 1), (1, 0), (2, 0))
    p3 = canonical_path(parse_spec("p2:3")).points
    assert len(p3) == 9 and p3[0] == (0, 3) and p3[-1] == (3, 0)
    hexa = canonical_path(parse_spec("p3b:3;1,1,1")).points
    assert len(hexa) == 6


@pytest.mark.parametrize("text", ["p2:1", "p2:4", "p2:6", "quadric:2,2", "quadric:3,4", "p1:4;2", "p2b:5;2,1",
                                  "p3b:4;1,1,1", "p3b:6;2,2,1"])
def test_canonical_path_admissible(text):
    s = parse_spec(text)
    path = canonical_path(s)
    assert path.length == r_of(s)
    assert is_admissible(path, newton_polygon(s), LAMBDA0)


def test_canonical_contribution():
    for d in range(1, 5):
        pos, neg = canonical_contribution(parse_spec(f"p2:{d}"))
        assert neg == 0 and 2 * pos >= factorial(d)
    pos, neg = canonical_contribution(parse_spec("p3b:4;1,1,1"))
    assert neg == 0 and pos >= 2


@pytest.mark.parametrize("text", ["p2:3", "p2:4", "quadric:2,2", "p3b:4;1,1,1"])
def test_positivity_audit(text):
    audit = lambda0_positivity_audit(parse_spec(text), detail=True)
    assert audit.ok and audit.subdivisions > 0
    assert lambda0_positivity_audit(parse_spec(text)) is True
