from __future__ import annotations

import pytest

from tropenum.errors import InvalidDivisorError
from tropenum.lattice import LatticePolygon, boundary_count, interior_count
from tropenum.surfaces import (
    SurfaceSpec,
    anticanonical_degree,
    cremona_normalize,
    delta_of,
    format_spec,
    newton_polygon,
    parse_spec,
    r_of,
)


def test_newton_polygons():
    assert newton_polygon(parse_spec("p2:3")) == LatticePolygon([(0, 0), (3, 0), (0, 3)])
    assert newton_polygon(parse_spec("quadric:2,3")).vertices == ((0, 0), (2, 0), (2, 3), (0, 3))
    hexagon = newton_polygon(parse_spec("p3b:3;1,1,1"))
    assert set(hexagon.vertices) == {(1, 0), (2, 0), (2, 1), (1, 2), (0, 2), (0, 1)}


def test_r_and_delta():
    assert r_of(parse_spec("p2:3")) == 8
    assert r_of(parse_spec("quadric:2,2")) == 7
    assert r_of(parse_spec("p3b:3;1,1,1")) == 5
    assert delta_of(parse_spec("p2:4")) == 3
    assert delta_of(parse_spec("quadric:2,2")) == 1
    assert delta_of(parse_spec("p2:1")) == 0


@pytest.mark.parametrize("d", range(1, 9))
def test_r_matches_lattice_count(d):
    for text in (f"p2:{d}", f"quadric:{d},{max(1, d - 1)}", f"p1:{d + 1};{d}", f"p2b:{d + 2};{d},1",
                 f"p3b:{d + 2};1,1,1"):
        s = parse_spec(text)
        poly = newton_polygon(s)
        assert r_of(s) == boundary_count(poly) - 1 == anticanonical_degree(s) - 1
        assert delta_of(s) == interior_count(poly)


def test_cremona():
    assert cremona_normalize(parse_spec("p3b:5;2,2,2")) == parse_spec("p3b:4;1,1,1")
    assert cremona_normalize(parse_spec("p3b:4;1,1,1")) == parse_spec("p3b:4;1,1,1")
    with pytest.raises(InvalidDivisorError):
        cremona_normalize(parse_spec("p3b:3;2,2,2"))


def test_cremona_preserves_r_and_delta():
    for text in ("p3b:5;2,2,2", "p3b:4;2,2,1", "p3b:6;3,2,2"):
        s = parse_spec(text)
        c = cremona_normalize(s)
        assert r_of(c) == r_of(s)
        assert delta_of(c) == delta_of(s)


def test_quadric_swap():
    a = newton_polygon(parse_spec("quadric:3,2"))
    b = newton_polygon(parse_spec("quadric:2,3"))
    assert boundary_count(a) == boundary_count(b) and interior_count(a) == interior_count(b)


@pytest.mark.parametrize("bad", ["p2:0", "p9:3", "quadric:2", "p1:2;3", "p2:x", "p3b:2;2,2,2", "p2:-1"])
def test_invalid(bad):
    with pytest.raises((InvalidDivisorError, ValueError)):
        newton_polygon(parse_spec(bad))


def test_format_roundtrip():
    for text in ("p2:5", "quadric:3,2", "p1:3;1", "p2b:4;1,1", "p3b:5;2,2,2"):
        assert format_spec(parse_spec(text)) == text
    assert isinstance(parse_spec("p2:2"), SurfaceSpec)
