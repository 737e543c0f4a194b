from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tropenum.lattice import (
    Cell,
    LatticePolygon,
    boundary_count,
    boundary_lattice_points,
    convex_hull,
    interior_angle_lt_pi,
    interior_count,
    interior_lattice_points,
    lattice_length,
    normalized_area,
)

TRI1 = [(0, 0), (1, 0), (0, 1)]


def tri(d):
    return LatticePolygon([(0, 0), (d, 0), (0, d)])


def test_normalized_area_examples():
    assert normalized_area(TRI1) == 1
    assert normalized_area([(0, 0), (2, 0), (0, 2)]) == 4
    assert normalized_area([(0, 0), (1, 0), (2, 1), (1, 1)]) == 2
    assert Cell.from_vertices([(0, 0), (1, 0), (2, 1), (1, 1)]).area == 2


def test_boundary_counts():
    assert boundary_count(tri(3)) == 9
    assert boundary_count(LatticePolygon([(0, 0), (2, 0), (2, 3), (0, 3)])) == 10
    assert boundary_count(TRI1) == 3
    pts = boundary_lattice_points(tri(2))
    assert len(pts) == 6 and len(set(pts)) == 6


def test_interior_points():
    assert interior_lattice_points(tri(3)) == {(1, 1)}
    assert len(interior_lattice_points(tri(4))) == 3
    assert interior_lattice_points(tri(1)) == set()
    assert interior_count(tri(4)) == 3


def test_interior_angle():
    assert interior_angle_lt_pi((0, 1), (0, 0), (1, 0), "plus")
    assert not interior_angle_lt_pi((0, 1), (0, 0), (1, 0), "minus")
    for side in ("plus", "minus"):
        assert not interior_angle_lt_pi((0, 2), (0, 1), (0, 0), side)
    assert interior_angle_lt_pi((0, 0), (1, 1), (2, 0), "minus")


def test_polygon_normalization():
    # clockwise input with a redundant collinear vertex
    p = LatticePolygon([(0, 0), (0, 2), (1, 1), (2, 0), (1, 0)])
    assert len(p.vertices) == 3 and set(p.vertices) == {(0, 0), (2, 0), (0, 2)}
    i = p.vertices.index((0, 0))
    assert p.vertices[i:] + p.vertices[:i] == ((0, 0), (2, 0), (0, 2))
    with pytest.raises(ValueError):
        LatticePolygon([(0, 0), (2, 0), (1, 1), (2, 2), (0, 2)])


def test_polygon_contains():
    p = tri(2)
    assert p.contains((1, 1)) and p.contains((0, 0)) and not p.contains((2, 1))
    assert len(p.lattice_points()) == 6


def test_cell_validation():
    with pytest.raises(ValueError):
        Cell.from_vertices([(0, 0), (1, 0), (2, 0)])
    with pytest.raises(ValueError):
        Cell.from_vertices([(0, 0), (2, 0), (2, 1), (0, 2)])


def test_lattice_length():
    assert lattice_length((0, 0), (4, 6)) == 2
    assert lattice_length((1, 1), (1, 1)) == 0


small = st.integers(-6, 6)


@settings(max_examples=200, deadline=None)
@given(st.lists(st.tuples(small, small), min_size=3, max_size=12))
def test_pick_consistency(points):
    hull = convex_hull(points)
    if len(hull) < 3:
        return
    poly = LatticePolygon(hull)
    area2 = normalized_area(poly)
    b = boundary_count(poly)
    i = len(interior_lattice_points(poly))
    assert area2 == 2 * i + b - 2
    assert len(poly.lattice_points()) == i + b


GENS = [(1, 1, 0, 1), (1, 0, 1, 1), (0, 1, 1, 0), (-1, 0, 0, 1)]


def _mul(m, n):
    return (m[0] * n[0] + m[1] * n[2], m[0] * n[1] + m[1] * n[3], m[2] * n[0] + m[3] * n[2], m[2] * n[1] + m[3] * n[3])


@settings(max_examples=100, deadline=None)
@given(st.lists(st.sampled_from(GENS), max_size=8), st.tuples(small, small))
def test_unimodular_invariance(word, t):
    m = (1, 0, 0, 1)
    for g in word:
        m = _mul(m, g)
    a, b, c, d = m
    poly = tri(3)

    def f(p):
        return (a * p[0] + b * p[1] + t[0], c * p[0] + d * p[1] + t[1])

    img = LatticePolygon([f(v) for v in poly.vertices])
    assert normalized_area(img) == normalized_area(poly)
    assert boundary_count(img) == boundary_count(poly)
    assert interior_count(img) == interior_count(poly)
