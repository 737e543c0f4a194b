from __future__ import annotations

from hypothesis import given, settings
from hypothesis import strategies as st

from tropenum.classify import (
    Subdivision,
    classify,
    components,
    genus_of,
    is_irreducible,
    is_nodal,
    is_odd,
    multiplicity,
    nodality_report,
    rank,
    sign,
    triangle_interior_total,
)
from tropenum.lattice import Cell, LatticePolygon, interior_count, normalized_area

TRI1 = LatticePolygon([(0, 0), (1, 0), (0, 1)])
TRI2 = LatticePolygon([(0, 0), (2, 0), (0, 2)])
TRI3 = LatticePolygon([(0, 0), (3, 0), (0, 3)])

FOUR = [((0, 0), (1, 0), (0, 1)), ((1, 0), (2, 0), (1, 1)), ((0, 1), (1, 1), (0, 2)), ((1, 0), (1, 1), (0, 1))]
TWO_LINES = [((0, 0), (1, 0), (0, 1)), ((0, 1), (1, 1), (0, 2)), ((1, 0), (2, 0), (1, 1), (0, 1))]


def full_triangulation(d):
    cells = []
    for i in range(d):
        for j in range(d - i):
            cells.append(((i, j), (i + 1, j), (i, j + 1)))
            if i + j < d - 1:
                cells.append(((i + 1, j), (i + 1, j + 1), (i, j + 1)))
    return cells


def test_nodal_examples():
    assert is_nodal(Subdivision(TRI1, (tuple(TRI1.vertices),)))
    big = Subdivision(TRI2, (((0, 0), (2, 0), (0, 2)),))
    assert not is_nodal(big)
    assert not nodality_report(big).boundary_vertices_ok
    assert is_nodal(Subdivision(TRI2, tuple(FOUR)))
    assert is_nodal(Subdivision(TRI2, tuple(TWO_LINES)))


def test_non_face_to_face_rejected():
    # (1,1) is a vertex of both left squares but sits inside an edge of the right triangle
    sq = LatticePolygon([(0, 0), (2, 0), (2, 2), (0, 2)])
    cells = (((0, 0), (1, 0), (1, 1), (0, 1)), ((0, 1), (1, 1), (1, 2), (0, 2)),
             ((1, 0), (2, 0), (1, 2)), ((2, 0), (2, 1), (1, 2)), ((2, 1), (2, 2), (1, 2)))
    rep = nodality_report(Subdivision(sq, cells))
    assert rep.shapes_ok and rep.boundary_vertices_ok and rep.area_ok
    assert not rep.face_to_face_ok and not rep.nodal


def test_rank_examples():
    assert rank([tuple(TRI1.vertices)]) == 2
    assert rank(full_triangulation(3)) == 9
    assert rank(TWO_LINES) == 4


def test_multiplicity_odd_sign():
    assert multiplicity(FOUR) == 1
    tri3 = ((0, 0), (3, 0), (0, 1))  # area 3
    assert multiplicity([tri3, ((0, 1), (1, 1), (0, 2)), ((1, 0), (1, 1), (0, 1))]) == 3
    assert multiplicity([((0, 0), (2, 0), (0, 1)), ((2, 0), (2, 1), (0, 1))]) == 4
    assert is_odd(FOUR)
    assert not is_odd([((0, 0), (2, 0), (0, 1))])
    assert is_odd([tri3])
    assert sign(FOUR) == 1
    one_inner = ((0, 0), (3, 0), (0, 3))
    assert triangle_interior_total([one_inner]) == 1 and sign([one_inner]) == -1
    assert sign([one_inner, ((5, 0), (8, 0), (5, 3))]) == 1


def test_irreducibility_examples():
    assert is_irreducible([tuple(TRI1.vertices)])
    assert not is_irreducible(TWO_LINES)
    assert len(components(TWO_LINES)) == 2
    assert is_irreducible(FOUR)


def test_genus_examples():
    assert genus_of(full_triangulation(3), TRI3) == 1
    assert genus_of(full_triangulation(2), TRI2) == 0
    assert genus_of([tuple(TRI1.vertices)], TRI1) == 0


def test_classify_bundle():
    cl = classify(Subdivision(TRI2, tuple(TWO_LINES)))
    assert cl.to_json() == {"nodal": True, "rank": 4, "multiplicity": 1, "odd": True, "sign": 1,
                            "irreducible": False, "genus": -1}


def test_full_triangulation_areas_sum():
    for d in range(1, 6):
        cells = full_triangulation(d)
        assert sum(Cell.from_vertices(c).area for c in cells) == d * d
        assert is_nodal(Subdivision(LatticePolygon([(0, 0), (d, 0), (0, d)]), tuple(cells)))


def _pick_sign(cells):
    total = 0
    for c in cells:
        if len(c) == 3:
            total += interior_count(list(c))
    return -1 if total % 2 else 1


triangle = st.tuples(*[st.tuples(st.integers(-5, 5), st.integers(-5, 5))] * 3).filter(
    lambda t: normalized_area(list(t)) != 0)


@settings(max_examples=200, deadline=None)
@given(st.lists(triangle, min_size=1, max_size=4))
def test_sign_matches_pick(tris):
    assert sign(tris) == _pick_sign(tris)
    assert is_odd(tris) == all(normalized_area(list(t)) % 2 for t in tris)


@settings(max_examples=60, deadline=None)
@given(st.sampled_from([(1, 1, 0, 1), (1, 0, 1, 1), (0, 1, 1, 0), (2, 1, 1, 1), (1, -1, 0, 1)]),
       st.tuples(st.integers(-3, 3), st.integers(-3, 3)))
def test_irreducibility_unimodular_invariance(m, t):
    a, b, c, d = m

    def f(p):
        return (a * p[0] + b * p[1] + t[0], c * p[0] + d * p[1] + t[1])

    for cells in (TWO_LINES, FOUR, full_triangulation(3)):
        img = [tuple(f(v) for v in cell) for cell in cells]
        assert is_irreducible(img) == is_irreducible(cells)
        assert rank(img) == rank(cells)
        assert multiplicity(img) == multiplicity(cells)
