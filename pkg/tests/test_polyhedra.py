from fractions import Fraction

import pytest

from ahtorus.errors import DimensionMismatch, NotPointed, ZeroDirection
from ahtorus.polyhedra import (
    MINUS_INFINITY,
    Cone,
    EmptyPolyhedron,
    Polyhedron,
    dual_cone,
    faces,
    line_slice_positive_length,
    linear_image,
    minimal_subspace,
    minkowski_sum,
    subspace_intersection_dim,
    support_min,
    vertex_enumeration,
)
from oracles import basic_solution_vertices, lp_slice_positive

SIMPLEX = Polyhedron.from_generators([(0, 0), (1, 0), (0, 1)])


def test_from_generators_drops_interior_points():
    p = Polyhedron.from_generators([(0, 0), (2, 0), (0, 2), (1, 1), (Fraction(1, 2), Fraction(1, 2))])
    assert p.vertices == ((0, 0), (0, 2), (2, 0))


def test_vertex_enumeration_matches_basic_solutions():
    # fibre of Example 12's P over the ray (1, 1): x >= 0, x1 + x3 + x4 = 1, x2 + x3 + x4 = 1
    eqs = [((1, 0, 1, 1), 1), ((0, 1, 1, 1), 1)]
    ineqs = [(tuple(int(i == j) for j in range(4)), 0) for i in range(4)]
    p = vertex_enumeration(eqs, ineqs, 4)
    assert sorted(p.vertices) == basic_solution_vertices(eqs, ineqs, 4)
    assert len(p.vertices) == 3


def test_infeasible_and_unpointed():
    assert isinstance(vertex_enumeration([((1, 0), 1), ((1, 0), 2)], [], 2), EmptyPolyhedron)
    with pytest.raises(NotPointed):
        vertex_enumeration([], [((1, 0), 0)], 2)


def test_unbounded_polyhedron_rays():
    p = vertex_enumeration([], [((1, 0), 0), ((0, 1), 0), ((1, 1), 1)], 2)
    assert p.vertices == ((0, 1), (1, 0))
    assert p.rays == ((0, 1), (1, 0))
    assert support_min(p, (1, 1)) == 1
    assert support_min(p, (-1, 0)) == MINUS_INFINITY


def test_support_min_on_segments():
    seg = Polyhedron.segment((-1, 0), (0, 0))
    assert support_min(seg, (1, 0)) == -1
    assert support_min(seg, (-1, 0)) == 0
    assert support_min(seg, (0, 0)) == 0


def test_minkowski_sum_and_scale():
    s = minkowski_sum(Polyhedron.segment((0, 0), (1, 0)), Polyhedron.segment((0, 0), (0, 1)))
    assert s.vertices == ((0, 0), (0, 1), (1, 0), (1, 1))
    assert (-SIMPLEX).vertices == ((-1, 0), (0, -1), (0, 0))
    with pytest.raises(DimensionMismatch):
        minkowski_sum(SIMPLEX, Polyhedron.point((0,)))


def test_linear_image_projects_simplex():
    cube = Polyhedron.from_generators([(a, b, c) for a in (0, 1) for b in (0, 1) for c in (0, 1)])
    img = linear_image([[1, 1, 0]], cube)
    assert img.vertices == ((0,), (2,))


@pytest.mark.parametrize(
    "poly,direction,expected",
    [
        (Polyhedron.segment((0, 0), (1, 0)), (1, 0), True),
        (Polyhedron.segment((0, 0), (1, 0)), (1, 1), False),
        (SIMPLEX, (3, -2), True),
        (Polyhedron.point((1, 2)), (1, 0), False),
    ],
)
def test_line_slice(poly, direction, expected):
    assert line_slice_positive_length(poly, direction) is expected
    assert lp_slice_positive(poly.vertices, direction) is expected


def test_line_slice_zero_direction():
    with pytest.raises(ZeroDirection):
        line_slice_positive_length(SIMPLEX, (0, 0))


def test_faces_of_triangle():
    fs = faces(SIMPLEX)
    assert [f.dim for f in fs].count(2) == 1
    assert [f.dim for f in fs].count(1) == 3
    assert [f.dim for f in fs].count(0) == 3


def test_minimal_subspaces_meet():
    a = minimal_subspace(Polyhedron.segment((0, 0), (1, 0)))
    b = minimal_subspace(Polyhedron.segment((0, 5), (0, 6)))
    assert subspace_intersection_dim(a, b, 2) == 0
    assert subspace_intersection_dim(a, minimal_subspace(SIMPLEX), 2) == 1


def test_dual_cone():
    c = Cone.of([(1, 0), (1, 1)])
    assert sorted(dual_cone(c).generators) == [(0, 1), (1, -1)]
    assert dual_cone(Cone(2, ())).contains((-3, 5))
