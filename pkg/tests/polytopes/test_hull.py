import itertools
from dataclasses import replace

import pytest

from mereon.goldfield import GoldenNum, vec3
from mereon.polytopes import (
    DegenerateHullError,
    HullPoint,
    Polyhedron,
    VertexLabel,
    convex_hull,
    has_trinity,
    polyhedron_hull,
)

OCTAHEDRON_WITH_CENTRE = [
    vec3(1, 0, 0),
    vec3(-1, 0, 0),
    vec3(0, 1, 0),
    vec3(0, -1, 0),
    vec3(0, 0, 1),
    vec3(0, 0, -1),
    vec3(0, 0, 0),
]


def test_octahedron_hull() -> None:
    hull = convex_hull(OCTAHEDRON_WITH_CENTRE)

    assert len(hull.faces) == 8
    assert hull.interior_vertices == frozenset({6})
    assert hull.hull_vertices == frozenset(range(6))
    assert hull.boundary_vertices == frozenset()
    assert all(face[0] == min(face) for face in hull.faces)


def test_scaled_points_stay_exact() -> None:
    points = [HullPoint(p) for p in OCTAHEDRON_WITH_CENTRE[:6]]
    points[0] = HullPoint(vec3(1, 0, 0), scale_sq=GoldenNum(2))
    hull = convex_hull(points)

    assert hull.interior_vertices == frozenset()
    assert len(hull.faces) == 8


def test_m120p_hull_swallows_a_vertices(m120p: Polyhedron) -> None:
    hull = polyhedron_hull(m120p)

    assert sorted(hull.interior_vertices) == m120p.indices_of_type(VertexLabel.A)


def test_disdyakis_radii_swallow_a_vertices(disdyakis: Polyhedron) -> None:
    hull = polyhedron_hull(disdyakis)

    assert sorted(hull.interior_vertices) == disdyakis.indices_of_type(VertexLabel.A)
    assert len(hull.hull_vertices) == 42


def test_catalan_disdyakis_is_convex(catalan_disdyakis: Polyhedron) -> None:
    hull = polyhedron_hull(catalan_disdyakis)

    assert hull.interior_vertices == frozenset()
    assert hull.hull_vertices == frozenset(range(62))
    assert len(hull.faces) == 120
    assert has_trinity(replace(catalan_disdyakis, faces=hull.faces))


def test_too_few_points() -> None:
    with pytest.raises(DegenerateHullError, match="Need at least 4 points, got 3"):
        convex_hull(OCTAHEDRON_WITH_CENTRE[:3])


def test_coplanar_points() -> None:
    with pytest.raises(DegenerateHullError, match="All points are coplanar"):
        convex_hull(OCTAHEDRON_WITH_CENTRE[:4])


def test_point_on_a_face_is_boundary_not_corner() -> None:
    cube = [vec3(x, y, z) for x, y, z in itertools.product((1, -1), repeat=3)]
    hull = convex_hull(cube + [vec3(1, 0, 0), vec3(0, 0, 0)])

    assert hull.hull_vertices == frozenset(range(8))
    assert hull.boundary_vertices == frozenset({8})
    assert hull.interior_vertices == frozenset({9})
    assert {i for face in hull.faces for i in face} == hull.hull_vertices


def test_duplicate_leading_points() -> None:
    origin = vec3(0, 0, 0)
    hull = convex_hull([origin, origin, vec3(1, 0, 0), vec3(0, 1, 0), vec3(0, 0, 1)])

    assert hull.hull_vertices == frozenset({0, 2, 3, 4})
    assert hull.boundary_vertices == frozenset({1})
    assert hull.interior_vertices == frozenset()
    assert len(hull.faces) == 4


def test_coincident_points() -> None:
    with pytest.raises(DegenerateHullError, match="All points coincide"):
        convex_hull([vec3(1, 2, 3)] * 4)
