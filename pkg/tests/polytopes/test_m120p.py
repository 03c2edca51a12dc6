from fractions import Fraction

import pytest

from mereon.goldfield import PHI, PHI_INVERSE, GoldenNum
from mereon.goldfield.vectors import norm_sq
from mereon.polytopes import (
    M120P_RADII_SQ,
    Polyhedron,
    VertexLabel,
    edge_type_census,
    has_trinity,
    icosahedral_directions,
    icosahedral_frame,
    radius_ratio_report,
    shell_census,
    symmetry_report,
)
from mereon.pytest.assertions import assert_manifold, assert_mesh_counts
from mereon.quatgroup import golden_quaternion

HALF = Fraction(1, 2)
FIVE_FOLD = golden_quaternion(PHI * HALF, HALF, 0, PHI_INVERSE * HALF)


def test_mesh_counts(m120p: Polyhedron) -> None:
    assert_mesh_counts(m120p, vertices=62, edges=180, faces=120)
    assert_manifold(m120p)


def test_vertex_types(m120p: Polyhedron) -> None:
    counts = {label: len(m120p.indices_of_type(label)) for label in VertexLabel}

    assert counts == {VertexLabel.A: 20, VertexLabel.B: 30, VertexLabel.C: 12}


def test_every_face_has_one_vertex_of_each_type(m120p: Polyhedron) -> None:
    assert has_trinity(m120p)


def test_edge_type_census(m120p: Polyhedron) -> None:
    assert edge_type_census(m120p) == {"A-B": 60, "A-C": 60, "B-C": 60}


def test_exact_shells(m120p: Polyhedron) -> None:
    for label, radius_sq in M120P_RADII_SQ.items():
        assert all(m120p.radius_sq(i) == radius_sq for i in m120p.indices_of_type(label))
    assert [count for _, count in shell_census(m120p)] == [20, 12, 30]


def test_float_radii(m120p: Polyhedron) -> None:
    radii = {label: m120p.float_vertex(m120p.indices_of_type(label)[0]) for label in VertexLabel}

    assert sum(c * c for c in radii[VertexLabel.A]) ** 0.5 == pytest.approx(4.535, abs=5e-4)
    assert sum(c * c for c in radii[VertexLabel.C]) ** 0.5 == pytest.approx(4.980, abs=5e-4)
    assert sum(c * c for c in radii[VertexLabel.B]) ** 0.5 == pytest.approx(5.236, abs=5e-4)


def test_radius_ratios(m120p: Polyhedron) -> None:
    report = radius_ratio_report(m120p)

    expected = tuple(M120P_RADII_SQ[label] for label in (VertexLabel.A, VertexLabel.C, VertexLabel.B))

    assert report.squared_radii == expected
    assert report.ratios == pytest.approx((1.0, 1.098, 1.155), abs=1e-3)


def test_icosahedral_symmetry(m120p: Polyhedron) -> None:
    report = symmetry_report(m120p, FIVE_FOLD)

    assert report.five_fold
    assert not report.four_fold
    assert not report.integer_coordinates
    assert not report.crystallographic


def test_frame_directions() -> None:
    frame = icosahedral_frame()
    lengths = {t.label: set() for t in frame.types}  # type: ignore[var-annotated]
    for direction, vertex_type in zip(frame.directions, frame.types):
        lengths[vertex_type.label].add(norm_sq(direction))

    assert lengths == {
        VertexLabel.A: {GoldenNum(3)},
        VertexLabel.C: {PHI + 2},
        VertexLabel.B: {GoldenNum(4)},
    }


def test_icosahedral_directions_are_centrally_symmetric() -> None:
    directions = icosahedral_directions()

    assert directions == icosahedral_frame().directions
    assert len(set(directions)) == 62
    assert all(tuple(-c for c in direction) in directions for direction in directions)
