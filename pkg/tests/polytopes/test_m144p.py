import itertools
from fractions import Fraction

from mereon.goldfield import PHI, PHI_INVERSE, GoldenNum
from mereon.polytopes import APPENDIX_A, Polyhedron, matches_appendix_a, mesh_integrity, shell_census, symmetry_report
from mereon.polytopes.m144p import face_ring
from mereon.pytest.assertions import assert_manifold, assert_mesh_counts
from mereon.quatgroup import golden_quaternion

HALF = Fraction(1, 2)
FIVE_FOLD = golden_quaternion(PHI * HALF, HALF, 0, PHI_INVERSE * HALF)


def test_mesh_counts(m144p: Polyhedron) -> None:
    assert_mesh_counts(m144p, vertices=74, edges=216, faces=144)
    assert_manifold(m144p)


def test_vertex_set_matches_reference_table(m144p: Polyhedron) -> None:
    assert len(APPENDIX_A) == 74
    assert matches_appendix_a(m144p)


def test_shell_census(m144p: Polyhedron) -> None:
    assert shell_census(m144p) == [(GoldenNum(8), 12), (GoldenNum(12), 8), (GoldenNum(14), 48), (GoldenNum(16), 6)]


def test_crystallographic_symmetry(m144p: Polyhedron) -> None:
    report = symmetry_report(m144p, FIVE_FOLD)

    assert report.integer_coordinates
    assert report.four_fold
    assert not report.five_fold
    assert report.crystallographic


def test_faces_are_oriented_outward(m144p: Polyhedron) -> None:
    report = mesh_integrity(m144p)

    assert report.duplicate_vertices == ()
    assert report.violations == ()
    # consistent orientation: every directed edge appears once
    directed = [(face[i], face[(i + 1) % 3]) for face in m144p.faces for i in range(3)]
    assert len(set(directed)) == len(directed) == 2 * report.edges


def test_face_ring_alternates_inner_and_hexagon_nodes() -> None:
    centre, ring = face_ring((1, 1, 1))

    assert centre == (2, 2, 2)
    assert len(ring) == 12
    assert [sum(p) for p in ring] == [4, 6] * 6
    assert set(ring[0::2]) == {(4, 0, 0), (0, 4, 0), (0, 0, 4), (2, 2, 0), (2, 0, 2), (0, 2, 2)}
    assert set(ring[1::2]) == set(itertools.permutations((1, 2, 3)))
    for p, q in zip(ring, ring[1:] + ring[:1]):
        assert sum((a - b) ** 2 for a, b in zip(p, q)) in (2, 6)


def test_face_ring_in_a_mirrored_octant() -> None:
    _, positive = face_ring((1, 1, 1))
    centre, ring = face_ring((-1, 1, -1))

    assert centre == (-2, 2, -2)
    assert set(ring) == {(-x, y, -z) for x, y, z in positive}
    assert all(sum(map(abs, p)) == 4 for p in ring[0::2])
