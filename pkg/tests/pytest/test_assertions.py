import pytest

from mereon.goldfield import GoldenNum
from mereon.goldfield.vectors import Vector3
from mereon.polytopes import Polyhedron, edges_from_faces
from mereon.pytest.assertions import (
    assert_close,
    assert_closed_group,
    assert_exact_unit_norm,
    assert_manifold,
    assert_mesh_counts,
    assert_same_ray,
)
from mereon.quatgroup import BinaryGroup, Quaternion, build_2T


def _vector(x: int, y: int, z: int) -> Vector3:
    return (GoldenNum(x), GoldenNum(y), GoldenNum(z))


def _tetrahedron(faces=((0, 1, 2), (0, 3, 1), (0, 2, 3), (1, 3, 2))) -> Polyhedron:
    vertices = (_vector(1, 1, 1), _vector(1, -1, -1), _vector(-1, 1, -1), _vector(-1, -1, 1))
    return Polyhedron("tetrahedron", vertices, (None,) * 4, edges_from_faces(faces), tuple(faces))


def test_assert_exact_unit_norm() -> None:
    one, zero = GoldenNum(1), GoldenNum(0)

    assert_exact_unit_norm(build_2T())

    with pytest.raises(AssertionError, match=r"Expected element 1 to have norm 1, got \|q\|² = 4 \+ 0·phi"):
        assert_exact_unit_norm([Quaternion(one, zero, zero, zero), Quaternion(one + one, zero, zero, zero)])


def test_assert_closed_group() -> None:
    group = build_2T()

    assert_closed_group(group)

    with pytest.raises(AssertionError, match="Expected 2T to be closed under multiplication"):
        assert_closed_group(BinaryGroup(group.label, group.elements[1:]))


def test_assert_same_ray() -> None:
    assert_same_ray(_vector(1, 2, 3), _vector(2, 4, 6))

    with pytest.raises(AssertionError, match="point along the same ray"):
        assert_same_ray(_vector(1, 2, 3), _vector(-1, -2, -3))


def test_assert_mesh_counts() -> None:
    assert_mesh_counts(_tetrahedron(), 4, 6, 4)

    with pytest.raises(AssertionError, match="Expected tetrahedron to have V/E/F 4/6/5, found 4/6/4"):
        assert_mesh_counts(_tetrahedron(), 4, 6, 5)


def test_assert_manifold() -> None:
    assert_manifold(_tetrahedron())

    with pytest.raises(AssertionError, match="Expected tetrahedron to be a closed manifold: 3 edges do not border"):
        assert_manifold(_tetrahedron(faces=((0, 1, 2), (0, 3, 1), (0, 2, 3))))


def test_assert_close() -> None:
    assert_close(0.1 + 0.2, 0.3)
    assert_close(1.0, 1.05, tolerance=0.1)

    with pytest.raises(AssertionError, match="Expected 1.0 to be within 1e-09 of 1.1"):
        assert_close(1.0, 1.1)
