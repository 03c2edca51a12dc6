from typing import Iterable

from mereon.goldfield.vectors import Vector3, same_ray
from mereon.polytopes import Polyhedron, mesh_integrity
from mereon.quatgroup import BinaryGroup, Quaternion

DEFAULT_FLOAT_TOLERANCE = 1e-9


def assert_exact_unit_norm(quaternions: Iterable[Quaternion]) -> None:
    for index, q in enumerate(quaternions):
        if not q.is_unit():
            raise AssertionError(f"Expected element {index} to have norm 1, got |q|² = {q.norm_sq()}")


def assert_closed_group(group: BinaryGroup) -> None:
    if not group.is_closed():
        raise AssertionError(f"Expected {group.label.value} to be closed under multiplication")
    for q in group:
        if q.conjugate() not in group:
            raise AssertionError(f"Expected {group.label.value} to contain the inverse of {q}")


def assert_same_ray(u: Vector3, v: Vector3) -> None:
    if not same_ray(u, v):
        raise AssertionError(f"Expected {u} and {v} to point along the same ray")


def assert_mesh_counts(p: Polyhedron, vertices: int, edges: int, faces: int) -> None:
    report = mesh_integrity(p)
    actual = (report.vertices, report.edges, report.faces)
    error_msg = f"Expected {p.name} to have V/E/F {vertices}/{edges}/{faces}, found {'/'.join(map(str, actual))}"
    assert actual == (vertices, edges, faces), error_msg  # nosec: B101


def assert_manifold(p: Polyhedron) -> None:
    report = mesh_integrity(p)
    if not report.ok:
        raise AssertionError(f"Expected {p.name} to be a closed manifold: {'; '.join(report.violations)}")
    if report.euler_characteristic != 2:
        raise AssertionError(f"Expected {p.name} to have Euler characteristic 2, got {report.euler_characteristic}")


def assert_close(actual: float, expected: float, tolerance: float = DEFAULT_FLOAT_TOLERANCE) -> None:
    error_msg = f"Expected {actual} to be within {tolerance} of {expected}"
    assert abs(actual - expected) <= tolerance, error_msg  # nosec: B101
