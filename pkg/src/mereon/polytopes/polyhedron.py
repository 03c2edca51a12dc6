import math
from collections import Counter
from dataclasses import dataclass
from enum import Enum
from typing import Dict, FrozenSet, List, NamedTuple, Optional, Sequence, Tuple

from mereon.goldfield import ONE, GoldenNum, gf_to_float
from mereon.goldfield.vectors import Vector3, det3, norm_sq, sub, to_floats
from mereon.quatgroup import GoldenQuaternion, rotation_matrix

Edge = Tuple[int, int]
Face = Tuple[int, ...]
Matrix3 = Tuple[Vector3, Vector3, Vector3]


class MeshIntegrityError(Exception):
    pass


class VertexLabel(str, Enum):
    A = "A"
    B = "B"
    C = "C"


class VertexRole(str, Enum):
    INPUT = "Input"
    THRUPUT = "Thruput"
    OUTPUT = "Output"


class VertexType(NamedTuple):
    label: VertexLabel
    fold: int
    role: VertexRole


TYPE_A = VertexType(VertexLabel.A, 3, VertexRole.INPUT)
TYPE_B = VertexType(VertexLabel.B, 2, VertexRole.THRUPUT)
TYPE_C = VertexType(VertexLabel.C, 5, VertexRole.OUTPUT)
VERTEX_TYPES: Dict[VertexLabel, VertexType] = {t.label: t for t in (TYPE_A, TYPE_B, TYPE_C)}


@dataclass(frozen=True)
class Polyhedron:
    """Vertices, edges and faces of a closed surface.

    When ``scales_sq`` is set, vertex i sits at ``vertices[i] · √scales_sq[i]``; this keeps radii that are
    nested radicals exact while every stored coordinate stays in Q(√5).
    """

    name: str
    vertices: Tuple[Vector3, ...]
    types: Tuple[Optional[VertexType], ...]
    edges: Tuple[Edge, ...]
    faces: Tuple[Face, ...]
    scales_sq: Optional[Tuple[GoldenNum, ...]] = None

    def scale_sq(self, index: int) -> GoldenNum:
        return self.scales_sq[index] if self.scales_sq else ONE

    def radius_sq(self, index: int) -> GoldenNum:
        return norm_sq(self.vertices[index]) * self.scale_sq(index)

    def float_vertex(self, index: int) -> Tuple[float, float, float]:
        factor = math.sqrt(gf_to_float(self.scale_sq(index)))
        x, y, z = to_floats(self.vertices[index])
        return (x * factor, y * factor, z * factor)

    def float_vertices(self) -> List[Tuple[float, float, float]]:
        return [self.float_vertex(i) for i in range(len(self.vertices))]

    def indices_of_type(self, label: VertexLabel) -> List[int]:
        return [i for i, t in enumerate(self.types) if t is not None and t.label == label]


class MeshIntegrityReport(NamedTuple):
    vertices: int
    edges: int
    faces: int
    euler_characteristic: int
    manifold: bool
    duplicate_vertices: Tuple[Tuple[int, int], ...]
    violations: Tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.violations


class RadiusRatioReport(NamedTuple):
    squared_radii: Tuple[GoldenNum, GoldenNum, GoldenNum]
    squared_ratios: Tuple[GoldenNum, GoldenNum, GoldenNum]
    ratios: Tuple[float, float, float]


class SymmetryReport(NamedTuple):
    integer_coordinates: bool
    four_fold: bool
    five_fold: bool

    @property
    def crystallographic(self) -> bool:
        return self.integer_coordinates and self.four_fold and not self.five_fold


def face_edges(face: Face) -> List[Edge]:
    return [edge_key(face[i], face[(i + 1) % len(face)]) for i in range(len(face))]


def edge_key(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


def edges_from_faces(faces: Sequence[Face]) -> Tuple[Edge, ...]:
    return tuple(sorted({edge for face in faces for edge in face_edges(face)}))


def orient_outward(vertices: Sequence[Vector3], face: Tuple[int, int, int]) -> Tuple[int, int, int]:
    """Orders a triangle so that det(v0, v1, v2) > 0, i.e. counter-clockwise seen from outside a star-shaped body."""
    a, b, c = face
    sign = det3(vertices[a], vertices[b], vertices[c]).sign()
    if sign == 0:
        raise MeshIntegrityError(f"Face {face} is coplanar with the origin")
    return face if sign > 0 else (a, c, b)


def mesh_integrity(p: Polyhedron) -> MeshIntegrityReport:
    violations = []
    positions: Dict[Tuple[Vector3, GoldenNum], int] = {}
    duplicates = []
    for index, vertex in enumerate(p.vertices):
        key = (vertex, p.scale_sq(index))
        if key in positions:
            duplicates.append((positions[key], index))
        positions[key] = index
    if duplicates:
        violations.append(f"Duplicate vertices: {duplicates}")
    if len(set(p.edges)) != len(p.edges):
        violations.append("Duplicate edges")
    edge_set = set(p.edges)
    incidence: Counter = Counter()
    for face in p.faces:
        for edge in face_edges(face):
            incidence[edge] += 1
            if edge not in edge_set:
                violations.append(f"Face {face} uses missing edge {edge}")
    non_manifold = sorted(edge for edge in edge_set if incidence[edge] != 2)
    if non_manifold:
        violations.append(f"{len(non_manifold)} edges do not border exactly 2 faces")
    euler = len(p.vertices) - len(p.edges) + len(p.faces)
    return MeshIntegrityReport(
        vertices=len(p.vertices),
        edges=len(p.edges),
        faces=len(p.faces),
        euler_characteristic=euler,
        manifold=not non_manifold,
        duplicate_vertices=tuple(duplicates),
        violations=tuple(violations),
    )


def ensure_integrity(p: Polyhedron, vertices: int, edges: int, faces: int) -> MeshIntegrityReport:
    report = mesh_integrity(p)
    if not report.ok:
        raise MeshIntegrityError(f"{p.name}: {'; '.join(report.violations)}")
    if (report.vertices, report.edges, report.faces) != (vertices, edges, faces):
        raise MeshIntegrityError(
            f"{p.name}: V/E/F = {report.vertices}/{report.edges}/{report.faces}, expected {vertices}/{edges}/{faces}"
        )
    if report.euler_characteristic != 2:
        raise MeshIntegrityError(f"{p.name}: Euler characteristic {report.euler_characteristic}")
    return report


def shell_census(p: Polyhedron) -> List[Tuple[GoldenNum, int]]:
    """(squared radius, vertex count), ascending by radius."""
    counts = Counter(p.radius_sq(i) for i in range(len(p.vertices)))
    return sorted(counts.items())


def edge_length_census(p: Polyhedron) -> List[Tuple[GoldenNum, int]]:
    """(squared edge length, count) for unscaled polyhedra, ascending."""
    if p.scales_sq:
        raise ValueError(f"{p.name}: edge census needs coordinates inside Q(√5)")
    counts = Counter(norm_sq(sub(p.vertices[u], p.vertices[v])) for u, v in p.edges)
    return sorted(counts.items())


def radius_ratio_report(p: Polyhedron) -> RadiusRatioReport:
    """(1, r_mid / r_min, r_max / r_min) from exact squared ratios of the distinct shell radii."""
    radii = sorted({p.radius_sq(i) for i in range(len(p.vertices))})
    if len(radii) > 3:
        raise ValueError(f"{p.name} has {len(radii)} shells, expected at most 3")
    smallest, largest = radii[0], radii[-1]
    middle = radii[1] if len(radii) == 3 else largest if len(radii) == 2 else smallest
    squared_radii = (smallest, middle, largest)
    squared_ratios = (ONE, middle / smallest, largest / smallest)
    ratios = (1.0, math.sqrt(gf_to_float(squared_ratios[1])), math.sqrt(gf_to_float(squared_ratios[2])))
    return RadiusRatioReport(squared_radii, squared_ratios, ratios)


def apply_matrix(matrix: Matrix3, v: Vector3) -> Vector3:
    return tuple(row[0] * v[0] + row[1] * v[1] + row[2] * v[2] for row in matrix)  # type: ignore[return-value]


def _vertex_set(p: Polyhedron) -> FrozenSet[Tuple[Vector3, GoldenNum]]:
    return frozenset((v, p.scale_sq(i)) for i, v in enumerate(p.vertices))


def is_invariant(p: Polyhedron, matrix: Matrix3) -> bool:
    vertex_set = _vertex_set(p)
    return all((apply_matrix(matrix, v), p.scale_sq(i)) in vertex_set for i, v in enumerate(p.vertices))


QUARTER_TURN_Z: Matrix3 = (
    (GoldenNum(0), GoldenNum(-1), GoldenNum(0)),
    (GoldenNum(1), GoldenNum(0), GoldenNum(0)),
    (GoldenNum(0), GoldenNum(0), GoldenNum(1)),
)


def symmetry_report(p: Polyhedron, five_fold_rotation: GoldenQuaternion) -> SymmetryReport:
    """Crystallographic test: integer coordinates, 4-fold invariance, no 5-fold invariance."""
    integer = not p.scales_sq and all(c.is_rational() and c.a.denominator == 1 for v in p.vertices for c in v)
    return SymmetryReport(
        integer_coordinates=integer,
        four_fold=is_invariant(p, QUARTER_TURN_Z),
        five_fold=is_invariant(p, rotation_matrix(five_fold_rotation)),
    )
