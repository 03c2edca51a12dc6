"""The full icosahedral group I_h as exact 3×3 matrices, and its simply transitive action on the M120p faces."""
import functools
from typing import Dict, List, NamedTuple, Tuple

from mereon.goldfield import GoldenNum, gf_to_float
from mereon.goldfield.vectors import Vector3, add, norm_sq
from mereon.polytopes import Polyhedron, m120p_construct
from mereon.polytopes.polyhedron import Matrix3, apply_matrix
from mereon.quatgroup import build_2I, rotation_matrix


class OrbitSizeError(Exception):
    pass


class FaceOrbitMap(NamedTuple):
    seed_face: int
    element_to_face: Tuple[int, ...]
    face_to_element: Tuple[int, ...]
    centroid_radius_sq: GoldenNum
    stabilizer_size: int

    @property
    def orbit_size(self) -> int:
        return len(set(self.element_to_face))

    @property
    def centroid_radius(self) -> float:
        return gf_to_float(self.centroid_radius_sq) ** 0.5


def _negate(matrix: Matrix3) -> Matrix3:
    return tuple(tuple(-c for c in row) for row in matrix)  # type: ignore[return-value]


@functools.lru_cache(maxsize=None)
def icosahedral_matrices() -> Tuple[Matrix3, ...]:
    """60 rotations R_q (one q from each ±q pair of 2I), then the same composed with central inversion."""
    group = build_2I()
    rotations: List[Matrix3] = []
    taken = set()
    for index, q in enumerate(group):
        if group.negation_indices[index] in taken:
            continue
        taken.add(index)
        rotations.append(rotation_matrix(q))
    return tuple(rotations) + tuple(_negate(m) for m in rotations)


def face_centroid_sum(p: Polyhedron, face: Tuple[int, ...]) -> Vector3:
    """Three times the centroid, kept integral-friendly for exact lookups."""
    total = p.vertices[face[0]]
    for vertex in face[1:]:
        total = add(total, p.vertices[vertex])
    return total


def face_orbit_bijection(seed_face: int = 0) -> FaceOrbitMap:
    polyhedron = m120p_construct()
    matrices = icosahedral_matrices()
    sums: Dict[Vector3, int] = {face_centroid_sum(polyhedron, face): i for i, face in enumerate(polyhedron.faces)}
    seed = face_centroid_sum(polyhedron, polyhedron.faces[seed_face])
    element_to_face = []
    for element, matrix in enumerate(matrices):
        if (face := sums.get(apply_matrix(matrix, seed))) is None:
            raise OrbitSizeError(f"Symmetry {element} maps face {seed_face} off the face set")
        element_to_face.append(face)
    if len(set(element_to_face)) != len(polyhedron.faces):
        raise OrbitSizeError(f"Orbit of face {seed_face} has {len(set(element_to_face))} faces")
    radii = {norm_sq(centroid) / 9 for centroid in sums}
    if len(radii) != 1:
        raise OrbitSizeError("Face centroids lie on more than one sphere")
    face_to_element = [0] * len(element_to_face)
    for element, face in enumerate(element_to_face):
        face_to_element[face] = element
    return FaceOrbitMap(
        seed_face=seed_face,
        element_to_face=tuple(element_to_face),
        face_to_element=tuple(face_to_element),
        centroid_radius_sq=radii.pop(),
        stabilizer_size=sum(1 for face in element_to_face if face == seed_face),
    )
