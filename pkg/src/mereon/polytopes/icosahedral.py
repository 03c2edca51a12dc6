"""The 62 icosahedral axis directions and the rhombus-fan triangulation shared by the M120p and the DT."""
import functools
import itertools
from typing import List, NamedTuple, Sequence, Tuple

from mereon.goldfield import PHI, PHI_INVERSE, GoldenNum
from mereon.goldfield.vectors import Vector3, dot, vec3
from mereon.polytopes.polyhedron import (
    TYPE_A,
    TYPE_B,
    TYPE_C,
    Face,
    MeshIntegrityError,
    VertexLabel,
    VertexType,
    orient_outward,
)


class IcosahedralFrame(NamedTuple):
    directions: Tuple[Vector3, ...]
    types: Tuple[VertexType, ...]
    faces: Tuple[Face, ...]


def cyclic_permutations(p: Vector3) -> List[Vector3]:
    return [(p[0], p[1], p[2]), (p[2], p[0], p[1]), (p[1], p[2], p[0])]


def all_permutations(p: Vector3) -> List[Vector3]:
    return list(dict.fromkeys(itertools.permutations(p)))  # type: ignore[arg-type]


def sign_variants(p: Vector3) -> List[Vector3]:
    """Every sign choice on the nonzero coordinates."""
    variants = []
    nonzero = [i for i, c in enumerate(p) if c]
    for signs in itertools.product((1, -1), repeat=len(nonzero)):
        signed = list(p)
        for index, sign in zip(nonzero, signs):
            signed[index] = signed[index] * sign
        variants.append(tuple(signed))
    return variants  # type: ignore[return-value]


def _expand(seeds: Sequence[Vector3], cyclic: bool) -> List[Vector3]:
    vectors = []
    for seed in seeds:
        arrangements = cyclic_permutations(seed) if cyclic else all_permutations(seed)
        vectors.extend(v for arrangement in arrangements for v in sign_variants(arrangement))
    return sorted(set(vectors))


def a_directions() -> List[Vector3]:
    """Dodecahedron: (±1, ±1, ±1) and cyclic (0, ±φ, ±φ⁻¹), squared length 3."""
    cube = _expand([vec3(1, 1, 1)], cyclic=False)
    return sorted(set(cube + _expand([(GoldenNum(0), PHI, PHI_INVERSE)], cyclic=True)))


def c_directions() -> List[Vector3]:
    """Icosahedron: cyclic (0, ±1, ±φ), squared length φ + 2."""
    return _expand([(GoldenNum(0), GoldenNum(1), PHI)], cyclic=True)


def b_directions() -> List[Vector3]:
    """Icosidodecahedron: (±2, 0, 0) and cyclic (±1, ±φ⁻¹, ±φ), squared length 4."""
    return sorted(
        set(_expand([vec3(2, 0, 0)], cyclic=False) + _expand([(GoldenNum(1), PHI_INVERSE, PHI)], cyclic=True))
    )


def _nearest_two(target: Vector3, candidates: Sequence[int], directions: Sequence[Vector3]) -> Tuple[int, int]:
    ranked = sorted(candidates, key=lambda i: dot(target, directions[i]), reverse=True)
    if dot(target, directions[ranked[1]]) == dot(target, directions[ranked[2]]):
        raise MeshIntegrityError(f"Ambiguous rhombus around {target}")
    return ranked[0], ranked[1]


def rhombus_fan_faces(directions: Sequence[Vector3], types: Sequence[VertexType]) -> List[Face]:
    """Caps each rhombus (2 A + 2 C around a B axis) with 4 triangles meeting at the B vertex."""
    a_indices = [i for i, t in enumerate(types) if t.label == VertexLabel.A]
    c_indices = [i for i, t in enumerate(types) if t.label == VertexLabel.C]
    faces = []
    for b, vertex_type in enumerate(types):
        if vertex_type.label != VertexLabel.B:
            continue
        c_1, c_2 = _nearest_two(directions[b], c_indices, directions)
        a_1, a_2 = _nearest_two(directions[b], a_indices, directions)
        for triangle in ((b, c_1, a_1), (b, a_1, c_2), (b, c_2, a_2), (b, a_2, c_1)):
            faces.append(orient_outward(directions, triangle))
    return sorted(faces)


@functools.lru_cache(maxsize=None)
def icosahedral_frame() -> IcosahedralFrame:
    """A, C, B directions in that order with their rhombus-fan faces."""
    directions: List[Vector3] = []
    types: List[VertexType] = []
    for vertex_type, group in ((TYPE_A, a_directions()), (TYPE_C, c_directions()), (TYPE_B, b_directions())):
        directions.extend(group)
        types.extend([vertex_type] * len(group))
    faces = rhombus_fan_faces(directions, types)
    return IcosahedralFrame(directions=tuple(directions), types=tuple(types), faces=tuple(faces))


def icosahedral_directions() -> Tuple[Vector3, ...]:
    return icosahedral_frame().directions
