from collections import Counter
from fractions import Fraction
from typing import Dict, List, NamedTuple, Set, Tuple

from mereon.goldfield import PHI, PHI_INVERSE, GoldenNum, gf_to_float
from mereon.goldfield.vectors import Vector3, divide, norm_sq, same_ray
from mereon.polytopes import M120P_RADII_SQ, VertexLabel, m120p_construct
from mereon.polytopes.icosahedral import cyclic_permutations, sign_variants
from mereon.quatgroup import build_2I
from mereon.shadow.projection import INFINITY, direction_index, stereo_project
from mereon.shadow.shells import shell_decompose

HALF = Fraction(1, 2)


class AlignmentError(Exception):
    pass


class AlignmentReport(NamedTuple):
    aligned: int
    total: int
    assignments: Dict[int, int]
    multiplicity: Dict[int, int]
    multiplicity_by_type: Dict[str, Set[int]]


class InnerIcosahedronReport(NamedTuple):
    pairs: Tuple[Tuple[int, int], ...]
    aligned: int
    projected_radius_sq: GoldenNum
    inverted_radius_sq: GoldenNum
    c_radius_sq: GoldenNum
    ratio_sq: GoldenNum
    shell_1_to_3_ratio_sq: GoldenNum
    on_reference_icosahedron: bool


class PhiLadderReport(NamedTuple):
    steps: Tuple[Tuple[GoldenNum, GoldenNum, bool], ...]
    ladder: Tuple[GoldenNum, ...]
    floats: Tuple[float, ...]

    @property
    def exact(self) -> bool:
        return all(ok for _, _, ok in self.steps)


def inner_icosahedron_vertices() -> List[Vector3]:
    """Cyclic permutations of (0, ±φ, ±φ²) = φ · (0, ±1, ±φ)."""
    seed = (GoldenNum(0), PHI, PHI * PHI)
    return sorted({v for arrangement in cyclic_permutations(seed) for v in sign_variants(arrangement)})


def angular_alignment_check() -> AlignmentReport:
    """Every non-pole projection of 2I points exactly along one M120p vertex."""
    group, polyhedron = build_2I(), m120p_construct()
    assignments: Dict[int, int] = {}
    for index, q in enumerate(group):
        projection = stereo_project(q)
        if projection is INFINITY or not any(projection):
            continue
        if (vertex := direction_index(projection, polyhedron.vertices)) is None:
            raise AlignmentError(f"Element {index} ({q}) is not aligned with any M120p vertex")
        assignments[index] = vertex
    multiplicity = Counter(assignments.values())
    if len(multiplicity) != len(polyhedron.vertices):
        raise AlignmentError(f"Only {len(multiplicity)} of {len(polyhedron.vertices)} directions are hit")
    by_type: Dict[str, Set[int]] = {}
    for vertex, count in multiplicity.items():
        vertex_type = polyhedron.types[vertex]
        by_type.setdefault(vertex_type.label.value if vertex_type else "-", set()).add(count)
    return AlignmentReport(
        aligned=len(assignments),
        total=len(group) - 2,
        assignments=assignments,
        multiplicity=dict(sorted(multiplicity.items())),
        multiplicity_by_type=dict(sorted(by_type.items())),
    )


def inner_icosahedron_check() -> InnerIcosahedronReport:
    """Shell 1 inverted through the unit sphere is the icosahedron φ · (0, ±1, ±φ), radially 1/φ of the C shell."""
    group, polyhedron = build_2I(), m120p_construct()
    shells = shell_decompose(group)
    shell_1, shell_3 = shells[1], shells[3]
    c_vertices = polyhedron.indices_of_type(VertexLabel.C)
    reference = set(inner_icosahedron_vertices())
    pairs = []
    inverted_points = []
    for member in shell_1.members:
        projection = stereo_project(group[member])
        if projection is INFINITY:
            raise AlignmentError(f"Shell 1 element {member} projects to infinity")
        inverted = divide(projection, norm_sq(projection))
        inverted_points.append(inverted)
        matches = [c for c in c_vertices if same_ray(projection, polyhedron.vertices[c])]
        if len(matches) != 1:
            raise AlignmentError(f"Shell 1 element {member} aligns with {len(matches)} C vertices")
        pairs.append((member, matches[0]))
    if len({c for _, c in pairs}) != len(c_vertices):
        raise AlignmentError("Shell 1 does not pair one-to-one with the C vertices")
    if shell_1.radius_sq is None or shell_3.radius_sq is None:
        raise AlignmentError("Shells 1 and 3 must have finite radii")
    inverted_radius_sq = 1 / shell_1.radius_sq
    c_radius_sq = M120P_RADII_SQ[VertexLabel.C]
    return InnerIcosahedronReport(
        pairs=tuple(pairs),
        aligned=len(pairs),
        projected_radius_sq=shell_1.radius_sq,
        inverted_radius_sq=inverted_radius_sq,
        c_radius_sq=c_radius_sq,
        ratio_sq=inverted_radius_sq / c_radius_sq,
        shell_1_to_3_ratio_sq=shell_1.radius_sq / shell_3.radius_sq,
        on_reference_icosahedron=set(inverted_points) == reference,
    )


def phi_ladder_check() -> PhiLadderReport:
    """Each step down the latitude ladder multiplies |w| by 1/φ."""
    ladder = (PHI * HALF, GoldenNum(HALF), PHI_INVERSE * HALF)
    steps = tuple((upper, lower, upper * PHI_INVERSE == lower) for upper, lower in zip(ladder, ladder[1:]))
    full_ladder = ladder + (GoldenNum(0),)
    return PhiLadderReport(steps, full_ladder, tuple(round(gf_to_float(w), 3) for w in full_ladder))
