"""Mesh data behind ``mereon mesh``: polyhedra, projected 4-polytopes and the knot polyline."""
from fractions import Fraction
from typing import Callable, Dict, List, NamedTuple, Optional, Sequence, Tuple

from mereon.cliffknot import TorusKnotSpec, knot_polyline
from mereon.goldfield import PHI, GoldenNum
from mereon.goldfield.vectors import Vector3, to_floats
from mereon.polytopes import (
    Polyhedron,
    catalan_disdyakis_construct,
    convex_hull,
    disdyakis_construct,
    m120p_construct,
    m144p_construct,
)
from mereon.quatgroup import BinaryGroup, build_2I, build_2T
from mereon.shadow import INFINITY, shell_decompose, stereo_project

HALF = Fraction(1, 2)

FloatVertex = Tuple[float, float, float]


class UnknownMeshError(Exception):
    pass


class MeshData(NamedTuple):
    name: str
    vertices: List[FloatVertex]
    faces: List[Tuple[int, ...]]
    lines: List[Tuple[int, ...]]
    exact: Optional[List[List[str]]] = None


def _exact_vertex(p: Polyhedron, index: int) -> List[str]:
    coordinates = [str(c) for c in p.vertices[index]]
    if p.scales_sq:
        coordinates.append(f"√({p.scale_sq(index)})")
    return coordinates


def polyhedron_mesh(p: Polyhedron) -> MeshData:
    exact = [_exact_vertex(p, i) for i in range(len(p.vertices))]
    return MeshData(p.name, p.float_vertices(), list(p.faces), [], exact)


def projected_cell(group: BinaryGroup[GoldenNum], name: str, edge_dot: GoldenNum) -> MeshData:
    """Stereographic image of the polytope on the group elements.

    Edges join elements with inner product ``edge_dot``; the pole and its edges are dropped.
    """
    kept: Dict[int, int] = {}
    points: List[Vector3] = []
    for index, q in enumerate(group):
        projection = stereo_project(q)
        if projection is INFINITY:
            continue
        kept[index] = len(points)
        points.append(projection)  # type: ignore[arg-type]
    lines = []
    for i, p in enumerate(group):
        for j in range(i + 1, len(group)):
            q = group[j]
            if i in kept and j in kept and p.w * q.w + p.x * q.x + p.y * q.y + p.z * q.z == edge_dot:
                lines.append((kept[i], kept[j]))
    exact = [[str(c) for c in point] for point in points]
    return MeshData(name, [to_floats(point) for point in points], [], lines, exact)


def cell600_projection() -> MeshData:
    return projected_cell(build_2I(), "cell600-projection", PHI * HALF)


def cell24_projection() -> MeshData:
    return projected_cell(build_2T(), "cell24-projection", GoldenNum(HALF))


def inner_icosahedron() -> MeshData:
    """The shell-1 projections of 2I at unit scale, triangulated by their convex hull."""
    group = build_2I()
    shell = shell_decompose(group)[1]
    points: List[Vector3] = [stereo_project(group[member]) for member in shell.members]  # type: ignore[misc]
    hull = convex_hull(points)
    exact = [[str(c) for c in point] for point in points]
    return MeshData("inner-icosahedron", [to_floats(point) for point in points], list(hull.faces), [], exact)


def knot_mesh(spec: TorusKnotSpec, samples: int) -> MeshData:
    points = [tuple(float(c) for c in row) for row in knot_polyline(spec, samples)]
    loop = tuple(range(len(points))) + (0,)
    return MeshData(f"knot-{spec.p}-{spec.q}", points, [], [loop])  # type: ignore[arg-type]


MESHES: Dict[str, Callable[[], MeshData]] = {
    "m144p": lambda: polyhedron_mesh(m144p_construct()),
    "m120p": lambda: polyhedron_mesh(m120p_construct()),
    "disdyakis": lambda: polyhedron_mesh(disdyakis_construct()),
    "disdyakis-catalan": lambda: polyhedron_mesh(catalan_disdyakis_construct()),
    "cell600-projection": cell600_projection,
    "cell24-projection": cell24_projection,
    "inner-icosahedron": inner_icosahedron,
}
MESH_NAMES: Sequence[str] = (*MESHES, "knot")


def build_mesh(name: str, spec: Optional[TorusKnotSpec] = None, samples: int = 1024) -> MeshData:
    if name == "knot":
        return knot_mesh(spec or TorusKnotSpec(3, 2), samples)
    if (builder := MESHES.get(name)) is None:
        raise UnknownMeshError(f"Unknown mesh '{name}', expected one of {', '.join(MESH_NAMES)}")
    return builder()
