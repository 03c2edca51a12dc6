"""The 144-face crystallographic core, built on the FCC 6-frequency octahedron."""
import itertools
import math
from typing import FrozenSet, List, Sequence, Tuple

from mereon.goldfield.vectors import Vector3, vec3
from mereon.polytopes.polyhedron import (
    Face,
    MeshIntegrityError,
    Polyhedron,
    edges_from_faces,
    ensure_integrity,
    orient_outward,
)
from mereon.utils import setup_logger

logger = setup_logger(__name__)

IntVector = Tuple[int, int, int]

OUTER_FREQUENCY = 6
INNER_FREQUENCY = 4

APPENDIX_A: Tuple[IntVector, ...] = (
    # octahedron vertices, r² = 16
    (4, 0, 0),
    (0, 4, 0),
    (0, 0, 4),
    (-4, 0, 0),
    (0, -4, 0),
    (0, 0, -4),
    # face centres, r² = 12
    (2, 2, 2),
    (2, 2, -2),
    (2, -2, 2),
    (2, -2, -2),
    (-2, 2, 2),
    (-2, 2, -2),
    (-2, -2, 2),
    (-2, -2, -2),
    # edge midpoints, r² = 8
    (2, 2, 0),
    (2, 0, 2),
    (0, 2, 2),
    (2, -2, 0),
    (2, 0, -2),
    (0, 2, -2),
    (-2, 2, 0),
    (-2, 0, 2),
    (0, -2, 2),
    (-2, -2, 0),
    (-2, 0, -2),
    (0, -2, -2),
    # hexagon vertices, r² = 14
    (1, 2, 3),
    (1, 2, -3),
    (1, -2, 3),
    (1, -2, -3),
    (-1, 2, 3),
    (-1, 2, -3),
    (-1, -2, 3),
    (-1, -2, -3),
    (1, 3, 2),
    (1, 3, -2),
    (1, -3, 2),
    (1, -3, -2),
    (-1, 3, 2),
    (-1, 3, -2),
    (-1, -3, 2),
    (-1, -3, -2),
    (2, 1, 3),
    (2, 1, -3),
    (2, -1, 3),
    (2, -1, -3),
    (-2, 1, 3),
    (-2, 1, -3),
    (-2, -1, 3),
    (-2, -1, -3),
    (2, 3, 1),
    (2, 3, -1),
    (2, -3, 1),
    (2, -3, -1),
    (-2, 3, 1),
    (-2, 3, -1),
    (-2, -3, 1),
    (-2, -3, -1),
    (3, 1, 2),
    (3, 1, -2),
    (3, -1, 2),
    (3, -1, -2),
    (-3, 1, 2),
    (-3, 1, -2),
    (-3, -1, 2),
    (-3, -1, -2),
    (3, 2, 1),
    (3, 2, -1),
    (3, -2, 1),
    (3, -2, -1),
    (-3, 2, 1),
    (-3, 2, -1),
    (-3, -2, 1),
    (-3, -2, -1),
)

def octahedron_face_nodes(frequency: int) -> List[IntVector]:
    """FCC nodes on the surface of the octahedron |x| + |y| + |z| = frequency."""
    span = range(-frequency, frequency + 1)
    return [p for p in itertools.product(span, repeat=3) if sum(map(abs, p)) == frequency]


def is_edge_node(p: IntVector) -> bool:
    return 0 in p


def is_face_corner(p: IntVector, frequency: int = OUTER_FREQUENCY) -> bool:
    return sorted(map(abs, p)) == [1, 1, frequency - 2]


def inner_octahedron_nodes(frequency: int = INNER_FREQUENCY) -> List[IntVector]:
    """Vertices and mid-edge nodes of the inner octahedron."""
    half = frequency // 2
    return [p for p in octahedron_face_nodes(frequency) if sorted(map(abs, p)) in ([0, 0, frequency], [0, half, half])]


def surviving_nodes() -> List[IntVector]:
    nodes = octahedron_face_nodes(OUTER_FREQUENCY)
    nodes = [p for p in nodes if not is_edge_node(p)]
    nodes = [p for p in nodes if not is_face_corner(p)]
    return nodes + inner_octahedron_nodes()


def _signed(p: IntVector, signs: IntVector) -> IntVector:
    return (p[0] * signs[0], p[1] * signs[1], p[2] * signs[2])


def face_ring(signs: IntVector) -> Tuple[IntVector, List[IntVector]]:
    """Centre of one octahedron face and the 12 surviving nodes around it in angular order.

    The ring starts at an inner-octahedron node, so inner nodes sit at even positions and hexagon nodes between them.
    """
    nodes = [p for p in surviving_nodes() if all(c * s >= 0 for c, s in zip(p, signs))]
    centres = [p for p in nodes if len(set(map(abs, p))) == 1]
    if len(centres) != 1 or len(nodes) != 13:
        raise MeshIntegrityError(f"m144p: face {signs} has {len(nodes)} nodes and {len(centres)} centres")
    centre = centres[0]
    # orthogonal in-plane axes for the face normal `signs`
    u = (signs[0], -signs[1], 0)
    v = (signs[0], signs[1], -2 * signs[2])

    def angle(p: IntVector) -> float:
        d = tuple(a - b for a, b in zip(p, centre))
        x = sum(a * b for a, b in zip(d, u)) / math.sqrt(2)
        y = sum(a * b for a, b in zip(d, v)) / math.sqrt(6)
        return math.atan2(y, x)

    ring = sorted((p for p in nodes if p != centre), key=angle)
    start = next(i for i, p in enumerate(ring) if sum(map(abs, p)) == INNER_FREQUENCY)
    return centre, ring[start:] + ring[:start]


def face_triangles(signs: IntVector) -> List[Tuple[IntVector, IntVector, IntVector]]:
    """18 triangles of one octahedron face: the 12-triangle star around the centre and 6 concavity triangles."""
    centre, ring = face_ring(signs)
    star = [(centre, ring[i], ring[(i + 1) % len(ring)]) for i in range(len(ring))]
    concavities = [(ring[i], ring[i + 1], ring[(i + 2) % len(ring)]) for i in range(0, len(ring), 2)]
    return star + concavities


def m144p_construct() -> Polyhedron:
    points = sorted(set(surviving_nodes()))
    index = {p: i for i, p in enumerate(points)}
    vertices: List[Vector3] = [vec3(*p) for p in points]
    faces: List[Face] = []
    for signs in itertools.product((1, -1), repeat=3):
        for a, b, c in face_triangles(signs):
            faces.append(orient_outward(vertices, (index[a], index[b], index[c])))
    polyhedron = Polyhedron(
        name="m144p",
        vertices=tuple(vertices),
        types=(None,) * len(vertices),
        edges=edges_from_faces(faces),
        faces=tuple(sorted(faces)),
    )
    ensure_integrity(polyhedron, vertices=74, edges=216, faces=144)
    if not matches_appendix_a(polyhedron):
        raise MeshIntegrityError("m144p: vertex set differs from the reference table")
    logger.info(f"Built m144p: {len(polyhedron.vertices)} vertices, {len(polyhedron.faces)} faces")
    return polyhedron


def integer_vertex_set(vertices: Sequence[Vector3]) -> FrozenSet[Tuple[object, ...]]:
    return frozenset(tuple(c.a if c.is_rational() else c for c in v) for v in vertices)


def matches_appendix_a(p: Polyhedron) -> bool:
    return len(p.vertices) == len(APPENDIX_A) and integer_vertex_set(p.vertices) == frozenset(APPENDIX_A)
