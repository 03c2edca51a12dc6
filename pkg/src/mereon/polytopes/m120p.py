"""The 120-face non-crystallographic boundary: 20 A, 12 C and 30 B vertices on three shells."""
import functools
from typing import Dict

from mereon.goldfield import PHI, GoldenNum
from mereon.goldfield.vectors import scale
from mereon.polytopes.icosahedral import icosahedral_frame
from mereon.polytopes.polyhedron import (
    MeshIntegrityError,
    Polyhedron,
    VertexLabel,
    edges_from_faces,
    ensure_integrity,
)
from mereon.utils import setup_logger

logger = setup_logger(__name__)

PHI_SQUARED = PHI * PHI
B_SCALE = 2 * PHI_SQUARED

M120P_RADII_SQ: Dict[VertexLabel, GoldenNum] = {
    VertexLabel.A: 3 * PHI_SQUARED**2,
    VertexLabel.C: PHI_SQUARED**2 * (1 + PHI_SQUARED),
    VertexLabel.B: 4 * PHI_SQUARED**2,
}


def has_trinity(p: Polyhedron) -> bool:
    """Every face has exactly one vertex of each type."""
    for face in p.faces:
        labels = sorted(p.types[i].label.value for i in face if p.types[i] is not None)
        if labels != ["A", "B", "C"]:
            return False
    return True


@functools.lru_cache(maxsize=None)
def m120p_construct() -> Polyhedron:
    frame = icosahedral_frame()
    vertices = tuple(scale(direction, PHI_SQUARED) for direction in frame.directions)
    polyhedron = Polyhedron(
        name="m120p",
        vertices=vertices,
        types=frame.types,
        edges=edges_from_faces(frame.faces),
        faces=frame.faces,
    )
    ensure_integrity(polyhedron, vertices=62, edges=180, faces=120)
    if not has_trinity(polyhedron):
        raise MeshIntegrityError("m120p: a face misses one of the A, B, C types")
    for index, vertex_type in enumerate(polyhedron.types):
        if polyhedron.radius_sq(index) != M120P_RADII_SQ[vertex_type.label]:
            raise MeshIntegrityError(f"m120p: vertex {index} is off its {vertex_type.label.value} shell")
    logger.info(f"Built m120p: {len(polyhedron.vertices)} vertices, {len(polyhedron.faces)} faces")
    return polyhedron


def edge_type_census(p: Polyhedron) -> Dict[str, int]:
    census: Dict[str, int] = {}
    for u, v in p.edges:
        key = "-".join(sorted(t.label.value for t in (p.types[u], p.types[v]) if t is not None))
        census[key] = census.get(key, 0) + 1
    return dict(sorted(census.items()))
