"""Disdyakis Triacontahedron on the same 62 axis directions.

``disdyakis_construct`` places the shells at radii √3, √(1+φ⁴), φ√(1+φ²). Those radii do not give a convex solid:
the A shell falls inside the hull of the B and C shells, as in the M120p. ``catalan_disdyakis_construct`` is the
convex Catalan solid, the polar dual of the truncated icosidodecahedron, with every vertex in Q(√5)³.
"""
import functools
from typing import Dict

from mereon.goldfield import PHI, GoldenNum
from mereon.goldfield.vectors import norm_sq, same_ray, scale
from mereon.polytopes.icosahedral import icosahedral_frame
from mereon.polytopes.polyhedron import Polyhedron, VertexLabel, edges_from_faces, ensure_integrity
from mereon.utils import setup_logger

logger = setup_logger(__name__)

PHI_SQUARED = PHI * PHI

DISDYAKIS_RADII_SQ: Dict[VertexLabel, GoldenNum] = {
    VertexLabel.A: GoldenNum(3),
    VertexLabel.C: 1 + PHI_SQUARED**2,
    VertexLabel.B: PHI_SQUARED * (1 + PHI_SQUARED),
}

# Polar dual of the truncated icosidodecahedron (edge 2φ − 2): vertex = direction / (|direction| · d), where d is the
# face-plane distance, √3·φ² for hexagons (A), 3 + φ for squares (B), 5φ/√(φ + 2) for decagons (C). Times 5φ overall.
CATALAN_SCALES: Dict[VertexLabel, GoldenNum] = {
    VertexLabel.A: 5 / (3 * PHI),
    VertexLabel.C: GoldenNum(1),
    VertexLabel.B: 5 * PHI / (2 * (3 + PHI)),
}


@functools.lru_cache(maxsize=None)
def disdyakis_construct() -> Polyhedron:
    frame = icosahedral_frame()
    scales_sq = tuple(
        DISDYAKIS_RADII_SQ[vertex_type.label] / norm_sq(direction)
        for direction, vertex_type in zip(frame.directions, frame.types)
    )
    polyhedron = Polyhedron(
        name="disdyakis",
        vertices=frame.directions,
        types=frame.types,
        edges=edges_from_faces(frame.faces),
        faces=frame.faces,
        scales_sq=scales_sq,
    )
    ensure_integrity(polyhedron, vertices=62, edges=180, faces=120)
    logger.info(f"Built disdyakis: {len(polyhedron.vertices)} vertices, {len(polyhedron.faces)} faces")
    return polyhedron


@functools.lru_cache(maxsize=None)
def catalan_disdyakis_construct() -> Polyhedron:
    frame = icosahedral_frame()
    vertices = tuple(
        scale(direction, CATALAN_SCALES[vertex_type.label])
        for direction, vertex_type in zip(frame.directions, frame.types)
    )
    polyhedron = Polyhedron(
        name="disdyakis-catalan",
        vertices=vertices,
        types=frame.types,
        edges=edges_from_faces(frame.faces),
        faces=frame.faces,
    )
    ensure_integrity(polyhedron, vertices=62, edges=180, faces=120)
    logger.info(f"Built disdyakis-catalan: {len(polyhedron.vertices)} vertices, {len(polyhedron.faces)} faces")
    return polyhedron


def directions_coincide(p: Polyhedron, q: Polyhedron) -> bool:
    """Same set of rays, exact cross-product test."""
    return len(p.vertices) == len(q.vertices) and all(
        any(same_ray(u, v) for v in q.vertices) for u in p.vertices
    )
