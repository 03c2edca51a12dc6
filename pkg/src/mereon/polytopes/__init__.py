from mereon.polytopes.cells import cell24_vertices, cell600_vertices
from mereon.polytopes.disdyakis import (
    CATALAN_SCALES,
    DISDYAKIS_RADII_SQ,
    catalan_disdyakis_construct,
    directions_coincide,
    disdyakis_construct,
)
from mereon.polytopes.hull import DegenerateHullError, HullPoint, HullResult, convex_hull, polyhedron_hull
from mereon.polytopes.icosahedral import IcosahedralFrame, icosahedral_directions, icosahedral_frame
from mereon.polytopes.m120p import M120P_RADII_SQ, edge_type_census, has_trinity, m120p_construct
from mereon.polytopes.m144p import APPENDIX_A, m144p_construct, matches_appendix_a
from mereon.polytopes.polyhedron import (
    TYPE_A,
    TYPE_B,
    TYPE_C,
    VERTEX_TYPES,
    MeshIntegrityError,
    MeshIntegrityReport,
    Polyhedron,
    RadiusRatioReport,
    SymmetryReport,
    VertexLabel,
    VertexRole,
    VertexType,
    edge_length_census,
    edges_from_faces,
    mesh_integrity,
    radius_ratio_report,
    shell_census,
    symmetry_report,
)

__all__ = [
    "APPENDIX_A",
    "CATALAN_SCALES",
    "DISDYAKIS_RADII_SQ",
    "DegenerateHullError",
    "HullPoint",
    "HullResult",
    "IcosahedralFrame",
    "M120P_RADII_SQ",
    "MeshIntegrityError",
    "MeshIntegrityReport",
    "Polyhedron",
    "RadiusRatioReport",
    "SymmetryReport",
    "TYPE_A",
    "TYPE_B",
    "TYPE_C",
    "VERTEX_TYPES",
    "VertexLabel",
    "VertexRole",
    "VertexType",
    "catalan_disdyakis_construct",
    "cell24_vertices",
    "cell600_vertices",
    "convex_hull",
    "directions_coincide",
    "disdyakis_construct",
    "edge_length_census",
    "edge_type_census",
    "edges_from_faces",
    "has_trinity",
    "icosahedral_directions",
    "icosahedral_frame",
    "m120p_construct",
    "m144p_construct",
    "matches_appendix_a",
    "mesh_integrity",
    "polyhedron_hull",
    "radius_ratio_report",
    "shell_census",
    "symmetry_report",
]
