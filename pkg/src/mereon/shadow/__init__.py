from mereon.shadow.alignment import (
    AlignmentError,
    AlignmentReport,
    InnerIcosahedronReport,
    PhiLadderReport,
    angular_alignment_check,
    inner_icosahedron_check,
    inner_icosahedron_vertices,
    phi_ladder_check,
)
from mereon.shadow.lift import (
    LiftedVertex,
    MatchReport,
    NoMatchError,
    NoRootInFieldError,
    lift,
    type_from_w,
    verify_62_match,
)
from mereon.shadow.projection import (
    INFINITY,
    PointAtInfinity,
    Projection,
    direction_type,
    radius_sq_for_w,
    scale_to_unit,
    stereo_project,
)
from mereon.shadow.shells import (
    SHELL_CLOSED_FORMS,
    Cell24Report,
    ReciprocalReport,
    Shell,
    StratificationError,
    UpperLowerCensus,
    cell24_shell_check,
    reciprocal_pair_check,
    shell_decompose,
    shell_types_per_label,
    stratify,
    upper_lower_census,
)
from mereon.shadow.symmetry import FaceOrbitMap, OrbitSizeError, face_orbit_bijection, icosahedral_matrices

__all__ = [
    "AlignmentError",
    "AlignmentReport",
    "Cell24Report",
    "FaceOrbitMap",
    "INFINITY",
    "InnerIcosahedronReport",
    "LiftedVertex",
    "MatchReport",
    "NoMatchError",
    "NoRootInFieldError",
    "OrbitSizeError",
    "PhiLadderReport",
    "PointAtInfinity",
    "Projection",
    "ReciprocalReport",
    "SHELL_CLOSED_FORMS",
    "Shell",
    "StratificationError",
    "UpperLowerCensus",
    "angular_alignment_check",
    "cell24_shell_check",
    "direction_type",
    "face_orbit_bijection",
    "icosahedral_matrices",
    "inner_icosahedron_check",
    "inner_icosahedron_vertices",
    "lift",
    "phi_ladder_check",
    "radius_sq_for_w",
    "reciprocal_pair_check",
    "scale_to_unit",
    "shell_decompose",
    "shell_types_per_label",
    "stereo_project",
    "stratify",
    "type_from_w",
    "upper_lower_census",
    "verify_62_match",
]
