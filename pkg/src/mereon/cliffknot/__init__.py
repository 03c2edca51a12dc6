from mereon.cliffknot.congruence import (
    MERON_KNOT,
    STANDARD_KNOT,
    CongruenceReport,
    clifford_rotation,
    congruence_check,
    integer_determinant,
    is_orthogonal,
)
from mereon.cliffknot.knot import (
    DEFAULT_SAMPLES,
    KNOT_TOLERANCE,
    InsufficientSamplingError,
    InvalidKnotSpecError,
    KnotSample,
    TorusKnotSpec,
    knot_polyline,
    on_clifford_torus,
    projection_residual,
    ring_torus_residual,
    sample_knot,
    stereo_north,
    torus_knot_point,
    torus_knot_points,
    winding_numbers,
)
from mereon.cliffknot.torus import (
    PAIRINGS,
    ExponentFoldRow,
    TorusMembershipReport,
    clifford_torus_membership,
    exponent_fold_table,
)

__all__ = [
    "CongruenceReport",
    "DEFAULT_SAMPLES",
    "ExponentFoldRow",
    "InsufficientSamplingError",
    "InvalidKnotSpecError",
    "KNOT_TOLERANCE",
    "KnotSample",
    "MERON_KNOT",
    "PAIRINGS",
    "STANDARD_KNOT",
    "TorusKnotSpec",
    "TorusMembershipReport",
    "clifford_rotation",
    "clifford_torus_membership",
    "congruence_check",
    "exponent_fold_table",
    "integer_determinant",
    "is_orthogonal",
    "knot_polyline",
    "on_clifford_torus",
    "projection_residual",
    "ring_torus_residual",
    "sample_knot",
    "stereo_north",
    "torus_knot_point",
    "torus_knot_points",
    "winding_numbers",
]
