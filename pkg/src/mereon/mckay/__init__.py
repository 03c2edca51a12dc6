from mereon.mckay.characters import (
    CHARACTER_TOLERANCE,
    ORTHOGONALITY_TOLERANCE,
    CharacterTable,
    DegenerateEigenspaceError,
    character_table,
    defining_character,
    orthogonality_holds,
)
from mereon.mckay.classes import ClassData, class_algebra, class_matrices_commute, counting_identity_holds
from mereon.mckay.graph import (
    ADELabel,
    KernelReport,
    McKayGraph,
    NonIntegralAdjacencyError,
    SubDiagramReport,
    ade_classify,
    ade_classify_adjacency,
    ade_family,
    affine_d,
    affine_kernel_check,
    finite_diagram,
    mckay_graph,
    star_with_arms,
    sub_diagram_check,
    template,
)

__all__ = [
    "ADELabel",
    "CHARACTER_TOLERANCE",
    "CharacterTable",
    "ClassData",
    "DegenerateEigenspaceError",
    "KernelReport",
    "McKayGraph",
    "NonIntegralAdjacencyError",
    "ORTHOGONALITY_TOLERANCE",
    "SubDiagramReport",
    "ade_classify",
    "ade_classify_adjacency",
    "ade_family",
    "affine_d",
    "affine_kernel_check",
    "character_table",
    "class_algebra",
    "class_matrices_commute",
    "counting_identity_holds",
    "defining_character",
    "finite_diagram",
    "mckay_graph",
    "orthogonality_holds",
    "star_with_arms",
    "sub_diagram_check",
    "template",
]
