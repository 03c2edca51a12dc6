from mereon.quatgroup.analysis import (
    ConjugacyClass,
    InfiniteOrderError,
    ObstructionReport,
    RotationAngleRow,
    class_of,
    conjugacy_classes,
    coordinate_field,
    element_order,
    element_orders,
    rotation_angle_consistent,
    rotation_angle_table,
    subgroup_obstruction_2O_in_2I,
    tetrahedral_cosets,
    tetrahedral_inclusions,
)
from mereon.quatgroup.groups import (
    BinaryGroup,
    ClosureCapExceededError,
    ConstructionIntegrityError,
    GroupLabel,
    as_quad2,
    build_2I,
    build_2O,
    build_2T,
    closure,
    icosian_families,
    is_subgroup,
)
from mereon.quatgroup.quaternion import (
    GoldenQuaternion,
    Quad2Quaternion,
    Quaternion,
    golden_quaternion,
    q_mul,
    q_rotate,
    quad2_quaternion,
    rotation_matrix,
)

__all__ = [
    "BinaryGroup",
    "ClosureCapExceededError",
    "ConjugacyClass",
    "ConstructionIntegrityError",
    "GoldenQuaternion",
    "GroupLabel",
    "InfiniteOrderError",
    "ObstructionReport",
    "Quad2Quaternion",
    "Quaternion",
    "RotationAngleRow",
    "as_quad2",
    "build_2I",
    "build_2O",
    "build_2T",
    "class_of",
    "closure",
    "conjugacy_classes",
    "coordinate_field",
    "element_order",
    "element_orders",
    "golden_quaternion",
    "icosian_families",
    "is_subgroup",
    "q_mul",
    "q_rotate",
    "quad2_quaternion",
    "rotation_angle_consistent",
    "rotation_angle_table",
    "rotation_matrix",
    "subgroup_obstruction_2O_in_2I",
    "tetrahedral_cosets",
    "tetrahedral_inclusions",
]
