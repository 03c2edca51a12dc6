from enum import Enum
from typing import Optional, Sequence, Union

from mereon.goldfield import PHI, GoldenNum
from mereon.goldfield.vectors import Vector3, divide, same_ray
from mereon.polytopes import VertexType, icosahedral_frame
from mereon.quatgroup import GoldenQuaternion

UNIT_SCALE = 2 * PHI * PHI


class PointAtInfinity(Enum):
    INFINITY = "∞"

    def __str__(self) -> str:
        return self.value


INFINITY = PointAtInfinity.INFINITY

Projection = Union[Vector3, PointAtInfinity]


def scale_to_unit(v: Vector3) -> Vector3:
    """Shrinks M120p coordinates so that the B shell lands on the unit sphere."""
    return divide(v, UNIT_SCALE)


def stereo_project(q: GoldenQuaternion) -> Projection:
    """Stereographic projection from (−1, 0, 0, 0): (x, y, z) / (1 + w)."""
    if q.w == -1:
        return INFINITY
    return divide(q.imaginary(), 1 + q.w)


def radius_sq_for_w(w: GoldenNum) -> Optional[GoldenNum]:
    """|π(q)|² = (1 − w) / (1 + w); None at the point at infinity."""
    if w == -1:
        return None
    return (1 - w) / (1 + w)


def direction_index(v: Vector3, directions: Sequence[Vector3]) -> Optional[int]:
    return next((i for i, d in enumerate(directions) if same_ray(v, d)), None)


def direction_type(v: Vector3) -> Optional[VertexType]:
    """Type of the icosahedral axis the vector points along, if any."""
    frame = icosahedral_frame()
    if (index := direction_index(v, frame.directions)) is None:
        return None
    return frame.types[index]
