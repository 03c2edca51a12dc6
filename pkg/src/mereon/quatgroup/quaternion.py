from dataclasses import dataclass
from typing import Any, Generic, Tuple, TypeVar, Union

from mereon.goldfield import GoldenNum, QuadNum
from mereon.goldfield.vectors import Vector3

F = TypeVar("F", GoldenNum, QuadNum)


@dataclass(frozen=True, order=True)
class Quaternion(Generic[F]):
    """q = w + xi + yj + zk over an exact field; ordering is lexicographic on (w, x, y, z)."""

    w: F
    x: F
    y: F
    z: F

    def __mul__(self, other: "Quaternion[F]") -> "Quaternion[F]":
        if not isinstance(other, Quaternion):
            return NotImplemented
        return q_mul(self, other)

    def __neg__(self) -> "Quaternion[F]":
        return Quaternion(-self.w, -self.x, -self.y, -self.z)

    def conjugate(self) -> "Quaternion[F]":
        return Quaternion(self.w, -self.x, -self.y, -self.z)

    def norm_sq(self) -> F:
        return self.w * self.w + self.x * self.x + self.y * self.y + self.z * self.z

    def is_unit(self) -> bool:
        return bool(self.norm_sq() == 1)

    def one(self) -> "Quaternion[F]":
        zero = self.w * 0
        return Quaternion(zero + 1, zero, zero, zero)

    def is_one(self) -> bool:
        return bool(self.w == 1 and not self.x and not self.y and not self.z)

    def imaginary(self) -> Tuple[F, F, F]:
        return (self.x, self.y, self.z)

    def components(self) -> Tuple[F, F, F, F]:
        return (self.w, self.x, self.y, self.z)

    def to_floats(self) -> Tuple[float, float, float, float]:
        return (float(self.w), float(self.x), float(self.y), float(self.z))

    def to_exact_strings(self) -> Tuple[str, str, str, str]:
        return (str(self.w), str(self.x), str(self.y), str(self.z))


GoldenQuaternion = Quaternion[GoldenNum]
Quad2Quaternion = Quaternion[QuadNum]


def golden_quaternion(w: Any, x: Any, y: Any, z: Any) -> GoldenQuaternion:
    return Quaternion(GoldenNum.coerce(w), GoldenNum.coerce(x), GoldenNum.coerce(y), GoldenNum.coerce(z))


def quad2_quaternion(w: Any, x: Any, y: Any, z: Any) -> Quad2Quaternion:
    def coerce(value: Union[QuadNum, Any]) -> QuadNum:
        return value if isinstance(value, QuadNum) else QuadNum(2, value)

    return Quaternion(coerce(w), coerce(x), coerce(y), coerce(z))


def q_mul(p: Quaternion[F], q: Quaternion[F]) -> Quaternion[F]:
    """Hamilton product."""
    return Quaternion(
        p.w * q.w - p.x * q.x - p.y * q.y - p.z * q.z,
        p.w * q.x + p.x * q.w + p.y * q.z - p.z * q.y,
        p.w * q.y - p.x * q.z + p.y * q.w + p.z * q.x,
        p.w * q.z + p.x * q.y - p.y * q.x + p.z * q.w,
    )


def q_rotate(q: GoldenQuaternion, v: Vector3) -> Vector3:
    """R_q(v) = q v q̄ for a unit quaternion q."""
    zero = v[0] * 0
    rotated = q_mul(q_mul(q, Quaternion(zero, v[0], v[1], v[2])), q.conjugate())
    return rotated.imaginary()


def rotation_matrix(q: GoldenQuaternion) -> Tuple[Vector3, Vector3, Vector3]:
    """Exact 3×3 matrix of R_q, rows first."""
    w, x, y, z = q.w, q.x, q.y, q.z
    return (
        (1 - 2 * (y * y + z * z), 2 * (x * y - w * z), 2 * (x * z + w * y)),
        (2 * (x * y + w * z), 1 - 2 * (x * x + z * z), 2 * (y * z - w * x)),
        (2 * (x * z - w * y), 2 * (y * z + w * x), 1 - 2 * (x * x + y * y)),
    )
