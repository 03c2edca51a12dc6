from typing import Tuple, Union

from mereon.goldfield.golden import ZERO, GoldenNum, gf_sign, gf_to_float
from mereon.goldfield.rational import RationalLike

Vector3 = Tuple[GoldenNum, GoldenNum, GoldenNum]
Scalar = Union[GoldenNum, RationalLike]


def vec3(x: Scalar, y: Scalar, z: Scalar) -> Vector3:
    return (GoldenNum.coerce(x), GoldenNum.coerce(y), GoldenNum.coerce(z))


def add(u: Vector3, v: Vector3) -> Vector3:
    return (u[0] + v[0], u[1] + v[1], u[2] + v[2])


def sub(u: Vector3, v: Vector3) -> Vector3:
    return (u[0] - v[0], u[1] - v[1], u[2] - v[2])


def scale(u: Vector3, factor: Scalar) -> Vector3:
    return (u[0] * factor, u[1] * factor, u[2] * factor)


def divide(u: Vector3, divisor: Scalar) -> Vector3:
    return (u[0] / divisor, u[1] / divisor, u[2] / divisor)


def neg(u: Vector3) -> Vector3:
    return (-u[0], -u[1], -u[2])


def dot(u: Vector3, v: Vector3) -> GoldenNum:
    return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]


def norm_sq(u: Vector3) -> GoldenNum:
    return dot(u, u)


def cross(u: Vector3, v: Vector3) -> Vector3:
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


def det3(u: Vector3, v: Vector3, w: Vector3) -> GoldenNum:
    return dot(u, cross(v, w))


def is_zero(u: Vector3) -> bool:
    return not (u[0] or u[1] or u[2])


def same_ray(u: Vector3, v: Vector3) -> bool:
    """Exactly parallel and pointing the same way: zero cross product and positive dot product."""
    return is_zero(cross(u, v)) and gf_sign(dot(u, v)) > 0


def to_floats(u: Vector3) -> Tuple[float, float, float]:
    return (gf_to_float(u[0]), gf_to_float(u[1]), gf_to_float(u[2]))


ORIGIN: Vector3 = (ZERO, ZERO, ZERO)
