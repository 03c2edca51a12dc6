from mereon.goldfield.golden import (
    ONE,
    PHI,
    PHI_FLOAT,
    PHI_INVERSE,
    SQRT5,
    ZERO,
    GoldenNum,
    NegativeInputError,
    gf_conjugate,
    gf_inverse,
    gf_mul,
    gf_norm,
    gf_sign,
    gf_sqrt_in_field,
    gf_to_float,
)
from mereon.goldfield.quadratic import FieldMismatchError, QuadNum
from mereon.goldfield.radicals import RadicalSum
from mereon.goldfield.rational import Rational, format_rational, rational_sqrt, surd_sign
from mereon.goldfield.vectors import Vector3, vec3

__all__ = [
    "FieldMismatchError",
    "GoldenNum",
    "NegativeInputError",
    "ONE",
    "PHI",
    "PHI_FLOAT",
    "PHI_INVERSE",
    "QuadNum",
    "RadicalSum",
    "Rational",
    "SQRT5",
    "Vector3",
    "ZERO",
    "format_rational",
    "gf_conjugate",
    "gf_inverse",
    "gf_mul",
    "gf_norm",
    "gf_sign",
    "gf_sqrt_in_field",
    "gf_to_float",
    "rational_sqrt",
    "surd_sign",
    "vec3",
]
