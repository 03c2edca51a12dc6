import math
from fractions import Fraction
from typing import Optional, Union

Rational = Fraction
RationalLike = Union[int, Fraction]


def to_rational(value: RationalLike) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"Expected int or Fraction, got {type(value).__name__}")


def rational_sign(value: RationalLike) -> int:
    return (value > 0) - (value < 0)


def rational_sqrt(value: RationalLike) -> Optional[Fraction]:
    """Returns the nonnegative rational square root, or None if the value is not a rational square."""
    value = to_rational(value)
    if value < 0:
        return None
    numerator_root = math.isqrt(value.numerator)
    denominator_root = math.isqrt(value.denominator)
    if numerator_root * numerator_root != value.numerator or denominator_root * denominator_root != value.denominator:
        return None
    return Fraction(numerator_root, denominator_root)


def surd_sign(p: RationalLike, q: RationalLike, d: int) -> int:
    """Exact sign of p + q·√d for rational p, q and a positive non-square d."""
    sign_p, sign_q = rational_sign(p), rational_sign(q)
    if sign_q == 0:
        return sign_p
    if sign_p in (0, sign_q):
        return sign_q
    return sign_p * rational_sign(p * p - q * q * d)


def format_rational(value: RationalLike) -> str:
    value = to_rational(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def parse_rational(text: str) -> Fraction:
    return Fraction(text.strip())
