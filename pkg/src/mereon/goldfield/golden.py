"""Exact arithmetic in Q(√5) with basis {1, φ}, φ = (1 + √5) / 2."""
import math
import re
from fractions import Fraction
from typing import Any, Optional, Union

from mereon.goldfield.rational import (
    RationalLike,
    format_rational,
    parse_rational,
    rational_sqrt,
    surd_sign,
    to_rational,
)

PHI_FLOAT = (1.0 + math.sqrt(5.0)) / 2.0

_EXACT_PATTERN = re.compile(r"^\s*(?P<a>-?\d+(?:/\d+)?)\s*\+\s*\(?(?P<b>-?\d+(?:/\d+)?)\)?\s*·\s*phi\s*$")


class NegativeInputError(Exception):
    pass


class GoldenNum:
    """Immutable value a + b·φ with rational a, b."""

    __slots__ = ("a", "b")

    a: Fraction
    b: Fraction

    def __init__(self, a: RationalLike = 0, b: RationalLike = 0) -> None:
        object.__setattr__(self, "a", to_rational(a))
        object.__setattr__(self, "b", to_rational(b))

    def __setattr__(self, name: str, value: Any) -> None:
        raise AttributeError(f"{self.__class__.__name__} is immutable")

    def __reduce__(self) -> Any:
        return (GoldenNum, (self.a, self.b))

    @staticmethod
    def coerce(value: Union["GoldenNum", RationalLike]) -> "GoldenNum":
        if isinstance(value, GoldenNum):
            return value
        return GoldenNum(value)

    @classmethod
    def parse(cls, text: str) -> "GoldenNum":
        """Parses the exact rendering produced by ``str()``: ``"p/q + (r/s)·phi"``."""
        if not (match := _EXACT_PATTERN.match(text)):
            raise ValueError(f"Not an exact golden number: '{text}'")
        return cls(parse_rational(match.group("a")), parse_rational(match.group("b")))

    def __add__(self, other: Any) -> "GoldenNum":
        if not isinstance(other, (GoldenNum, int, Fraction)):
            return NotImplemented
        other = GoldenNum.coerce(other)
        return GoldenNum(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __sub__(self, other: Any) -> "GoldenNum":
        if not isinstance(other, (GoldenNum, int, Fraction)):
            return NotImplemented
        other = GoldenNum.coerce(other)
        return GoldenNum(self.a - other.a, self.b - other.b)

    def __rsub__(self, other: Any) -> "GoldenNum":
        if not isinstance(other, (int, Fraction)):
            return NotImplemented
        return GoldenNum.coerce(other) - self

    def __neg__(self) -> "GoldenNum":
        return GoldenNum(-self.a, -self.b)

    def __pos__(self) -> "GoldenNum":
        return self

    def __mul__(self, other: Any) -> "GoldenNum":
        if isinstance(other, (int, Fraction)):
            return GoldenNum(self.a * other, self.b * other)
        if not isinstance(other, GoldenNum):
            return NotImplemented
        return gf_mul(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other: Any) -> "GoldenNum":
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("GoldenNum division by zero")
            return GoldenNum(self.a / other, self.b / other)
        if not isinstance(other, GoldenNum):
            return NotImplemented
        return gf_mul(self, gf_inverse(other))

    def __rtruediv__(self, other: Any) -> "GoldenNum":
        if not isinstance(other, (int, Fraction)):
            return NotImplemented
        return gf_mul(GoldenNum(other), gf_inverse(self))

    def __pow__(self, exponent: int) -> "GoldenNum":
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return gf_inverse(self) ** -exponent
        result, base = ONE, self
        while exponent:
            if exponent & 1:
                result = gf_mul(result, base)
            base = gf_mul(base, base)
            exponent >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, GoldenNum):
            return self.a == other.a and self.b == other.b
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and self.a == other
        return NotImplemented

    def __hash__(self) -> int:
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b))

    def __lt__(self, other: Any) -> bool:
        if not isinstance(other, (GoldenNum, int, Fraction)):
            return NotImplemented
        return gf_sign(self - other) < 0

    def __le__(self, other: Any) -> bool:
        if not isinstance(other, (GoldenNum, int, Fraction)):
            return NotImplemented
        return gf_sign(self - other) <= 0

    def __gt__(self, other: Any) -> bool:
        if not isinstance(other, (GoldenNum, int, Fraction)):
            return NotImplemented
        return gf_sign(self - other) > 0

    def __ge__(self, other: Any) -> bool:
        if not isinstance(other, (GoldenNum, int, Fraction)):
            return NotImplemented
        return gf_sign(self - other) >= 0

    def __bool__(self) -> bool:
        return bool(self.a) or bool(self.b)

    def __float__(self) -> float:
        return gf_to_float(self)

    def __abs__(self) -> "GoldenNum":
        return -self if gf_sign(self) < 0 else self

    def __repr__(self) -> str:
        return f"GoldenNum({format_rational(self.a)}, {format_rational(self.b)})"

    def __str__(self) -> str:
        return self.to_exact_string()

    def to_exact_string(self) -> str:
        b = format_rational(self.b)
        if self.b.denominator != 1 or self.b < 0:
            b = f"({b})"
        return f"{format_rational(self.a)} + {b}·phi"

    def to_decimal_string(self, digits: int = 4) -> str:
        return f"{gf_to_float(self):.{digits}f}"

    def sign(self) -> int:
        return gf_sign(self)

    def conjugate(self) -> "GoldenNum":
        return gf_conjugate(self)

    def inverse(self) -> "GoldenNum":
        return gf_inverse(self)

    def sqrt(self) -> Optional["GoldenNum"]:
        return gf_sqrt_in_field(self)

    def is_rational(self) -> bool:
        return self.b == 0


ZERO = GoldenNum(0)
ONE = GoldenNum(1)
PHI = GoldenNum(0, 1)
PHI_INVERSE = GoldenNum(-1, 1)
SQRT5 = GoldenNum(-1, 2)


def gf_mul(x: GoldenNum, y: GoldenNum) -> GoldenNum:
    bb = x.b * y.b
    return GoldenNum(x.a * y.a + bb, x.a * y.b + y.a * x.b + bb)


def gf_conjugate(x: GoldenNum) -> GoldenNum:
    """Galois conjugate φ ↦ 1 − φ."""
    return GoldenNum(x.a + x.b, -x.b)


def gf_norm(x: GoldenNum) -> Fraction:
    """x · conj(x), always rational."""
    return x.a * x.a + x.a * x.b - x.b * x.b


def gf_inverse(x: GoldenNum) -> GoldenNum:
    norm = gf_norm(x)
    if norm == 0:
        raise ZeroDivisionError("GoldenNum inverse of zero")
    conjugate = gf_conjugate(x)
    return GoldenNum(conjugate.a / norm, conjugate.b / norm)


def gf_sign(x: GoldenNum) -> int:
    # a + bφ = ((2a + b) + b√5) / 2
    return surd_sign(2 * x.a + x.b, x.b, 5)


def gf_to_float(x: GoldenNum) -> float:
    return float(x.a) + float(x.b) * PHI_FLOAT


def gf_sqrt_in_field(x: GoldenNum) -> Optional[GoldenNum]:
    """Nonnegative square root of x inside Q(√5), or None when x is not a square there."""
    if gf_sign(x) < 0:
        raise NegativeInputError(f"Square root of negative value: {x}")
    if not x:
        return ZERO
    # x = u + v√5, root = s + t√5 with s² + 5t² = u and 2st = v
    u, v = x.a + x.b / 2, x.b / 2
    if (r := rational_sqrt(u * u - 5 * v * v)) is None:
        return None
    for s_sq in ((u + r) / 2, (u - r) / 2):
        if (s := rational_sqrt(s_sq)) is None:
            continue
        if s:
            t: Optional[Fraction] = v / (2 * s)
        else:
            t = rational_sqrt(u / 5)
        if t is None:
            continue
        root = GoldenNum(s - t, 2 * t)
        if gf_sign(root) < 0:
            root = -root
        if gf_mul(root, root) == x:
            return root
    return None
