import math
from fractions import Fraction
from typing import Any, Union

from mereon.goldfield.rational import RationalLike, format_rational, surd_sign, to_rational


class FieldMismatchError(Exception):
    pass


def _is_squarefree(d: int) -> bool:
    return d > 1 and all(d % (k * k) for k in range(2, math.isqrt(d) + 1))


class QuadNum:
    """Immutable value a + b·√d of Q(√d), d a positive squarefree integer."""

    __slots__ = ("d", "a", "b")

    d: int
    a: Fraction
    b: Fraction

    def __init__(self, d: int, a: RationalLike = 0, b: RationalLike = 0) -> None:
        if not _is_squarefree(d):
            raise ValueError(f"Expected a squarefree integer > 1, got {d}")
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "a", to_rational(a))
        object.__setattr__(self, "b", to_rational(b))

    def __setattr__(self, name: str, value: Any) -> None:
        raise AttributeError(f"{self.__class__.__name__} is immutable")

    def __reduce__(self) -> Any:
        return (QuadNum, (self.d, self.a, self.b))

    @classmethod
    def sqrt_of(cls, d: int) -> "QuadNum":
        return cls(d, 0, 1)

    def _coerce(self, other: Union["QuadNum", RationalLike]) -> "QuadNum":
        if isinstance(other, QuadNum):
            if other.d != self.d:
                raise FieldMismatchError(f"Cannot mix Q(√{self.d}) with Q(√{other.d})")
            return other
        return QuadNum(self.d, other)

    def __add__(self, other: Any) -> "QuadNum":
        if not isinstance(other, (QuadNum, int, Fraction)):
            return NotImplemented
        other = self._coerce(other)
        return QuadNum(self.d, self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __sub__(self, other: Any) -> "QuadNum":
        if not isinstance(other, (QuadNum, int, Fraction)):
            return NotImplemented
        other = self._coerce(other)
        return QuadNum(self.d, self.a - other.a, self.b - other.b)

    def __rsub__(self, other: Any) -> "QuadNum":
        if not isinstance(other, (int, Fraction)):
            return NotImplemented
        return self._coerce(other) - self

    def __neg__(self) -> "QuadNum":
        return QuadNum(self.d, -self.a, -self.b)

    def __mul__(self, other: Any) -> "QuadNum":
        if isinstance(other, (int, Fraction)):
            return QuadNum(self.d, self.a * other, self.b * other)
        if not isinstance(other, QuadNum):
            return NotImplemented
        other = self._coerce(other)
        return QuadNum(self.d, self.a * other.a + self.d * self.b * other.b, self.a * other.b + self.b * other.a)

    __rmul__ = __mul__

    def __truediv__(self, other: Any) -> "QuadNum":
        if not isinstance(other, (QuadNum, int, Fraction)):
            return NotImplemented
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other: Any) -> "QuadNum":
        if not isinstance(other, (int, Fraction)):
            return NotImplemented
        return self._coerce(other) * self.inverse()

    def __eq__(self, other: object) -> bool:
        if isinstance(other, QuadNum):
            return self.d == other.d and self.a == other.a and self.b == other.b
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and self.a == other
        return NotImplemented

    def __hash__(self) -> int:
        if self.b == 0:
            return hash(self.a)
        return hash((self.d, self.a, self.b))

    def __lt__(self, other: Any) -> bool:
        if not isinstance(other, (QuadNum, int, Fraction)):
            return NotImplemented
        return (self - other).sign() < 0

    def __le__(self, other: Any) -> bool:
        if not isinstance(other, (QuadNum, int, Fraction)):
            return NotImplemented
        return (self - other).sign() <= 0

    def __gt__(self, other: Any) -> bool:
        if not isinstance(other, (QuadNum, int, Fraction)):
            return NotImplemented
        return (self - other).sign() > 0

    def __ge__(self, other: Any) -> bool:
        if not isinstance(other, (QuadNum, int, Fraction)):
            return NotImplemented
        return (self - other).sign() >= 0

    def __bool__(self) -> bool:
        return bool(self.a) or bool(self.b)

    def __float__(self) -> float:
        return float(self.a) + float(self.b) * math.sqrt(self.d)

    def __repr__(self) -> str:
        return f"QuadNum({self.d}, {format_rational(self.a)}, {format_rational(self.b)})"

    def __str__(self) -> str:
        return self.to_exact_string()

    def to_exact_string(self) -> str:
        b = format_rational(self.b)
        if self.b.denominator != 1 or self.b < 0:
            b = f"({b})"
        return f"{format_rational(self.a)} + {b}·sqrt{self.d}"

    def sign(self) -> int:
        return surd_sign(self.a, self.b, self.d)

    def conjugate(self) -> "QuadNum":
        return QuadNum(self.d, self.a, -self.b)

    def norm(self) -> Fraction:
        return self.a * self.a - self.d * self.b * self.b

    def inverse(self) -> "QuadNum":
        if (norm := self.norm()) == 0:
            raise ZeroDivisionError("QuadNum inverse of zero")
        return QuadNum(self.d, self.a / norm, -self.b / norm)

    def is_rational(self) -> bool:
        return self.b == 0
