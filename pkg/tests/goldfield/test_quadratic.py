from fractions import Fraction

import pytest

from mereon.goldfield import FieldMismatchError, QuadNum


def test_square_root_squares_to_radicand() -> None:
    sqrt2 = QuadNum.sqrt_of(2)

    assert sqrt2 * sqrt2 == 2
    assert (sqrt2 / 2) * (sqrt2 / 2) == Fraction(1, 2)


def test_inverse_of_unit() -> None:
    unit = QuadNum(2, 1, 1)

    assert unit.inverse() == QuadNum(2, -1, 1)
    assert unit * unit.inverse() == 1
    assert unit.norm() == -1


def test_sign() -> None:
    assert QuadNum(2, 3, -2).sign() == 1
    assert QuadNum(2, -3, 2).sign() == -1
    assert QuadNum(2, Fraction(141, 100), 0) < QuadNum.sqrt_of(2) < Fraction(142, 100)


def test_mixing_fields_is_an_error() -> None:
    with pytest.raises(FieldMismatchError, match="Cannot mix"):
        QuadNum.sqrt_of(2) + QuadNum.sqrt_of(3)


def test_radicand_must_be_squarefree() -> None:
    with pytest.raises(ValueError, match="Expected a squarefree integer > 1, got 8"):
        QuadNum(8)


def test_exact_string() -> None:
    assert str(QuadNum(2, 0, Fraction(1, 2))) == "0 + (1/2)·sqrt2"
    assert float(QuadNum.sqrt_of(2)) == pytest.approx(1.41421356)
