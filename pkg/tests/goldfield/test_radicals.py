from fractions import Fraction

from mereon.goldfield import ONE, PHI, GoldenNum, RadicalSum, rational_sqrt, surd_sign

RADICANDS = (GoldenNum(2), GoldenNum(3))


def test_sign_of_mixed_radicals() -> None:
    value = RadicalSum(RADICANDS, {1: ONE, 2: ONE, 3: -ONE})

    assert value.sign() == 1


def test_product_of_radicals_cancels_exactly() -> None:
    product = RadicalSum.monomial(RADICANDS, 1, ONE) * RadicalSum.monomial(RADICANDS, 2, ONE)

    assert (product - RadicalSum.monomial(RADICANDS, 3, ONE)).sign() == 0


def test_square_of_radical_is_radicand() -> None:
    root = RadicalSum.monomial(RADICANDS, 1, ONE)

    assert (root * root - RadicalSum(RADICANDS, {0: GoldenNum(2)})).sign() == 0


def test_close_rational_comparison() -> None:
    value = RadicalSum((GoldenNum(2),), {0: GoldenNum(Fraction(7, 5)), 1: -ONE})

    assert value.sign() == -1
    assert (-value).sign() == 1


def test_golden_radicand() -> None:
    # √φ ≈ 1.2720
    value = RadicalSum((PHI,), {0: GoldenNum(Fraction(127, 100)), 1: -ONE})

    assert value.sign() == -1


def test_rational_helpers() -> None:
    assert rational_sqrt(Fraction(9, 16)) == Fraction(3, 4)
    assert rational_sqrt(2) is None
    assert rational_sqrt(-4) is None
    assert surd_sign(3, -1, 5) == 1
    assert surd_sign(2, -1, 5) == -1
    assert surd_sign(0, 0, 5) == 0
