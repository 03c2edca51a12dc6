from fractions import Fraction

from mereon.goldfield import PHI, PHI_INVERSE, GoldenNum, vec3
from mereon.quatgroup import golden_quaternion, q_mul, q_rotate, quad2_quaternion, rotation_matrix

HALF = Fraction(1, 2)


def test_hamilton_units() -> None:
    i, j, k = golden_quaternion(0, 1, 0, 0), golden_quaternion(0, 0, 1, 0), golden_quaternion(0, 0, 0, 1)
    minus_one = golden_quaternion(-1, 0, 0, 0)

    assert i * j == k
    assert j * k == i
    assert k * i == j
    assert j * i == -k
    assert i * i == j * j == k * k == minus_one
    assert q_mul(q_mul(i, j), k) == minus_one


def test_conjugate_is_inverse_for_units() -> None:
    q = golden_quaternion(PHI * HALF, HALF, 0, PHI_INVERSE * HALF)

    assert q.is_unit()
    assert (q * q.conjugate()).is_one()


def test_norm_is_multiplicative() -> None:
    p = golden_quaternion(1, 2, PHI, 0)
    q = golden_quaternion(PHI_INVERSE, 0, 3, -1)

    assert (p * q).norm_sq() == p.norm_sq() * q.norm_sq()


def test_rotation_about_z_axis() -> None:
    k = golden_quaternion(0, 0, 0, 1)

    assert q_rotate(k, vec3(1, 0, 0)) == vec3(-1, 0, 0)
    assert q_rotate(k, vec3(0, 0, 1)) == vec3(0, 0, 1)


def test_rotation_matrix_matches_sandwich_product() -> None:
    q = golden_quaternion(PHI * HALF, HALF, 0, PHI_INVERSE * HALF)
    matrix = rotation_matrix(q)
    v = vec3(1, PHI, 0)

    expected = tuple(row[0] * v[0] + row[1] * v[1] + row[2] * v[2] for row in matrix)

    assert q_rotate(q, v) == expected


def test_half_unit_cycles_axes() -> None:
    q = golden_quaternion(HALF, HALF, HALF, HALF)

    assert q_rotate(q, vec3(1, 0, 0)) == vec3(0, 1, 0)
    assert q_rotate(q, vec3(0, 1, 0)) == vec3(0, 0, 1)


def test_quad2_quaternion_coerces_rationals() -> None:
    q = quad2_quaternion(1, 0, 0, 0)

    assert q.is_one()
    assert q.to_exact_strings() == ("1 + 0·sqrt2", "0 + 0·sqrt2", "0 + 0·sqrt2", "0 + 0·sqrt2")


def test_exact_strings() -> None:
    q = golden_quaternion(GoldenNum(0, HALF), HALF, 0, 0)

    assert q.to_exact_strings() == ("0 + (1/2)·phi", "1/2 + 0·phi", "0 + 0·phi", "0 + 0·phi")


def test_opposite_quaternions_give_the_same_rotation() -> None:
    q = golden_quaternion(PHI * HALF, HALF, 0, PHI_INVERSE * HALF)
    v = vec3(2, -1, PHI)

    assert rotation_matrix(-q) == rotation_matrix(q)
    assert q_rotate(-q, v) == q_rotate(q, v)


def test_rotation_about_x_axis_reverses_y() -> None:
    i = golden_quaternion(0, 1, 0, 0)

    assert q_rotate(i, vec3(0, 1, 0)) == vec3(0, -1, 0)
    assert q_rotate(i, vec3(1, 0, 0)) == vec3(1, 0, 0)
