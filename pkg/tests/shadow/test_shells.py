import math
from fractions import Fraction

import pytest

from mereon.goldfield import PHI, GoldenNum, gf_to_float
from mereon.quatgroup import build_2I, build_2T
from mereon.shadow import (
    INFINITY,
    SHELL_CLOSED_FORMS,
    StratificationError,
    cell24_shell_check,
    reciprocal_pair_check,
    shell_decompose,
    shell_types_per_label,
    upper_lower_census,
)

SHELL_RADII = (0.0, 0.3249, 0.5774, 0.7265, 1.0, 1.3764, 1.7321, 3.0777)


def test_shell_counts_and_types() -> None:
    shells = shell_decompose(build_2I())

    assert [shell.count for shell in shells] == [1, 12, 20, 12, 30, 12, 20, 12, 1]
    assert [shell.type.label.value if shell.type else None for shell in shells] == [
        None,
        "C",
        "A",
        "C",
        "B",
        "C",
        "A",
        "C",
        None,
    ]
    assert [shell.index for shell in shells] == [0, 1, 2, 3, 4, 5, 6, 7, INFINITY]


def test_shell_radii() -> None:
    shells = shell_decompose(build_2I())
    radii = [math.sqrt(gf_to_float(shell.radius_sq)) for shell in shells[:8]]  # type: ignore[arg-type]

    assert radii == pytest.approx(SHELL_RADII, abs=5e-5)
    assert shells[8].radius_sq is None


def test_closed_forms() -> None:
    shells = shell_decompose(build_2I())

    assert SHELL_CLOSED_FORMS[1] == 1 / (4 * PHI + 3)
    for index, radius_sq in SHELL_CLOSED_FORMS.items():
        assert shells[index].radius_sq == radius_sq
        assert shells[8 - index].radius_sq == 1 / radius_sq


def test_reciprocal_pairs() -> None:
    group = build_2I()
    report = reciprocal_pair_check(group, shell_decompose(group))

    assert report.checked == 118
    assert report.all_reciprocal
    assert report.shell_pairs == {1: 7, 2: 6, 3: 5, 4: 4, 5: 3, 6: 2, 7: 1}


def test_upper_lower_census() -> None:
    census = upper_lower_census(shell_decompose(build_2I()))

    assert (census.upper, census.lower, census.shared) == (75, 75, 30)


def test_shells_per_type() -> None:
    assert shell_types_per_label(shell_decompose(build_2I())) == {"A": 2, "B": 1, "C": 4}


def test_24_cell_strata() -> None:
    report = cell24_shell_check()

    assert report.counts == (1, 8, 6, 8, 1)
    assert [shell.radius_sq for shell in report.strata] == [
        GoldenNum(0),
        GoldenNum(Fraction(1, 3)),
        GoldenNum(1),
        GoldenNum(3),
        None,
    ]
    assert report.middle_shell_on_axes
    assert report.cube_directions_type_a
    assert report.reciprocal


def test_2T_is_not_stratified_like_2I() -> None:
    with pytest.raises(StratificationError, match=r"Shell counts \(1, 8, 6, 8, 1\)"):
        shell_decompose(build_2T())
