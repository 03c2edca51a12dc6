from collections import Counter
from fractions import Fraction
from typing import Callable

import pytest

from mereon.goldfield import PHI, PHI_INVERSE, GoldenNum
from mereon.pytest.assertions import assert_closed_group, assert_exact_unit_norm
from mereon.quatgroup import (
    BinaryGroup,
    ClosureCapExceededError,
    GroupLabel,
    as_quad2,
    build_2I,
    build_2O,
    build_2T,
    closure,
    golden_quaternion,
    icosian_families,
    is_subgroup,
)
from mereon.quatgroup.groups import ConstructionIntegrityError

HALF = Fraction(1, 2)


@pytest.mark.parametrize(
    ("build", "label", "order"),
    [
        (build_2T, GroupLabel.BINARY_TETRAHEDRAL, 24),
        (build_2O, GroupLabel.BINARY_OCTAHEDRAL, 48),
        (build_2I, GroupLabel.BINARY_ICOSAHEDRAL, 120),
    ],
)
def test_group_orders(build: Callable[[], BinaryGroup], label: GroupLabel, order: int) -> None:
    group = build()

    assert group.label == label
    assert len(group) == order
    assert_exact_unit_norm(group)
    assert_closed_group(group)


def test_icosian_family_census() -> None:
    families = icosian_families()

    assert {name: len(family) for name, family in families.items()} == {"a": 8, "b": 16, "c": 96}


def test_absolute_w_multiplicities() -> None:
    census = Counter(abs(q.w) for q in build_2I())

    assert census == {
        GoldenNum(1): 2,
        PHI * HALF: 24,
        GoldenNum(HALF): 40,
        PHI_INVERSE * HALF: 24,
        GoldenNum(0): 30,
    }


def test_elements_are_canonically_sorted() -> None:
    group = build_2I()

    assert list(group.elements) == sorted(group.elements)
    assert group[group.identity_index].is_one()


def test_cayley_table_and_inverses() -> None:
    group = build_2T()
    table, inverses = group.cayley_table, group.inverse_indices

    for index in range(len(group)):
        assert table[index][inverses[index]] == group.identity_index
        assert group[group.negation_indices[index]] == -group[index]


def test_closure_from_three_generators() -> None:
    generators = [
        golden_quaternion(PHI * HALF, HALF, 0, PHI_INVERSE * HALF),
        golden_quaternion(HALF, HALF, HALF, HALF),
        golden_quaternion(0, 1, 0, 0),
    ]

    assert closure(generators, cap=240) == list(build_2I().elements)


def test_closure_cap() -> None:
    generators = [golden_quaternion(PHI * HALF, HALF, 0, PHI_INVERSE * HALF), golden_quaternion(0, 1, 0, 0)]

    with pytest.raises(ClosureCapExceededError, match="Closure exceeded 10 elements"):
        closure(generators, cap=10)


def test_closure_needs_generators() -> None:
    with pytest.raises(ValueError, match="closure needs at least one generator"):
        closure([], cap=10)


def test_subgroups() -> None:
    assert is_subgroup(build_2T(), build_2I())
    assert is_subgroup((as_quad2(q) for q in build_2T()), build_2O())
    assert not is_subgroup(build_2I(), BinaryGroup(GroupLabel.BINARY_TETRAHEDRAL, build_2T()))


def test_as_quad2_rejects_golden_coordinates() -> None:
    with pytest.raises(ConstructionIntegrityError, match="has irrational coordinates"):
        as_quad2(golden_quaternion(PHI * HALF, HALF, 0, PHI_INVERSE * HALF))


def test_repr() -> None:
    assert repr(build_2O()) == "BinaryGroup(2O, order=48)"
