import pytest

from mereon.pytest.fixtures.groups import (
    binary_icosahedral_group,
    binary_octahedral_group,
    binary_tetrahedral_group,
    mckay_graphs,
    mckay_seed,
)
from mereon.pytest.fixtures.polytopes import catalan_disdyakis, disdyakis, m120p, m144p

pytest.register_assert_rewrite("mereon.pytest.assertions")


__all__ = [
    "binary_icosahedral_group",
    "binary_octahedral_group",
    "binary_tetrahedral_group",
    "catalan_disdyakis",
    "disdyakis",
    "m120p",
    "m144p",
    "mckay_graphs",
    "mckay_seed",
]
