from typing import Generator

import pytest

from mereon.polytopes import (
    Polyhedron,
    catalan_disdyakis_construct,
    disdyakis_construct,
    m120p_construct,
    m144p_construct,
)


@pytest.fixture(scope="session")
def m144p() -> Generator[Polyhedron, None, None]:
    yield m144p_construct()


@pytest.fixture(scope="session")
def m120p() -> Generator[Polyhedron, None, None]:
    yield m120p_construct()


@pytest.fixture(scope="session")
def disdyakis() -> Generator[Polyhedron, None, None]:
    yield disdyakis_construct()


@pytest.fixture(scope="session")
def catalan_disdyakis() -> Generator[Polyhedron, None, None]:
    yield catalan_disdyakis_construct()
