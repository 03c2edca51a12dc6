import os
from typing import Dict, Generator

import pytest

from mereon.goldfield import GoldenNum, QuadNum
from mereon.mckay import McKayGraph, mckay_graph
from mereon.mckay.characters import DEFAULT_SEED
from mereon.quatgroup import BinaryGroup, build_2I, build_2O, build_2T


@pytest.fixture(scope="session")
def binary_tetrahedral_group() -> Generator[BinaryGroup[GoldenNum], None, None]:
    yield build_2T()


@pytest.fixture(scope="session")
def binary_octahedral_group() -> Generator[BinaryGroup[QuadNum], None, None]:
    yield build_2O()


@pytest.fixture(scope="session")
def binary_icosahedral_group() -> Generator[BinaryGroup[GoldenNum], None, None]:
    yield build_2I()


@pytest.fixture(scope="session")
def mckay_seed() -> int:
    return int(os.getenv("MEREON_SEED", str(DEFAULT_SEED)))


@pytest.fixture(scope="session")
def mckay_graphs(mckay_seed: int) -> Generator[Dict[str, McKayGraph], None, None]:
    yield {group.label.value: mckay_graph(group, seed=mckay_seed) for group in (build_2T(), build_2O(), build_2I())}
