import functools
import itertools
from enum import Enum
from fractions import Fraction
from typing import Dict, Generic, Iterable, Iterator, List, Sequence, Tuple

from mereon.goldfield import PHI, PHI_INVERSE, GoldenNum, QuadNum
from mereon.quatgroup.quaternion import F, GoldenQuaternion, Quad2Quaternion, Quaternion, golden_quaternion
from mereon.utils import setup_logger

logger = setup_logger(__name__)

HALF = Fraction(1, 2)


class ConstructionIntegrityError(Exception):
    pass


class ClosureCapExceededError(Exception):
    pass


class GroupLabel(str, Enum):
    BINARY_TETRAHEDRAL = "2T"
    BINARY_OCTAHEDRAL = "2O"
    BINARY_ICOSAHEDRAL = "2I"


EXPECTED_ORDERS: Dict[GroupLabel, int] = {
    GroupLabel.BINARY_TETRAHEDRAL: 24,
    GroupLabel.BINARY_OCTAHEDRAL: 48,
    GroupLabel.BINARY_ICOSAHEDRAL: 120,
}


class BinaryGroup(Generic[F]):
    """Finite group of unit quaternions, elements stored in canonical order."""

    def __init__(self, label: GroupLabel, elements: Iterable[Quaternion[F]]) -> None:
        self.label = label
        self.elements: Tuple[Quaternion[F], ...] = tuple(sorted(set(elements)))
        self._index: Dict[Quaternion[F], int] = {q: i for i, q in enumerate(self.elements)}

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[Quaternion[F]]:
        return iter(self.elements)

    def __contains__(self, q: object) -> bool:
        return q in self._index

    def __getitem__(self, index: int) -> Quaternion[F]:
        return self.elements[index]

    def __repr__(self) -> str:
        return f"BinaryGroup({self.label.value}, order={len(self)})"

    def index_of(self, q: Quaternion[F]) -> int:
        return self._index[q]

    @functools.cached_property
    def identity_index(self) -> int:
        return self._index[self.elements[0].one()]

    @functools.cached_property
    def cayley_table(self) -> Tuple[Tuple[int, ...], ...]:
        """Product indices: table[i][j] is the index of elements[i] · elements[j]."""
        table = []
        for p in self.elements:
            row = []
            for q in self.elements:
                if (index := self._index.get(p * q)) is None:
                    raise ConstructionIntegrityError(f"{self.label.value} is not closed: {p} · {q} is missing")
                row.append(index)
            table.append(tuple(row))
        return tuple(table)

    @functools.cached_property
    def inverse_indices(self) -> Tuple[int, ...]:
        return tuple(self._index[q.conjugate()] for q in self.elements)

    @functools.cached_property
    def negation_indices(self) -> Tuple[int, ...]:
        return tuple(self._index[-q] for q in self.elements)

    def is_closed(self) -> bool:
        try:
            _ = self.cayley_table
        except ConstructionIntegrityError:
            return False
        return True


def even_permutations(size: int) -> List[Tuple[int, ...]]:
    def is_even(permutation: Tuple[int, ...]) -> bool:
        inversions = sum(1 for i, j in itertools.combinations(range(size), 2) if permutation[i] > permutation[j])
        return inversions % 2 == 0

    return [p for p in itertools.permutations(range(size)) if is_even(p)]


def _signed(values: Sequence[GoldenNum]) -> Iterator[Tuple[GoldenNum, ...]]:
    """All sign choices on the nonzero entries."""
    nonzero = [i for i, value in enumerate(values) if value]
    for signs in itertools.product((1, -1), repeat=len(nonzero)):
        signed = list(values)
        for index, sign in zip(nonzero, signs):
            signed[index] = signed[index] * sign
        yield tuple(signed)


def unit_family() -> List[GoldenQuaternion]:
    """±1, ±i, ±j, ±k."""
    units = []
    for axis in range(4):
        for sign in (1, -1):
            coordinates = [0, 0, 0, 0]
            coordinates[axis] = sign
            units.append(golden_quaternion(*coordinates))
    return units


def half_unit_family() -> List[GoldenQuaternion]:
    """½(±1, ±1, ±1, ±1)."""
    return [golden_quaternion(*(HALF * s for s in signs)) for signs in itertools.product((1, -1), repeat=4)]


def icosian_family() -> List[GoldenQuaternion]:
    """½(0, ±1, ±φ⁻¹, ±φ) under the 12 even permutations of the four slots."""
    base = (GoldenNum(0), GoldenNum(HALF), PHI_INVERSE * HALF, PHI * HALF)
    elements = []
    for permutation in even_permutations(4):
        arranged = [base[permutation[slot]] for slot in range(4)]
        elements.extend(golden_quaternion(*signed) for signed in _signed(arranged))
    return elements


def icosian_families() -> Dict[str, List[GoldenQuaternion]]:
    return {"a": unit_family(), "b": half_unit_family(), "c": icosian_family()}


def _validated(label: GroupLabel, elements: Sequence[Quaternion[F]]) -> BinaryGroup[F]:
    group = BinaryGroup(label, elements)
    if len(group) != len(elements):
        raise ConstructionIntegrityError(f"{label.value} has duplicate elements")
    if len(group) != EXPECTED_ORDERS[label]:
        raise ConstructionIntegrityError(f"{label.value} has order {len(group)}, expected {EXPECTED_ORDERS[label]}")
    if not all(q.is_unit() for q in group):
        raise ConstructionIntegrityError(f"{label.value} contains a non-unit quaternion")
    if not group.is_closed():
        raise ConstructionIntegrityError(f"{label.value} is not closed under multiplication")
    logger.info(f"Built {label.value} with {len(group)} elements")
    return group


@functools.lru_cache(maxsize=None)
def build_2I() -> BinaryGroup[GoldenNum]:
    families = icosian_families()
    counts = tuple(len(family) for family in families.values())
    if counts != (8, 16, 96):
        raise ConstructionIntegrityError(f"2I family counts are {counts}, expected (8, 16, 96)")
    return _validated(GroupLabel.BINARY_ICOSAHEDRAL, [q for family in families.values() for q in family])


@functools.lru_cache(maxsize=None)
def build_2T() -> BinaryGroup[GoldenNum]:
    return _validated(GroupLabel.BINARY_TETRAHEDRAL, unit_family() + half_unit_family())


def as_quad2(q: GoldenQuaternion) -> Quad2Quaternion:
    if not all(c.is_rational() for c in q.components()):
        raise ConstructionIntegrityError(f"{q} has irrational coordinates")
    return Quaternion(*(QuadNum(2, c.a) for c in q.components()))


def octahedral_family() -> List[Quad2Quaternion]:
    """(±1, ±1, 0, 0)/√2 over every pair of slots."""
    inverse_sqrt2 = QuadNum(2, 0, HALF)
    zero = QuadNum(2, 0)
    elements = []
    for first, second in itertools.combinations(range(4), 2):
        for sign_1, sign_2 in itertools.product((1, -1), repeat=2):
            coordinates = [zero] * 4
            coordinates[first] = inverse_sqrt2 * sign_1
            coordinates[second] = inverse_sqrt2 * sign_2
            elements.append(Quaternion(*coordinates))
    return elements


@functools.lru_cache(maxsize=None)
def build_2O() -> BinaryGroup[QuadNum]:
    tetrahedral = [as_quad2(q) for q in build_2T()]
    return _validated(GroupLabel.BINARY_OCTAHEDRAL, tetrahedral + octahedral_family())


def closure(generators: Iterable[Quaternion[F]], cap: int) -> List[Quaternion[F]]:
    """Smallest set containing the generators that is closed under products and inverses, canonically sorted."""
    generators = list(dict.fromkeys(generators))
    if not generators:
        raise ValueError("closure needs at least one generator")
    generators += [g.conjugate() for g in generators if g.conjugate() not in generators]
    seen = set(generators)
    frontier = list(generators)
    while frontier:
        element = frontier.pop()
        for generator in generators:
            if (product := element * generator) not in seen:
                seen.add(product)
                frontier.append(product)
                if len(seen) > cap:
                    raise ClosureCapExceededError(f"Closure exceeded {cap} elements")
    return sorted(seen)


def is_subgroup(subgroup: Iterable[Quaternion[F]], group: BinaryGroup[F]) -> bool:
    return all(q in group for q in subgroup)
