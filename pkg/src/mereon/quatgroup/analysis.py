import math
from fractions import Fraction
from typing import Dict, List, NamedTuple, Sequence, Tuple

from mereon.goldfield import GoldenNum, QuadNum
from mereon.quatgroup.groups import BinaryGroup, GroupLabel, as_quad2, build_2I, build_2O, build_2T, is_subgroup
from mereon.quatgroup.quaternion import F, Quaternion

MAX_ELEMENT_ORDER = 1000


class InfiniteOrderError(Exception):
    pass


class ConjugacyClass(NamedTuple):
    size: int
    representative: int
    members: Tuple[int, ...]


class RotationAngleRow(NamedTuple):
    abs_w: GoldenNum
    element_order: int
    rotation_order: int
    angle_degrees: float
    count: int


class ObstructionReport(NamedTuple):
    order_2i: int
    order_2o: int
    index_ratio: Fraction
    lagrange_allows: bool
    max_order_2i: int
    max_order_2o: int
    has_order_8_in_2o: bool
    has_order_8_in_2i: bool
    coordinate_fields: Dict[str, str]
    embeds: bool


def element_order(q: Quaternion[F]) -> int:
    """Least n ≥ 1 with qⁿ = 1."""
    power = q
    for order in range(1, MAX_ELEMENT_ORDER + 1):
        if power.is_one():
            return order
        power = power * q
    raise InfiniteOrderError(f"{q} has no order up to {MAX_ELEMENT_ORDER}")


def element_orders(group: BinaryGroup[F]) -> Tuple[int, ...]:
    table, identity = group.cayley_table, group.identity_index
    orders = []
    for index in range(len(group)):
        power, order = index, 1
        while power != identity:
            power = table[power][index]
            order += 1
        orders.append(order)
    return tuple(orders)


def conjugacy_classes(group: BinaryGroup[F]) -> List[ConjugacyClass]:
    """Partition by g ~ hgh⁻¹, sorted by (size, canonical order of the representative)."""
    table, inverses = group.cayley_table, group.inverse_indices
    assigned: Dict[int, int] = {}
    classes: List[ConjugacyClass] = []
    for g in range(len(group)):
        if g in assigned:
            continue
        members = tuple(sorted({table[table[h][g]][inverses[h]] for h in range(len(group))}))
        for member in members:
            assigned[member] = len(classes)
        classes.append(ConjugacyClass(size=len(members), representative=members[0], members=members))
    return sorted(classes, key=lambda c: (c.size, group[c.representative]))


def class_of(classes: Sequence[ConjugacyClass], index: int) -> int:
    return next(position for position, c in enumerate(classes) if index in c.members)


def rotation_angle_table(group: BinaryGroup[GoldenNum]) -> List[RotationAngleRow]:
    """Element order against the SO(3) rotation angle 2·acos(w), one row per distinct w in [0, 1)."""
    rows: Dict[GoldenNum, RotationAngleRow] = {}
    for q in group:
        if q.w.sign() < 0 or q.w == 1:
            continue
        if q.w in rows:
            rows[q.w] = rows[q.w]._replace(count=rows[q.w].count + 1)
            continue
        order = element_order(q)
        # -1 is the only element of order 2, so q^(n/2) = -1 for even n
        rotation_order = order if order % 2 else order // 2
        angle = math.degrees(2 * math.acos(float(q.w)))
        rows[q.w] = RotationAngleRow(q.w, order, rotation_order, angle, 1)
    return sorted(rows.values(), key=lambda row: row.abs_w, reverse=True)


def rotation_angle_consistent(row: RotationAngleRow) -> bool:
    """rotation_order · angle is a whole number of turns, and the element order doubles or equals it."""
    turns = row.rotation_order * row.angle_degrees / 360.0
    return abs(turns - round(turns)) < 1e-9 and row.element_order in (row.rotation_order, 2 * row.rotation_order)


def tetrahedral_cosets(
    group: BinaryGroup[GoldenNum], subgroup: BinaryGroup[GoldenNum]
) -> List[Tuple[Quaternion[GoldenNum], ...]]:
    """Left cosets g·H, canonically sorted; for 2T in 2I these are five inscribed 24-cells."""
    remaining = set(group.elements)
    cosets = []
    for g in group:
        if g not in remaining:
            continue
        coset = tuple(sorted(g * h for h in subgroup))
        remaining.difference_update(coset)
        cosets.append(coset)
    return cosets


def coordinate_field(group: BinaryGroup[F]) -> str:
    coordinates = [c for q in group for c in q.components()]
    if all(c.is_rational() for c in coordinates):
        return "Q"
    if isinstance(coordinates[0], QuadNum):
        return f"Q(√{coordinates[0].d})"
    return "Q(√5)"


def subgroup_obstruction_2O_in_2I() -> ObstructionReport:
    icosahedral, octahedral = build_2I(), build_2O()
    orders_2i, orders_2o = element_orders(icosahedral), element_orders(octahedral)
    index_ratio = Fraction(len(icosahedral), len(octahedral))
    lagrange_allows = index_ratio.denominator == 1
    has_order_8_in_2i = 8 in orders_2i
    return ObstructionReport(
        order_2i=len(icosahedral),
        order_2o=len(octahedral),
        index_ratio=index_ratio,
        lagrange_allows=lagrange_allows,
        max_order_2i=max(orders_2i),
        max_order_2o=max(orders_2o),
        has_order_8_in_2o=8 in orders_2o,
        has_order_8_in_2i=has_order_8_in_2i,
        coordinate_fields={
            GroupLabel.BINARY_TETRAHEDRAL.value: coordinate_field(build_2T()),
            GroupLabel.BINARY_OCTAHEDRAL.value: coordinate_field(octahedral),
            GroupLabel.BINARY_ICOSAHEDRAL.value: coordinate_field(icosahedral),
        },
        embeds=lagrange_allows and has_order_8_in_2i,
    )


def tetrahedral_inclusions() -> Dict[str, bool]:
    """2T ⊂ 2I and 2T ⊂ 2O, element-wise."""
    tetrahedral = build_2T()
    return {
        "2T in 2I": is_subgroup(tetrahedral, build_2I()),
        "2T in 2O": is_subgroup((as_quad2(q) for q in tetrahedral), build_2O()),
    }
