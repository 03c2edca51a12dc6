"""Stereographic shells: 2I stratified by scalar part, and the three-shell picture of the 24-cell."""
from fractions import Fraction
from typing import Dict, List, NamedTuple, Optional, Sequence, Tuple, Union

from mereon.goldfield import PHI, GoldenNum
from mereon.goldfield.vectors import norm_sq, vec3
from mereon.polytopes import VertexLabel, VertexType
from mereon.quatgroup import BinaryGroup, build_2T
from mereon.shadow.projection import INFINITY, PointAtInfinity, direction_type, radius_sq_for_w, stereo_project

ShellIndex = Union[int, PointAtInfinity]

EXPECTED_2I_COUNTS = (1, 12, 20, 12, 30, 12, 20, 12, 1)
EXPECTED_2I_TYPES = (None, "C", "A", "C", "B", "C", "A", "C", None)
EXPECTED_2T_COUNTS = (1, 8, 6, 8, 1)

# Squared radii of shells 1-4; shells 5-7 are their reciprocals.
SHELL_CLOSED_FORMS: Dict[int, GoldenNum] = {
    1: 1 / (4 * PHI + 3),
    2: GoldenNum(Fraction(1, 3)),
    3: (2 * PHI - 1) / (2 * PHI + 1),
    4: GoldenNum(1),
}


class StratificationError(Exception):
    pass


class Shell(NamedTuple):
    index: ShellIndex
    w: GoldenNum
    radius_sq: Optional[GoldenNum]
    type: Optional[VertexType]
    members: Tuple[int, ...]

    @property
    def count(self) -> int:
        return len(self.members)


class ReciprocalReport(NamedTuple):
    checked: int
    all_reciprocal: bool
    shell_pairs: Dict[int, int]


class UpperLowerCensus(NamedTuple):
    upper: int
    lower: int
    shared: int


class Cell24Report(NamedTuple):
    strata: Tuple[Shell, ...]
    counts: Tuple[int, ...]
    middle_shell_on_axes: bool
    cube_directions_type_a: bool
    reciprocal: bool


def _shell_type(group: BinaryGroup[GoldenNum], members: Sequence[int]) -> Optional[VertexType]:
    types = {direction_type(group[i].imaginary()) for i in members if group[i].imaginary() != vec3(0, 0, 0)}
    if not types:
        return None
    if len(types) != 1 or None in types:
        raise StratificationError(f"Shell with members {members[:3]}... mixes direction types {types}")
    return types.pop()


def stratify(group: BinaryGroup[GoldenNum]) -> List[Shell]:
    """Groups elements by scalar part, w descending, shell 0 at w = 1 and the point at infinity at w = −1."""
    by_w: Dict[GoldenNum, List[int]] = {}
    for index, q in enumerate(group):
        by_w.setdefault(q.w, []).append(index)
    shells = []
    for position, w in enumerate(sorted(by_w, reverse=True)):
        members = tuple(by_w[w])
        radius_sq = radius_sq_for_w(w)
        for member in members:
            projection = stereo_project(group[member])
            if projection is INFINITY:
                if radius_sq is not None:
                    raise StratificationError(f"Element {member} projects to infinity off the pole")
            elif radius_sq is None or norm_sq(projection) != radius_sq:
                raise StratificationError(f"Element {member} is off its shell radius")
        index: ShellIndex = INFINITY if radius_sq is None else position
        shells.append(Shell(index, w, radius_sq, _shell_type(group, members), members))
    return shells


def shell_decompose(group: BinaryGroup[GoldenNum]) -> List[Shell]:
    shells = stratify(group)
    counts = tuple(shell.count for shell in shells)
    if counts != EXPECTED_2I_COUNTS:
        raise StratificationError(f"Shell counts {counts}, expected {EXPECTED_2I_COUNTS}")
    types = tuple(shell.type.label.value if shell.type else None for shell in shells)
    if types != EXPECTED_2I_TYPES:
        raise StratificationError(f"Shell types {types}, expected {EXPECTED_2I_TYPES}")
    for index, closed_form in SHELL_CLOSED_FORMS.items():
        if shells[index].radius_sq != closed_form:
            raise StratificationError(f"Shell {index} has r² = {shells[index].radius_sq}, expected {closed_form}")
        if shells[8 - index].radius_sq != 1 / closed_form:
            raise StratificationError(f"Shell {8 - index} is not the reciprocal of shell {index}")
    return shells


def shell_of(shells: Sequence[Shell], member: int) -> Shell:
    return next(shell for shell in shells if member in shell.members)


def reciprocal_pair_check(group: BinaryGroup[GoldenNum], shells: Sequence[Shell]) -> ReciprocalReport:
    """r²(q) · r²(−q) = 1 for every q ≠ ±1."""
    checked, all_reciprocal = 0, True
    shell_pairs: Dict[int, int] = {}
    for shell in shells:
        if shell.radius_sq is None or not shell.radius_sq:
            continue
        for member in shell.members:
            mirror = shell_of(shells, group.negation_indices[member])
            checked += 1
            if mirror.radius_sq is None or shell.radius_sq * mirror.radius_sq != 1:
                all_reciprocal = False
            if isinstance(shell.index, int) and isinstance(mirror.index, int):
                shell_pairs[shell.index] = mirror.index
    return ReciprocalReport(checked, all_reciprocal, dict(sorted(shell_pairs.items())))


def upper_lower_census(shells: Sequence[Shell]) -> UpperLowerCensus:
    """Shells 0-4 against shells 4-∞; shell 4 (the equator) belongs to both."""
    upper = sum(shell.count for shell in shells if shell.w.sign() >= 0)
    lower = sum(shell.count for shell in shells if shell.w.sign() <= 0)
    shared = sum(shell.count for shell in shells if shell.w.sign() == 0)
    return UpperLowerCensus(upper, lower, shared)


def shell_types_per_label(shells: Sequence[Shell]) -> Dict[str, int]:
    """Number of shells each vertex type occupies."""
    counts = {label.value: 0 for label in VertexLabel}
    for shell in shells:
        if shell.type is not None:
            counts[shell.type.label.value] += 1
    return counts


def cell24_shell_check(group: Optional[BinaryGroup[GoldenNum]] = None) -> Cell24Report:
    group = group or build_2T()
    strata = stratify(group)
    counts = tuple(shell.count for shell in strata)
    if counts != EXPECTED_2T_COUNTS:
        raise StratificationError(f"24-cell strata {counts}, expected {EXPECTED_2T_COUNTS}")
    middle = next(shell for shell in strata if shell.w == 0)
    axes = {vec3(*(s if i == axis else 0 for i in range(3))) for axis in range(3) for s in (1, -1)}
    middle_on_axes = {stereo_project(group[i]) for i in middle.members} == axes
    cube = next(shell for shell in strata if shell.w == Fraction(1, 2))
    cube_type_a = all(direction_type(group[i].imaginary()) == cube.type for i in cube.members) and (
        cube.type is not None and cube.type.label == VertexLabel.A
    )
    reciprocal = reciprocal_pair_check(group, strata).all_reciprocal
    return Cell24Report(tuple(strata), counts, middle_on_axes, cube_type_a, reciprocal)
