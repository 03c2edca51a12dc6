"""Drop-w lift: recover w = +√(1 − r'²) for each scaled M120p vertex and find it inside 2I."""
from collections import Counter
from fractions import Fraction
from typing import Dict, NamedTuple, Optional, Tuple

from mereon.goldfield import PHI, PHI_INVERSE, GoldenNum, NegativeInputError, gf_sqrt_in_field
from mereon.goldfield.vectors import Vector3, norm_sq
from mereon.polytopes import TYPE_A, TYPE_B, TYPE_C, Polyhedron, VertexType, m120p_construct
from mereon.quatgroup import BinaryGroup, GoldenQuaternion, Quaternion, build_2I
from mereon.shadow.projection import scale_to_unit
from mereon.utils import setup_logger

logger = setup_logger(__name__)

HALF = Fraction(1, 2)

W_TYPES: Dict[GoldenNum, VertexType] = {
    GoldenNum(HALF): TYPE_A,
    PHI_INVERSE * HALF: TYPE_C,
    GoldenNum(0): TYPE_B,
}


class NoRootInFieldError(Exception):
    pass


class NoMatchError(Exception):
    pass


class LiftedVertex(NamedTuple):
    source: int
    scaled: Vector3
    w: GoldenNum
    quaternion: GoldenQuaternion
    matched: int
    type: VertexType


class MatchReport(NamedTuple):
    lifted: Tuple[LiftedVertex, ...]
    matched: int
    total: int
    type_counts: Dict[str, int]
    remainder: Tuple[int, ...]
    remainder_census: Dict[str, int]

    @property
    def all_matched(self) -> bool:
        return self.matched == self.total


def type_from_w(w: GoldenNum) -> Optional[VertexType]:
    return W_TYPES.get(w)


def lift(polyhedron: Polyhedron, index: int, group: Optional[BinaryGroup[GoldenNum]] = None) -> LiftedVertex:
    group = group or build_2I()
    scaled = scale_to_unit(polyhedron.vertices[index])
    try:
        w = gf_sqrt_in_field(1 - norm_sq(scaled))
    except NegativeInputError as e:
        raise NoRootInFieldError(f"Vertex {index} lies outside the unit ball after scaling") from e
    if w is None:
        raise NoRootInFieldError(f"Vertex {index}: 1 − r'² = {1 - norm_sq(scaled)} has no square root in Q(√5)")
    quaternion = Quaternion(w, *scaled)
    if quaternion not in group:
        raise NoMatchError(f"Vertex {index}: {quaternion} is not an element of {group.label.value}")
    if (vertex_type := type_from_w(w)) is None:
        raise NoMatchError(f"Vertex {index}: w = {w} is not an A, B or C latitude")
    return LiftedVertex(index, scaled, w, quaternion, group.index_of(quaternion), vertex_type)


def remainder_category(q: GoldenQuaternion) -> str:
    if abs(q.w) == 1:
        return "poles"
    if abs(q.w) == PHI * HALF:
        return "|w| = φ/2"
    if q.w.sign() < 0:
        return "lower mirrors"
    return "other"


def verify_62_match() -> MatchReport:
    polyhedron, group = m120p_construct(), build_2I()
    lifted = tuple(lift(polyhedron, index, group) for index in range(len(polyhedron.vertices)))
    matched = {vertex.matched for vertex in lifted}
    if len(matched) != len(lifted):
        raise NoMatchError("Two M120p vertices lift to the same element")
    for vertex in lifted:
        if polyhedron.types[vertex.source] != vertex.type:
            raise NoMatchError(f"Vertex {vertex.source}: latitude type {vertex.type.label.value} disagrees")
    remainder = tuple(i for i in range(len(group)) if i not in matched)
    type_counts = Counter(vertex.type.label.value for vertex in lifted)
    remainder_census = Counter(remainder_category(group[i]) for i in remainder)
    logger.info(f"Lift matched {len(matched)} of {len(lifted)} vertices, remainder {len(remainder)}")
    return MatchReport(
        lifted=lifted,
        matched=len(matched),
        total=len(lifted),
        type_counts={label: type_counts[label] for label in ("A", "C", "B")},
        remainder=remainder,
        remainder_census={key: remainder_census[key] for key in ("poles", "|w| = φ/2", "lower mirrors")},
    )
