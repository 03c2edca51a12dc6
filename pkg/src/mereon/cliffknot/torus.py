"""Where the equatorial 2I elements sit relative to the Clifford torus, and the (2, 3, 5) fold bookkeeping."""
from fractions import Fraction
from typing import Dict, List, NamedTuple, Optional, Tuple

from mereon.goldfield import GoldenNum
from mereon.polytopes import VERTEX_TYPES, VertexLabel, VertexRole, m120p_construct
from mereon.quatgroup import BinaryGroup, GoldenQuaternion, build_2I
from mereon.shadow.projection import radius_sq_for_w

HALF = Fraction(1, 2)
BRIESKORN_EXPONENTS = (2, 3, 5)

# Each pairing splits (w, x, y, z) into two coordinate planes.
PAIRINGS: Dict[str, Tuple[Tuple[int, int], Tuple[int, int]]] = {
    "(w,x)|(y,z)": ((0, 1), (2, 3)),
    "(w,y)|(x,z)": ((0, 2), (1, 3)),
    "(w,z)|(x,y)": ((0, 3), (1, 2)),
}


class TorusMembershipReport(NamedTuple):
    equatorial: int
    on_torus: Dict[str, int]
    all_w_zero: bool
    all_unit_radius: bool


class ExponentFoldRow(NamedTuple):
    exponent: int
    label: VertexLabel
    fold: int
    role: VertexRole
    vertices: int


def _plane_norm(q: GoldenQuaternion, plane: Tuple[int, int]) -> GoldenNum:
    components = q.components()
    return components[plane[0]] * components[plane[0]] + components[plane[1]] * components[plane[1]]


def on_torus(q: GoldenQuaternion, pairing: Tuple[Tuple[int, int], Tuple[int, int]]) -> bool:
    return all(_plane_norm(q, plane) == HALF for plane in pairing)


def clifford_torus_membership(group: Optional[BinaryGroup[GoldenNum]] = None) -> TorusMembershipReport:
    """Counts w = 0 elements on the torus |first plane|² = |second plane|² = ½ under each coordinate pairing."""
    group = group or build_2I()
    equatorial: List[GoldenQuaternion] = [q for q in group if q.w == 0]
    return TorusMembershipReport(
        equatorial=len(equatorial),
        on_torus={name: sum(on_torus(q, pairing) for q in equatorial) for name, pairing in PAIRINGS.items()},
        all_w_zero=all(q.w == 0 for q in equatorial),
        all_unit_radius=all(radius_sq_for_w(q.w) == 1 for q in equatorial),
    )


def exponent_fold_table() -> List[ExponentFoldRow]:
    polyhedron = m120p_construct()
    rows = sorted(
        (
            ExponentFoldRow(t.fold, t.label, t.fold, t.role, len(polyhedron.indices_of_type(t.label)))
            for t in VERTEX_TYPES.values()
        ),
        key=lambda row: row.exponent,
    )
    if tuple(row.fold for row in rows) != BRIESKORN_EXPONENTS:
        raise ValueError(f"Fold orders {[row.fold for row in rows]} do not match {BRIESKORN_EXPONENTS}")
    return rows
