"""Exact incremental 3D convex hull.

Points are ``direction · √scale_sq`` with direction and scale in Q(√5), so orientation predicates reduce to
signs of radical sums and stay exact without floating-point fallbacks.
"""
from typing import Dict, FrozenSet, List, NamedTuple, Sequence, Set, Tuple, Union

from mereon.goldfield import ONE, GoldenNum, RadicalSum
from mereon.goldfield.vectors import Vector3, det3, sub
from mereon.polytopes.polyhedron import Polyhedron
from mereon.utils import setup_logger

logger = setup_logger(__name__)

Triangle = Tuple[int, int, int]


class DegenerateHullError(Exception):
    pass


class HullPoint(NamedTuple):
    direction: Vector3
    scale_sq: GoldenNum = ONE


class HullResult(NamedTuple):
    """Hull faces and a classification of every input point.

    ``hull_vertices`` are face corners. Other points on a face plane are ``boundary_vertices``, and
    ``interior_vertices`` lie strictly below every face plane.
    """

    faces: Tuple[Triangle, ...]
    hull_vertices: FrozenSet[int]
    interior_vertices: FrozenSet[int]
    boundary_vertices: FrozenSet[int] = frozenset()


class Orientation:
    """orient(a, b, c, x) = sign det(b − a, c − a, x − a); positive when x lies on the normal side of (a, b, c)."""

    def __init__(self, points: Sequence[HullPoint]) -> None:
        self.directions = [p.direction for p in points]
        self.radicands: Tuple[GoldenNum, ...] = tuple(sorted({p.scale_sq for p in points if p.scale_sq != 1}))
        bits: Dict[GoldenNum, int] = {radicand: 1 << i for i, radicand in enumerate(self.radicands)}
        self.masks = [bits.get(p.scale_sq, 0) for p in points]

    def orient(self, a: int, b: int, c: int, x: int) -> int:
        if not self.radicands:
            d = self.directions
            return det3(sub(d[b], d[a]), sub(d[c], d[a]), sub(d[x], d[a])).sign()
        total = self._term(b, c, x) - self._term(a, c, x) + self._term(a, b, x) - self._term(a, b, c)
        return total.sign()

    def _term(self, i: int, j: int, k: int) -> RadicalSum:
        coefficient = det3(self.directions[i], self.directions[j], self.directions[k])
        mask = 0
        for point in (i, j, k):
            bit = self.masks[point]
            if mask & bit:
                coefficient = coefficient * self.radicands[bit.bit_length() - 1]
            mask ^= bit
        return RadicalSum.monomial(self.radicands, mask, coefficient)


def _initial_simplex(points: Sequence[HullPoint], orientation: Orientation) -> Tuple[int, int, int, int]:
    second = next((i for i in range(1, len(points)) if points[i] != points[0]), None)
    if second is None:
        raise DegenerateHullError("All points coincide")
    rest = [i for i in range(1, len(points)) if i != second]
    for position, c in enumerate(rest):
        for d in rest[position + 1 :]:
            if orientation.orient(0, second, c, d) != 0:
                return (0, second, c, d)
    raise DegenerateHullError("All points are coplanar")


def _as_hull_point(point: Union[HullPoint, Vector3]) -> HullPoint:
    return point if isinstance(point, HullPoint) else HullPoint(point)


def convex_hull(points: Sequence[Union[HullPoint, Vector3]]) -> HullResult:
    hull_points = [_as_hull_point(p) for p in points]
    if len(hull_points) < 4:
        raise DegenerateHullError(f"Need at least 4 points, got {len(hull_points)}")
    orientation = Orientation(hull_points)
    simplex = _initial_simplex(hull_points, orientation)
    a, b, c, d = simplex
    faces: Set[Triangle] = set()
    for face, opposite in (((a, b, c), d), ((a, b, d), c), ((a, c, d), b), ((b, c, d), a)):
        if orientation.orient(*face, opposite) > 0:
            face = (face[0], face[2], face[1])
        faces.add(face)

    for p in range(len(hull_points)):
        if p in simplex:
            continue
        visible = [f for f in faces if orientation.orient(*f, p) > 0]
        if not visible:
            continue
        visible_edges = {(f[i], f[(i + 1) % 3]) for f in visible for i in range(3)}
        horizon = [(u, v) for u, v in visible_edges if (v, u) not in visible_edges]
        faces.difference_update(visible)
        faces.update((u, v, p) for u, v in horizon)

    corners = frozenset(i for f in faces for i in f)
    interior = frozenset(
        p for p in range(len(hull_points)) if p not in corners and all(orientation.orient(*f, p) < 0 for f in faces)
    )
    result = HullResult(
        faces=tuple(sorted(_rotate_smallest_first(f) for f in faces)),
        hull_vertices=corners,
        interior_vertices=interior,
        boundary_vertices=frozenset(range(len(hull_points))) - corners - interior,
    )
    logger.info(
        f"Convex hull: {len(corners)} hull points, {len(result.boundary_vertices)} boundary points, "
        f"{len(interior)} interior points"
    )
    return result


def _rotate_smallest_first(face: Triangle) -> Triangle:
    i = face.index(min(face))
    return (face[i], face[(i + 1) % 3], face[(i + 2) % 3])


def hull_points(p: Polyhedron) -> List[HullPoint]:
    return [HullPoint(v, p.scale_sq(i)) for i, v in enumerate(p.vertices)]


def polyhedron_hull(p: Polyhedron) -> HullResult:
    return convex_hull(hull_points(p))
