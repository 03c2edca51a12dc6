from typing import Tuple

from mereon.goldfield import GoldenNum
from mereon.quatgroup import build_2I, build_2T

Vector4 = Tuple[GoldenNum, GoldenNum, GoldenNum, GoldenNum]


def cell600_vertices() -> Tuple[Vector4, ...]:
    """The 120 vertices of the 600-cell, i.e. the elements of 2I as points of S³."""
    return tuple(q.components() for q in build_2I())


def cell24_vertices() -> Tuple[Vector4, ...]:
    """The 24 vertices of the 24-cell, i.e. the elements of 2T."""
    return tuple(q.components() for q in build_2T())
