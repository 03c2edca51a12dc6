from fractions import Fraction

import pytest

from mereon.goldfield import PHI, PHI_INVERSE, GoldenNum, vec3
from mereon.polytopes import Polyhedron, VertexLabel
from mereon.quatgroup import build_2T
from mereon.shadow import NoMatchError, NoRootInFieldError, lift, type_from_w, verify_62_match

HALF = Fraction(1, 2)


def test_every_m120p_vertex_lifts_into_2I() -> None:
    report = verify_62_match()

    assert report.all_matched
    assert (report.matched, report.total) == (62, 62)
    assert report.type_counts == {"A": 20, "C": 12, "B": 30}
    assert len({vertex.matched for vertex in report.lifted}) == 62


def test_remainder_census() -> None:
    report = verify_62_match()

    assert len(report.remainder) == 58
    assert report.remainder_census == {"poles": 2, "|w| = φ/2": 24, "lower mirrors": 32}


def test_latitudes_by_type(m120p: Polyhedron) -> None:
    expected = {VertexLabel.A: GoldenNum(HALF), VertexLabel.C: PHI_INVERSE * HALF, VertexLabel.B: GoldenNum(0)}

    for label, w in expected.items():
        lifted = lift(m120p, m120p.indices_of_type(label)[0])
        assert lifted.w == w
        assert lifted.type.label == label
        assert lifted.quaternion.is_unit()


def test_type_from_w() -> None:
    assert type_from_w(PHI * HALF) is None
    assert type_from_w(GoldenNum(0)).label == VertexLabel.B  # type: ignore[union-attr]


def test_c_vertices_are_not_in_2T(m120p: Polyhedron) -> None:
    index = m120p.indices_of_type(VertexLabel.C)[0]

    with pytest.raises(NoMatchError, match="is not an element of 2T"):
        lift(m120p, index, build_2T())


def test_vertex_outside_unit_ball() -> None:
    far = Polyhedron("far", (vec3(100, 0, 0),), (None,), (), ())

    with pytest.raises(NoRootInFieldError, match="Vertex 0 lies outside the unit ball after scaling"):
        lift(far, 0)


def test_latitude_without_golden_root() -> None:
    # scales to (1/2, 0, 0), so w² = 3/4
    half_way = Polyhedron("half-way", (vec3(PHI * PHI, 0, 0),), (None,), (), ())

    with pytest.raises(NoRootInFieldError, match="has no square root in Q"):
        lift(half_way, 0)
