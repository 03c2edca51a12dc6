from mereon.goldfield import PHI_INVERSE, GoldenNum
from mereon.shadow import angular_alignment_check, inner_icosahedron_check, inner_icosahedron_vertices, phi_ladder_check


def test_every_projection_is_aligned() -> None:
    report = angular_alignment_check()

    assert report.aligned == report.total == 118
    assert len(report.multiplicity) == 62
    assert report.multiplicity_by_type == {"A": {2}, "B": {1}, "C": {4}}


def test_inner_icosahedron() -> None:
    report = inner_icosahedron_check()

    assert report.aligned == 12
    assert report.ratio_sq == PHI_INVERSE * PHI_INVERSE
    assert report.shell_1_to_3_ratio_sq == GoldenNum(1) / 5
    assert report.on_reference_icosahedron
    assert len(inner_icosahedron_vertices()) == 12


def test_phi_ladder() -> None:
    report = phi_ladder_check()

    assert report.exact
    assert len(report.steps) == 2
    assert report.floats == (0.809, 0.5, 0.309, 0.0)
