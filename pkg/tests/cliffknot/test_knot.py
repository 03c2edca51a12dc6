import math

import numpy as np
import pytest

from mereon.cliffknot import (
    InsufficientSamplingError,
    InvalidKnotSpecError,
    TorusKnotSpec,
    knot_polyline,
    on_clifford_torus,
    projection_residual,
    ring_torus_residual,
    sample_knot,
    stereo_north,
    torus_knot_point,
    winding_numbers,
)
from mereon.cliffknot.knot import KNOT_TOLERANCE, sample_parameters, stereo_north_all, torus_knot_points
from mereon.shadow import INFINITY


def test_knot_parameter_validation() -> None:
    assert str(TorusKnotSpec(3, 2)) == "T(3,2)"
    assert TorusKnotSpec(3, 2).min_samples == 40

    with pytest.raises(InvalidKnotSpecError, match=r"T\(0,1\): p and q must be positive"):
        TorusKnotSpec(0, 1)
    with pytest.raises(InvalidKnotSpecError, match=r"T\(2,4\): p and q must be coprime"):
        TorusKnotSpec(2, 4)


def test_points_lie_on_clifford_torus() -> None:
    spec = TorusKnotSpec(3, 2)
    points = torus_knot_points(spec, sample_parameters(256))

    assert points.shape == (256, 4)
    assert on_clifford_torus(points)
    assert np.allclose(np.linalg.norm(points, axis=1), 1.0)
    assert not on_clifford_torus(np.array([1.0, 0.0, 0.0, 0.0]))


def test_start_point() -> None:
    point = torus_knot_point(TorusKnotSpec(3, 2), 0.0)

    assert point == pytest.approx([1 / math.sqrt(2), 0.0, 1 / math.sqrt(2), 0.0])
    assert stereo_north(point) == pytest.approx([1 / math.sqrt(2), 0.0, 1 / math.sqrt(2)])


def test_north_pole_projects_to_infinity() -> None:
    pole = np.array([0.0, 0.0, 0.0, 1.0])

    assert stereo_north(pole) is INFINITY
    with pytest.raises(ValueError, match="Curve passes through the projection pole"):
        stereo_north_all(pole[None, :])


@pytest.mark.parametrize(("p", "q"), [(3, 2), (2, 3), (5, 2), (1, 1)])
def test_projection_lands_on_ring_torus(p: int, q: int) -> None:
    assert projection_residual(TorusKnotSpec(p, q)) <= KNOT_TOLERANCE


def test_ring_torus_residual() -> None:
    assert ring_torus_residual(np.array([math.sqrt(2) + 1, 0.0, 0.0])) == pytest.approx(0.0, abs=1e-15)
    assert ring_torus_residual(np.array([0.0, 0.0, 0.0])) == pytest.approx(1.0)
    assert ring_torus_residual(np.zeros((4, 3))).shape == (4,)  # type: ignore[union-attr]


@pytest.mark.parametrize(("p", "q"), [(3, 2), (2, 3), (5, 3)])
def test_winding_numbers(p: int, q: int) -> None:
    assert winding_numbers(TorusKnotSpec(p, q)) == (p, q)


def test_winding_numbers_at_minimum_sampling() -> None:
    spec = TorusKnotSpec(3, 2)

    assert winding_numbers(spec, spec.min_samples) == (3, 2)


def test_undersampled_knot() -> None:
    with pytest.raises(InsufficientSamplingError, match=r"T\(3,2\) needs at least 40 samples, got 39"):
        winding_numbers(TorusKnotSpec(3, 2), 39)


def test_sample_knot() -> None:
    samples = sample_knot(TorusKnotSpec(2, 3), 64)

    assert len(samples) == 64
    assert samples[0].t == 0.0
    assert all(sample.point3 is not None for sample in samples)
    assert knot_polyline(TorusKnotSpec(2, 3), 64) == pytest.approx(np.array([s.point3 for s in samples]))


@pytest.mark.parametrize(("sin_b", "rho"), [(1.0, math.sqrt(2) + 1), (-1.0, math.sqrt(2) - 1)])
def test_projection_reaches_the_ring_torus_extremes(sin_b: float, rho: float) -> None:
    angle = 0.7
    point = np.array([math.cos(angle), math.sin(angle), 0.0, sin_b]) / math.sqrt(2)
    projected = stereo_north(point)

    assert isinstance(projected, np.ndarray)
    assert np.hypot(projected[0], projected[1]) == pytest.approx(rho)
    assert projected[2] == pytest.approx(0.0)
    assert ring_torus_residual(projected) == pytest.approx(0.0, abs=1e-12)


def test_projection_rejects_points_off_the_sphere() -> None:
    with pytest.raises(ValueError, match=r"stereo_north needs a point on the unit 3-sphere, got \|p\|² = 4"):
        stereo_north(np.array([2.0, 0.0, 0.0, 0.0]))
    with pytest.raises(ValueError, match="stereo_north needs points on the unit 3-sphere"):
        stereo_north_all(np.array([[0.5, 0.0, 0.0, 0.0]]))
