"""Torus knots on the Clifford torus of S³ and their stereographic images on the ring torus R = √2, r = 1."""
import math
from dataclasses import dataclass
from typing import List, NamedTuple, Optional, Tuple, Union

import numpy as np

from mereon.shadow.projection import INFINITY, PointAtInfinity
from mereon.utils import setup_logger

logger = setup_logger(__name__)

KNOT_TOLERANCE = 1e-12
DEFAULT_SAMPLES = 1024
SQRT2 = math.sqrt(2.0)
MAJOR_RADIUS = SQRT2
MINOR_RADIUS = 1.0
MAX_UNWRAP_STEP = math.pi / 2


class InvalidKnotSpecError(Exception):
    pass


class InsufficientSamplingError(Exception):
    pass


@dataclass(frozen=True)
class TorusKnotSpec:
    p: int
    q: int

    def __post_init__(self) -> None:
        if self.p < 1 or self.q < 1:
            raise InvalidKnotSpecError(f"T({self.p},{self.q}): p and q must be positive")
        if math.gcd(self.p, self.q) != 1:
            raise InvalidKnotSpecError(f"T({self.p},{self.q}): p and q must be coprime")

    def __str__(self) -> str:
        return f"T({self.p},{self.q})"

    @property
    def min_samples(self) -> int:
        return 8 * (self.p + self.q)


class KnotSample(NamedTuple):
    t: float
    point4: Tuple[float, float, float, float]
    point3: Optional[Tuple[float, float, float]]


def sample_parameters(samples: int) -> np.ndarray:
    return 2 * np.pi * np.arange(samples) / samples


def torus_knot_points(spec: TorusKnotSpec, t: np.ndarray) -> np.ndarray:
    """(cos pt, sin pt, cos qt, sin qt) / √2 for every t, one row per sample."""
    return np.stack([np.cos(spec.p * t), np.sin(spec.p * t), np.cos(spec.q * t), np.sin(spec.q * t)], axis=-1) / SQRT2


def torus_knot_point(spec: TorusKnotSpec, t: float) -> np.ndarray:
    return torus_knot_points(spec, np.array([t]))[0]


def on_clifford_torus(points: np.ndarray, tolerance: float = KNOT_TOLERANCE) -> bool:
    points = np.atleast_2d(points)
    first = points[:, 0] ** 2 + points[:, 1] ** 2
    second = points[:, 2] ** 2 + points[:, 3] ** 2
    return bool(np.all(np.abs(first - 0.5) <= tolerance) and np.all(np.abs(second - 0.5) <= tolerance))


def stereo_north(point4: np.ndarray) -> Union[np.ndarray, PointAtInfinity]:
    """σ(x, y, z, w) = (x, y, z) / (1 − w) from the north pole (0, 0, 0, 1); the point must lie on S³."""
    norm_sq = float(np.dot(point4, point4))
    if abs(norm_sq - 1.0) > KNOT_TOLERANCE:
        raise ValueError(f"stereo_north needs a point on the unit 3-sphere, got |p|² = {norm_sq:.6g}")
    denominator = 1.0 - float(point4[3])
    if abs(denominator) <= KNOT_TOLERANCE:
        return INFINITY
    return np.asarray(point4[:3], dtype=np.float64) / denominator


def stereo_north_all(points: np.ndarray) -> np.ndarray:
    if np.any(np.abs(np.einsum("ij,ij->i", points, points) - 1.0) > KNOT_TOLERANCE):
        raise ValueError("stereo_north needs points on the unit 3-sphere")
    denominators = 1.0 - points[:, 3]
    if np.any(np.abs(denominators) <= KNOT_TOLERANCE):
        raise ValueError("Curve passes through the projection pole")
    return points[:, :3] / denominators[:, None]


def ring_torus_residual(point3: np.ndarray) -> Union[float, np.ndarray]:
    """(√(x² + y²) − √2)² + z² − 1, zero on the ring torus."""
    point3 = np.asarray(point3, dtype=np.float64)
    rho = np.hypot(point3[..., 0], point3[..., 1])
    residual = (rho - MAJOR_RADIUS) ** 2 + point3[..., 2] ** 2 - MINOR_RADIUS**2
    return float(residual) if residual.ndim == 0 else residual


def sample_knot(spec: TorusKnotSpec, samples: int = DEFAULT_SAMPLES) -> List[KnotSample]:
    t = sample_parameters(samples)
    points = torus_knot_points(spec, t)
    result = []
    for parameter, point in zip(t, points):
        projected = stereo_north(point)
        point3 = None if projected is INFINITY else tuple(float(c) for c in projected)  # type: ignore[union-attr]
        result.append(KnotSample(float(parameter), tuple(float(c) for c in point), point3))  # type: ignore[arg-type]
    return result


def knot_polyline(spec: TorusKnotSpec, samples: int = DEFAULT_SAMPLES) -> np.ndarray:
    """Projected points of the closed curve, one row per sample; the closing edge is implied."""
    return stereo_north_all(torus_knot_points(spec, sample_parameters(samples)))


def projection_residual(spec: TorusKnotSpec, samples: int = DEFAULT_SAMPLES) -> float:
    return float(np.max(np.abs(ring_torus_residual(knot_polyline(spec, samples)))))


def _net_turns(angles: np.ndarray) -> int:
    closed = np.append(angles, angles[0])
    steps = np.diff(closed)
    steps = (steps + np.pi) % (2 * np.pi) - np.pi
    if np.max(np.abs(steps)) > MAX_UNWRAP_STEP:
        raise InsufficientSamplingError(f"Angle step {np.max(np.abs(steps)):.3f} exceeds π/2")
    return abs(int(round(float(np.sum(steps)) / (2 * np.pi))))


def winding_numbers(spec: TorusKnotSpec, samples: int = DEFAULT_SAMPLES) -> Tuple[int, int]:
    """Net turns of the projected curve around the torus axis and through the tube."""
    if samples < spec.min_samples:
        raise InsufficientSamplingError(f"{spec} needs at least {spec.min_samples} samples, got {samples}")
    points = knot_polyline(spec, samples)
    longitude = np.arctan2(points[:, 1], points[:, 0])
    rho = np.hypot(points[:, 0], points[:, 1])
    meridian = np.arctan2(points[:, 2], rho - MAJOR_RADIUS)
    windings = (_net_turns(longitude), _net_turns(meridian))
    logger.info(f"{spec} winds {windings[0]} times around the axis and {windings[1]} times through the tube")
    return windings
