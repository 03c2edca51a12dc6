from typing import List, NamedTuple, Sequence

import numpy as np

from mereon.cliffknot.knot import (
    DEFAULT_SAMPLES,
    KNOT_TOLERANCE,
    TorusKnotSpec,
    sample_parameters,
    torus_knot_points,
)

MERON_KNOT = TorusKnotSpec(3, 2)
STANDARD_KNOT = TorusKnotSpec(2, 3)


class CongruenceReport(NamedTuple):
    samples: int
    max_residual: float
    orthogonal: bool
    determinant: int

    @property
    def ok(self) -> bool:
        return self.orthogonal and self.determinant == 1 and self.max_residual <= KNOT_TOLERANCE


def clifford_rotation() -> np.ndarray:
    """(x, y, z, w) ↦ (z, w, x, y): swaps the two planes of the Clifford torus."""
    return np.array(
        [
            [0, 0, 1, 0],
            [0, 0, 0, 1],
            [1, 0, 0, 0],
            [0, 1, 0, 0],
        ],
        dtype=np.int64,
    )


def integer_determinant(matrix: Sequence[Sequence[int]]) -> int:
    """Bareiss fraction-free elimination; exact for integer matrices."""
    rows: List[List[int]] = [[int(c) for c in row] for row in matrix]
    size = len(rows)
    sign, previous = 1, 1
    for k in range(size - 1):
        if rows[k][k] == 0:
            pivot = next((r for r in range(k + 1, size) if rows[r][k] != 0), None)
            if pivot is None:
                return 0
            rows[k], rows[pivot] = rows[pivot], rows[k]
            sign = -sign
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                rows[i][j] = (rows[i][j] * rows[k][k] - rows[i][k] * rows[k][j]) // previous
        previous = rows[k][k]
    return sign * rows[-1][-1]


def is_orthogonal(matrix: np.ndarray) -> bool:
    """MᵀM = I in integer arithmetic."""
    return bool(np.array_equal(matrix.T @ matrix, np.eye(len(matrix), dtype=np.int64)))


def congruence_check(samples: int = DEFAULT_SAMPLES) -> CongruenceReport:
    """M carries T(3,2) onto T(2,3) at every sampled parameter."""
    if samples < 3:
        raise ValueError(f"Need at least 3 samples, got {samples}")
    rotation = clifford_rotation()
    t = sample_parameters(samples)
    rotated = torus_knot_points(MERON_KNOT, t) @ rotation.T
    residual = float(np.max(np.abs(rotated - torus_knot_points(STANDARD_KNOT, t))))
    return CongruenceReport(samples, residual, is_orthogonal(rotation), integer_determinant(rotation.tolist()))
