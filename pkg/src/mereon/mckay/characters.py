"""Character tables by the class-sum (Burnside) method.

Central characters ω_χ(C_k) = |C_k| χ(g_k) / χ(1) are the common right eigenvectors of the class matrices.
A random real combination of class matrices separates them when its eigenvalues are distinct.
"""
from typing import List, NamedTuple, Tuple

import numpy as np
from tenacity import Retrying, retry_if_exception_type, stop_after_attempt

from mereon.mckay.classes import ClassData, class_algebra
from mereon.quatgroup import BinaryGroup, ConjugacyClass
from mereon.quatgroup.quaternion import F
from mereon.utils import setup_logger

logger = setup_logger(__name__)

CHARACTER_TOLERANCE = 1e-6
ORTHOGONALITY_TOLERANCE = 1e-9
DEFAULT_SEED = 42
MAX_ATTEMPTS = 10


class DegenerateEigenspaceError(Exception):
    pass


class CharacterTable(NamedTuple):
    label: str
    order: int
    classes: List[ConjugacyClass]
    characters: np.ndarray
    dimensions: Tuple[int, ...]
    tolerance: float
    attempts: int

    @property
    def class_sizes(self) -> np.ndarray:
        return np.array([c.size for c in self.classes], dtype=np.float64)

    def inner_products(self) -> np.ndarray:
        """(1/|G|) Σ_c |C_c| χ_i(c) conj(χ_j(c))."""
        weighted = self.characters * self.class_sizes
        return np.asarray(weighted @ self.characters.conj().T / self.order)


def _sort_key(row: np.ndarray, dimension: int) -> Tuple:
    return (dimension, tuple(np.round(-row.real, 6)), tuple(np.round(row.imag, 6)))


def _split(data: ClassData, rng: np.random.Generator) -> Tuple[np.ndarray, Tuple[int, ...]]:
    count = len(data.classes)
    combination = np.tensordot(rng.standard_normal(count), data.coefficients.astype(np.float64), axes=1)
    eigenvalues, eigenvectors = np.linalg.eig(combination)
    gaps = np.abs(eigenvalues[:, None] - eigenvalues[None, :]) + np.eye(count)
    if gaps.min() < CHARACTER_TOLERANCE:
        raise DegenerateEigenspaceError(f"Eigenvalue gap {gaps.min():.2e} below tolerance")

    sizes = data.sizes.astype(np.float64)
    rows, dimensions = [], []
    for column in range(count):
        omega = eigenvectors[:, column] / eigenvectors[data.identity_class, column]
        for i in range(count):
            if not np.allclose(data.class_matrix(i) @ omega, omega[i] * omega, atol=CHARACTER_TOLERANCE):
                raise DegenerateEigenspaceError("Eigenvector is not common to all class matrices")
        dimension_sq = data.order / float(np.sum(np.abs(omega) ** 2 / sizes))
        dimension = int(round(np.sqrt(dimension_sq)))
        if abs(np.sqrt(dimension_sq) - dimension) > CHARACTER_TOLERANCE:
            raise DegenerateEigenspaceError(f"Irrep dimension {np.sqrt(dimension_sq)} is not integral")
        rows.append(dimension * omega / sizes)
        dimensions.append(dimension)

    order = sorted(range(count), key=lambda r: _sort_key(rows[r], dimensions[r]))
    return np.array([rows[r] for r in order]), tuple(dimensions[r] for r in order)


def character_table(
    group: BinaryGroup[F], seed: int = DEFAULT_SEED, max_attempts: int = MAX_ATTEMPTS
) -> CharacterTable:
    data = class_algebra(group)
    rng = np.random.default_rng(seed)
    attempts = 0
    for attempt in Retrying(
        stop=stop_after_attempt(max_attempts),
        retry=retry_if_exception_type(DegenerateEigenspaceError),
        reraise=True,
    ):
        with attempt:
            attempts += 1
            characters, dimensions = _split(data, rng)
            if sum(d * d for d in dimensions) != data.order:
                raise DegenerateEigenspaceError(f"Σ dim² = {sum(d * d for d in dimensions)}, expected {data.order}")
    table = CharacterTable(
        label=group.label.value,
        order=data.order,
        classes=data.classes,
        characters=characters,
        dimensions=dimensions,
        tolerance=CHARACTER_TOLERANCE,
        attempts=attempts,
    )
    if not orthogonality_holds(table):
        raise DegenerateEigenspaceError(f"{table.label}: character rows are not orthonormal")
    logger.info(f"Character table of {table.label}: dimensions {dimensions} after {attempts} attempt(s)")
    return table


def orthogonality_holds(table: CharacterTable, tolerance: float = ORTHOGONALITY_TOLERANCE) -> bool:
    rows = np.allclose(table.inner_products(), np.eye(len(table.dimensions)), atol=tolerance)
    # column orthogonality: Σ_χ χ(g_a) conj(χ(g_b)) = δ_ab |G| / |C_a|
    columns = table.characters.T @ table.characters.conj()
    expected = np.diag(table.order / table.class_sizes)
    return bool(rows and np.allclose(columns, expected, atol=tolerance * table.order))


def defining_character(group: BinaryGroup[F], classes: List[ConjugacyClass]) -> np.ndarray:
    """Trace of the SU(2) matrix of each class representative, χ_V = 2w."""
    return np.array([2.0 * float(group[c.representative].w) for c in classes], dtype=np.complex128)
