from typing import List, NamedTuple, Tuple

import numpy as np

from mereon.quatgroup import BinaryGroup, ConjugacyClass, conjugacy_classes
from mereon.quatgroup.quaternion import F


class ClassData(NamedTuple):
    order: int
    classes: List[ConjugacyClass]
    coefficients: np.ndarray
    identity_class: int
    class_of_element: Tuple[int, ...]

    @property
    def sizes(self) -> np.ndarray:
        return np.array([c.size for c in self.classes], dtype=np.int64)

    def class_matrix(self, i: int) -> np.ndarray:
        """M_i[j, k] = c_ij^k, the matrix of multiplication by the i-th class sum."""
        return self.coefficients[i]


def class_algebra(group: BinaryGroup[F]) -> ClassData:
    """Class-multiplication coefficients: c_ij^k = #{x ∈ C_i : x⁻¹ z_k ∈ C_j} for a fixed z_k ∈ C_k."""
    classes = conjugacy_classes(group)
    class_of_element = [0] * len(group)
    for position, conjugacy_class in enumerate(classes):
        for member in conjugacy_class.members:
            class_of_element[member] = position
    table, inverses = group.cayley_table, group.inverse_indices
    count = len(classes)
    coefficients = np.zeros((count, count, count), dtype=np.int64)
    for k, target in enumerate(classes):
        z = target.representative
        for i, source in enumerate(classes):
            for x in source.members:
                coefficients[i, class_of_element[table[inverses[x]][z]], k] += 1
    return ClassData(
        order=len(group),
        classes=classes,
        coefficients=coefficients,
        identity_class=class_of_element[group.identity_index],
        class_of_element=tuple(class_of_element),
    )


def class_matrices_commute(data: ClassData) -> bool:
    count = len(data.classes)
    return all(
        np.array_equal(data.class_matrix(i) @ data.class_matrix(j), data.class_matrix(j) @ data.class_matrix(i))
        for i in range(count)
        for j in range(i + 1, count)
    )


def counting_identity_holds(data: ClassData) -> bool:
    """Σ_k c_ij^k |C_k| = |C_i| |C_j|."""
    sizes = data.sizes
    return bool(np.array_equal(data.coefficients @ sizes, np.outer(sizes, sizes)))
