import numpy as np

from mereon.mckay import class_algebra, class_matrices_commute, counting_identity_holds
from mereon.quatgroup import build_2I, build_2O, build_2T


def test_class_algebra_of_2T() -> None:
    data = class_algebra(build_2T())

    assert data.order == 24
    assert sorted(data.sizes.tolist()) == [1, 1, 4, 4, 4, 4, 6]
    assert data.classes[data.identity_class].size == 1
    assert data.coefficients.shape == (7, 7, 7)


def test_identity_class_acts_as_identity() -> None:
    data = class_algebra(build_2O())

    assert np.array_equal(data.class_matrix(data.identity_class), np.eye(len(data.classes), dtype=np.int64))


def test_class_matrices_commute() -> None:
    assert class_matrices_commute(class_algebra(build_2T()))
    assert class_matrices_commute(class_algebra(build_2I()))


def test_counting_identity() -> None:
    for group in (build_2T(), build_2O(), build_2I()):
        assert counting_identity_holds(class_algebra(group))
