import numpy as np
import pytest

from taulab.core.field import PrimeField
from taulab.exceptions import ConfigError, InvalidShape

F7 = PrimeField(7)


def test_rejects_composite_and_large_characteristic():
    with pytest.raises(ConfigError):
        PrimeField(4)
    with pytest.raises(ConfigError):
        PrimeField(2 ** 20)


def test_mat_reduces_entries():
    m = F7.mat([[8, -1], [14, 3]])
    assert m.dtype == np.int64
    assert m.tolist() == [[1, 6], [0, 3]]


def test_rref_uses_leftmost_pivot():
    reduced, pivots, rank = F7.rref(np.array([[0, 2, 4], [0, 1, 2]]))
    assert pivots == (1,)
    assert rank == 1
    assert reduced.tolist() == [[0, 1, 2], [0, 0, 0]]


def test_rank_and_kernel():
    m = np.array([[1, 2], [2, 4]])
    assert F7.rank(m) == 1
    kernel = F7.kernel_basis(m)
    assert kernel.tolist() == [[5], [1]]
    assert not F7.matmul(m, kernel).any()


def test_rank_of_empty_matrix():
    assert F7.rank(np.zeros((0, 3), dtype=np.int64)) == 0


def test_inverse():
    m = np.array([[1, 1], [0, 1]])
    assert F7.inverse(m).tolist() == [[1, 6], [0, 1]]
    with pytest.raises(InvalidShape):
        F7.inverse(np.array([[1, 2], [2, 4]]))
    with pytest.raises(InvalidShape):
        F7.inverse(np.array([[1, 2, 3]]))


def test_solve_right():
    m = np.array([[1, 0], [0, 2]])
    x = F7.solve_right(m, np.array([[3], [4]]))
    assert F7.matmul(m, x).tolist() == [[3], [4]]
    assert F7.solve_right(np.array([[1], [0]]), np.array([[0], [1]])) is None


def test_column_space_and_complement():
    m = np.array([[1, 2, 0], [0, 0, 0], [0, 0, 1]])
    image = F7.column_space(m)
    assert image.shape == (3, 2)
    both = np.hstack([image, F7.complement(image)])
    assert F7.rank(both) == 3


def test_chain_multiplies_right_to_left():
    a = np.array([[0, 1], [0, 0]])
    b = np.array([[0, 0], [1, 0]])
    assert F7.chain([a, b], 2).tolist() == F7.matmul(b, a).tolist()
    assert F7.chain([], 3).tolist() == np.eye(3, dtype=np.int64).tolist()


def test_power():
    m = np.array([[1, 1], [0, 1]])
    assert F7.power(m, 10).tolist() == [[1, 3], [0, 1]]


def test_charpoly_and_roots():
    assert F7.charpoly(np.array([[0, 1], [0, 0]])) == [0, 0, 1]
    poly = F7.charpoly(np.diag([2, 3]))
    assert poly == [6, 2, 1]
    assert F7.roots(poly) == [2, 3]


def test_charpoly_matches_determinant_at_points():
    rng = np.random.default_rng(0)
    m = F7.random_matrix(rng, 4, 4)
    poly = F7.charpoly(m)
    for x in range(7):
        value = sum(c * x ** d for d, c in enumerate(poly)) % 7
        shifted = (x * np.eye(4, dtype=np.int64) - m) % 7
        assert (F7.rank(shifted) < 4) == (value == 0)
