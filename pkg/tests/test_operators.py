import numpy as np
import pytest

from numrad import (
    DimensionMismatchError,
    NormedSpace,
    as_operator,
    identity,
    operator_norm,
    rank_one,
    rotation,
    shift_fixture,
    swap_fixture,
)


def test_fixtures():
    T = shift_fixture()
    assert np.array_equal(T @ np.array([2.0, 5.0]), [0.0, 2.0])
    S = swap_fixture()
    assert np.array_equal(S @ np.array([2.0, 5.0]), [5.0, 2.0])
    assert np.allclose(rotation(np.pi / 2) @ np.array([1.0, 0.0]), [0.0, 1.0])
    assert np.array_equal(identity(3), np.eye(3))
    assert identity(2, complex_field=True).dtype == np.complex128


def test_rank_one():
    A = rank_one([2.0, 3.0], [1.0, -1.0])
    x = np.array([1.0, 1.0])
    # z -> xstar(z) x
    assert np.allclose(A @ x, 5.0 * np.array([1.0, -1.0]))
    with pytest.raises(DimensionMismatchError):
        rank_one([1.0, 0.0], [1.0, 0.0, 0.0])


def test_as_operator_validation():
    l2 = NormedSpace(2, "lp", 2.0)
    with pytest.raises(DimensionMismatchError):
        as_operator(l2, np.eye(3))
    with pytest.raises(ValueError):
        as_operator(l2, [[np.inf, 0.0], [0.0, 0.0]])
    T = as_operator(l2, [[1, 2], [3, 4]])
    assert T.dtype == np.float64


def test_operator_norm_euclidean_is_spectral_norm():
    l2 = NormedSpace(2, "lp", 2.0)
    rng = np.random.default_rng(7)
    for _ in range(20):
        T = rng.uniform(-1, 1, (2, 2))
        assert operator_norm(l2, T) == pytest.approx(
            np.linalg.svd(T, compute_uv=False)[0], abs=1e-8)


def test_operator_norm_l1_linf_closed_form():
    # l1 -> l1 operator norm is the max column sum; linf -> linf the max row sum
    T = np.array([[1.0, -2.0], [3.0, 0.5]])
    assert operator_norm(NormedSpace(2, "l1"), T) == pytest.approx(4.0, abs=1e-8)
    assert operator_norm(NormedSpace(2, "linf"), T) == pytest.approx(3.5, abs=1e-8)


def test_operator_norm_l4_fixture_values():
    l4 = NormedSpace(2, "lp", 4.0)
    T, S = shift_fixture(), swap_fixture()
    assert operator_norm(l4, T) == pytest.approx(1.0, abs=1e-8)
    assert operator_norm(l4, S) == pytest.approx(1.0, abs=1e-8)
    assert operator_norm(l4, T + S) == pytest.approx(2.0, abs=1e-8)
