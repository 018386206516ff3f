"""Dense operators on a catalog space, plus the standard fixture matrices."""

from __future__ import annotations

import numpy as np

from .spaces import DimensionMismatchError, NormedSpace

# Operators are plain dim x dim numpy arrays acting by matrix-vector product;
# apply/add/scale are @, +, and scalar *.


def as_operator(space: NormedSpace, matrix) -> np.ndarray:
    T = np.asarray(matrix, dtype=space.dtype)
    if T.shape != (space.dim, space.dim):
        raise DimensionMismatchError(
            f"expected a {space.dim}x{space.dim} matrix, got shape {T.shape}"
        )
    if not np.all(np.isfinite(T)):
        raise ValueError("operator has non-finite entries")
    return T


def rank_one(xstar, x) -> np.ndarray:
    """The operator z -> x*(z) x, i.e. the matrix with entries x_i * xstar_j."""
    x = np.asarray(x)
    xstar = np.asarray(xstar)
    if x.shape != xstar.shape or x.ndim != 1:
        raise DimensionMismatchError(
            f"rank_one needs two vectors of equal length, got {x.shape} and {xstar.shape}"
        )
    return np.outer(x, xstar)


def identity(dim: int, complex_field: bool = False) -> np.ndarray:
    return np.eye(dim, dtype=np.complex128 if complex_field else np.float64)


def shift_fixture() -> np.ndarray:
    """(x, y) -> (0, x)."""
    return np.array([[0.0, 0.0], [1.0, 0.0]])


def swap_fixture() -> np.ndarray:
    """(x, y) -> (y, x)."""
    return np.array([[0.0, 1.0], [1.0, 0.0]])


def rotation(theta: float) -> np.ndarray:
    c, s = np.cos(theta), np.sin(theta)
    return np.array([[c, -s], [s, c]])


def operator_norm(space: NormedSpace, T, cfg=None) -> float:
    """sup{||Tx|| : ||x|| = 1} via the sphere optimizer (certified lower bound)."""
    from .engine import EngineConfig, _opnorm_value

    T = as_operator(space, T)
    cfg = cfg or EngineConfig()
    return _opnorm_value(space, T, cfg)
