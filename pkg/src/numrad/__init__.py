"""Numerical radius and geometric relations of operators on finite-dimensional
normed spaces, with machine-checkable witnesses."""

from .engine import (
    EngineConfig,
    RadiusResult,
    RadiusWitness,
    default_config,
    numerical_radius,
    radius_of_combination,
    sphere_argmax,
)
from .kernels import BACKEND
from .operators import (
    as_operator,
    identity,
    operator_norm,
    rank_one,
    rotation,
    shift_fixture,
    swap_fixture,
)
from .relations import (
    RelationReport,
    RelationWitness,
    birkhoff_vectors,
    daugavet_check,
    norm_parallel_vectors,
    nr_birkhoff,
    nr_parallel,
    nr_parallel_via_orthogonality,
    vo1_certificate,
    zamani_t1_check,
)
from .spaces import DimensionMismatchError, DualitySet, NormedSpace, pair

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "DimensionMismatchError",
    "DualitySet",
    "EngineConfig",
    "NormedSpace",
    "RadiusResult",
    "RadiusWitness",
    "RelationReport",
    "RelationWitness",
    "as_operator",
    "birkhoff_vectors",
    "daugavet_check",
    "default_config",
    "identity",
    "norm_parallel_vectors",
    "nr_birkhoff",
    "nr_parallel",
    "nr_parallel_via_orthogonality",
    "numerical_radius",
    "operator_norm",
    "pair",
    "radius_of_combination",
    "rank_one",
    "rotation",
    "shift_fixture",
    "sphere_argmax",
    "swap_fixture",
    "vo1_certificate",
    "zamani_t1_check",
    "__version__",
]
