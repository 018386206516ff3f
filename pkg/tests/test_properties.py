import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from numrad import NormedSpace, numerical_radius, operator_norm, pair
from numrad.engine import EngineConfig

SPACES = [
    NormedSpace(2, "lp", 2.0),
    NormedSpace(2, "lp", 4.0),
    NormedSpace(2, "lp", 1.5),
    NormedSpace(2, "l1"),
    NormedSpace(2, "linf"),
    NormedSpace(2, "mixed"),
    NormedSpace(3, "lp", 3.0),
]

coords = st.floats(min_value=-10.0, max_value=10.0, allow_nan=False)


def vectors(dim):
    return st.lists(coords, min_size=dim, max_size=dim).map(np.array)


@st.composite
def space_and_vectors(draw, n=2):
    space = draw(st.sampled_from(SPACES))
    vs = [draw(vectors(space.dim)) for _ in range(n)]
    return space, vs


@given(space_and_vectors())
@settings(max_examples=150, deadline=None)
def test_norm_triangle_and_homogeneity(sv):
    space, (x, y) = sv
    nx, ny = float(space.norm(x)), float(space.norm(y))
    assert float(space.norm(x + y)) <= nx + ny + 1e-9 * (1 + nx + ny)
    c = 2.5
    assert float(space.norm(c * x)) == pytest.approx(c * nx, rel=1e-12, abs=1e-12)
    assert float(space.norm(-x)) == pytest.approx(nx, rel=1e-12, abs=1e-12)


@given(space_and_vectors())
@settings(max_examples=150, deadline=None)
def test_dual_pairing_inequality(sv):
    space, (x, a) = sv
    lhs = abs(pair(a, x))
    rhs = float(space.dual_norm(a)) * float(space.norm(x))
    assert lhs <= rhs + 1e-9 * (1 + rhs)


@given(space_and_vectors(1))
@settings(max_examples=100, deadline=None)
def test_duality_certificate(sv):
    space, (x,) = sv
    if float(space.norm(x)) < 1e-6:
        return
    u = space.unitize(x)
    a = space.supporting_functional(u)
    assert float(space.dual_norm(a)) == pytest.approx(1.0, abs=1e-9)
    assert complex(pair(a, u)).real == pytest.approx(1.0, abs=1e-9)


@given(st.sampled_from(SPACES), st.integers(0, 2**32 - 1))
@settings(max_examples=40, deadline=None)
def test_support_values_dominate_duality_extremes(space, seed):
    rng = np.random.default_rng(seed)
    x = space.random_unit(rng)
    y = rng.standard_normal(space.dim)
    sv = float(space.support_values(x[None, :], y[None, :])[0])
    for a in space.duality_set(x).functionals:
        assert abs(pair(a, y)) <= sv + 1e-9


matrix_entries = st.floats(min_value=-3.0, max_value=3.0, allow_nan=False)


@st.composite
def space_and_matrices(draw, n=2):
    space = draw(st.sampled_from(SPACES[:6]))  # planar: keep it fast
    d = space.dim
    ms = [np.array(draw(st.lists(st.lists(matrix_entries, min_size=d, max_size=d),
                                 min_size=d, max_size=d))) for _ in range(n)]
    return space, ms


@given(space_and_matrices())
@settings(max_examples=60, deadline=None)
def test_radius_seminorm(sm):
    space, (T, S) = sm
    cfg = EngineConfig(grid_size=1024, tol=space.tol)
    vT = numerical_radius(space, T, cfg, witnesses=False).value
    vS = numerical_radius(space, S, cfg, witnesses=False).value
    vTS = numerical_radius(space, T + S, cfg, witnesses=False).value
    assert vTS <= vT + vS + 1e-6
    assert numerical_radius(space, -1.5 * T, cfg, witnesses=False).value == \
        pytest.approx(1.5 * vT, abs=1e-9)


@given(space_and_matrices(1))
@settings(max_examples=40, deadline=None)
def test_radius_below_operator_norm(sm):
    space, (T,) = sm
    cfg = EngineConfig(grid_size=1024, tol=space.tol)
    vT = numerical_radius(space, T, cfg, witnesses=False).value
    assert vT <= operator_norm(space, T, cfg) + 1e-6


@given(space_and_matrices(), st.floats(-2, 2), st.floats(-2, 2))
@settings(max_examples=40, deadline=None)
def test_radius_convex_in_alpha(sm, a1, a2):
    space, (T, S) = sm
    cfg = EngineConfig(grid_size=1024, tol=space.tol)

    def v(a):
        return numerical_radius(space, T + a * S, cfg, witnesses=False).value

    assert v((a1 + a2) / 2) <= (v(a1) + v(a2)) / 2 + 1e-6
