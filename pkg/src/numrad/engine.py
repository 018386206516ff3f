"""Global maximization on the unit sphere and the numerical radius.

Planar real spaces use an angle-grid sweep with bisection refinement
(compiled kernel when available); everything else uses deterministic
multistart pattern search with per-start RNG streams derived from
(seed, start index).  All values are certified lower bounds: every
reported witness is feasible.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import kernels
from .spaces import COMPLEX, DimensionMismatchError, NormedSpace, pair

_TWO_PI = 2.0 * np.pi
_REFINE_POINTS = 129  # each refinement round shrinks the bucket 64x
_STEP_MIN = 1e-7
_MAX_ITER = 400


@dataclass(frozen=True)
class EngineConfig:
    grid_size: int = 2048
    refine_rounds: int = 3
    multistarts: int = 64
    seed: int = 0
    tol: float = 1e-7

    def __post_init__(self):
        if self.grid_size < 16:
            raise ValueError(f"grid_size must be >= 16, got {self.grid_size}")
        if self.multistarts < 1:
            raise ValueError(f"multistarts must be >= 1, got {self.multistarts}")


def default_config(space: NormedSpace, seed: int = 0) -> EngineConfig:
    return EngineConfig(seed=seed, tol=space.tol)


@dataclass
class RadiusWitness:
    x: np.ndarray
    xstar: np.ndarray
    attained: complex


@dataclass
class RadiusResult:
    value: float
    witnesses: list[RadiusWitness] = field(default_factory=list)


# ----------------------------------------------------------------------
# planar sweep machinery
# ----------------------------------------------------------------------

def _planar(space: NormedSpace) -> bool:
    return space.dim == 2 and space.field != COMPLEX


def _sweep_max(sweep, grid: int, rounds: int):
    """Coarse sweep over the full circle, then bisect the best bucket."""
    step = _TWO_PI / grid
    best, bt = sweep(0.0, step, grid)
    h = step
    for _ in range(rounds):
        v, t = sweep(bt - h, 2.0 * h / (_REFINE_POINTS - 1), _REFINE_POINTS)
        if v >= best:
            best, bt = v, t
        h = 2.0 * h / (_REFINE_POINTS - 1)
    return best, bt


def _planar_point(space: NormedSpace, theta: float) -> np.ndarray:
    return space.unitize(np.array([np.cos(theta), np.sin(theta)]))


def _cluster_thetas(th, vals, ctol, max_clusters=16):
    """Argmax angle of each run of near-maximal grid values (with wraparound)."""
    top = vals.max()
    mask = vals >= top - ctol
    idx = np.flatnonzero(mask)
    if idx.size == 0:
        return []
    n = len(vals)
    breaks = np.flatnonzero(np.diff(idx) > 1)
    runs = np.split(idx, breaks + 1)
    # merge a run touching the end with one touching the start
    if len(runs) > 1 and runs[0][0] == 0 and runs[-1][-1] == n - 1:
        runs[0] = np.concatenate([runs[-1], runs[0]])
        runs = runs[:-1]
    out = []
    for run in runs:
        k = run[np.argmax(vals[run])]
        out.append((float(vals[k]), float(th[k])))
    out.sort(reverse=True)
    return out[:max_clusters]


# ----------------------------------------------------------------------
# multistart pattern search
# ----------------------------------------------------------------------

def _to_field(space: NormedSpace, U: np.ndarray) -> np.ndarray:
    if space.field == COMPLEX:
        n = space.dim
        return U[..., :n] + 1j * U[..., n:]
    return U


def _pattern_max(space: NormedSpace, value_fn, cfg: EngineConfig):
    """Synchronized multistart compass search on the unit sphere.

    value_fn maps an (m, dim) array of unit vectors to (m,) objective values.
    Returns (points, values) sorted by decreasing value; deterministic for a
    fixed seed (per-start RNG streams, batched synchronous updates).
    """
    n = space.dim
    d = 2 * n if space.field == COMPLEX else n
    starts = [
        np.random.default_rng([cfg.seed, k]).standard_normal(d)
        for k in range(cfg.multistarts)
    ]
    starts.extend(np.eye(d))  # canonical axis starts
    U = np.stack(starts)
    U /= np.asarray(space.norm(_to_field(space, U)))[:, None]
    m = U.shape[0]
    dirs = np.concatenate([np.eye(d), -np.eye(d)])  # (2d, d)
    steps = np.full(m, 0.4)
    cur = np.asarray(value_fn(_to_field(space, U)), dtype=float)
    it = 0
    while steps.max() > _STEP_MIN and it < _MAX_ITER:
        cand = U[:, None, :] + steps[:, None, None] * dirs[None, :, :]
        flat = cand.reshape(m * 2 * d, d)
        norms = np.asarray(space.norm(_to_field(space, flat)))
        flat = flat / norms[:, None]
        vals = np.asarray(value_fn(_to_field(space, flat)), dtype=float).reshape(m, 2 * d)
        k = np.argmax(vals, axis=1)
        best = vals[np.arange(m), k]
        improved = best > cur + 1e-15
        U[improved] = flat.reshape(m, 2 * d, d)[improved, k[improved]]
        cur = np.maximum(cur, best)
        steps[~improved] *= 0.5
        it += 1
    order = np.argsort(-cur)
    return _to_field(space, U[order]), cur[order]


# ----------------------------------------------------------------------
# numerical radius and operator norm
# ----------------------------------------------------------------------

def _check_operator(space: NormedSpace, T) -> np.ndarray:
    T = np.asarray(T, dtype=space.dtype)
    if T.shape != (space.dim, space.dim):
        raise DimensionMismatchError(
            f"expected a {space.dim}x{space.dim} matrix, got shape {T.shape}"
        )
    return T


def _radius_value_fn(space: NormedSpace, T):
    return lambda X: space.support_values(X, X @ T.T)


def _make_witness(space: NormedSpace, T, x) -> RadiusWitness:
    y = T @ x
    a = space.supporting_functional(x, y)
    return RadiusWitness(x=x, xstar=a, attained=pair(a, y))


def numerical_radius(space: NormedSpace, T, cfg: EngineConfig | None = None,
                     witnesses: bool = True) -> RadiusResult:
    """v(T) = sup{|x*(Tx)| : x unit, x* in J(x)} with maximizing witnesses.

    witnesses=False skips witness extraction (fast path for inner search
    loops; the value is identical)."""
    cfg = cfg or default_config(space)
    T = _check_operator(space, T)
    if _planar(space):
        code, p = space.kind_code, space.p or 0.0
        Tf = np.ascontiguousarray(T, dtype=np.float64)

        def sweep(t0, step, n):
            return kernels.radius_sweep(Tf, code, p, t0, step, n)

        best, bt = _sweep_max(sweep, cfg.grid_size, cfg.refine_rounds)
        if not witnesses:
            return RadiusResult(value=float(best))
        th, vals = kernels.radius_values(
            Tf, code, p, 0.0, _TWO_PI / cfg.grid_size, cfg.grid_size
        )
        ctol = max(10.0 * cfg.tol, 1e-6)
        cands = [(best, bt)]
        for v0, t0 in _cluster_thetas(th, vals, ctol):
            h = _TWO_PI / cfg.grid_size
            v, tt = v0, t0
            for _ in range(cfg.refine_rounds):
                vv, tr = sweep(tt - h, 2.0 * h / (_REFINE_POINTS - 1), _REFINE_POINTS)
                if vv >= v:
                    v, tt = vv, tr
                h = 2.0 * h / (_REFINE_POINTS - 1)
            cands.append((float(v), float(tt)))
        value = max(v for v, _ in cands)
        witnesses = []
        seen = []
        for v, t in sorted(cands, reverse=True):
            if v < value - cfg.tol:
                continue
            x = _planar_point(space, t)
            if any(np.abs(x - xs).max() < 1e-6 for xs in seen):
                continue
            seen.append(x)
            witnesses.append(_make_witness(space, T, x))
        return RadiusResult(value=float(value), witnesses=witnesses)

    X, vals = _pattern_max(space, _radius_value_fn(space, T), cfg)
    value = float(vals[0])
    if not witnesses:
        return RadiusResult(value=value)
    out = []
    seen = []
    for x, v in zip(X, vals):
        if v < value - cfg.tol or len(out) >= 8:
            break
        if any(np.abs(x - xs).max() < 1e-4 for xs in seen):
            continue
        seen.append(x)
        out.append(_make_witness(space, T, x))
    return RadiusResult(value=value, witnesses=out)


def radius_of_combination(space: NormedSpace, T, S, lam, cfg: EngineConfig | None = None) -> float:
    """v(T + lam*S)."""
    T = _check_operator(space, T)
    S = _check_operator(space, S)
    return numerical_radius(space, T + lam * S, cfg, witnesses=False).value


def _opnorm_value(space: NormedSpace, T, cfg: EngineConfig) -> float:
    T = _check_operator(space, T)
    if _planar(space):
        code, p = space.kind_code, space.p or 0.0
        Tf = np.ascontiguousarray(T, dtype=np.float64)

        def sweep(t0, step, n):
            return kernels.opnorm_sweep(Tf, code, p, t0, step, n)

        best, _ = _sweep_max(sweep, cfg.grid_size, cfg.refine_rounds)
        return float(best)
    _, vals = _pattern_max(space, lambda X: space.norm(X @ T.T), cfg)
    return float(vals[0])


def sphere_argmax(space: NormedSpace, objective, cfg: EngineConfig | None = None):
    """Maximize a scalar objective over the unit sphere; returns (x, value).

    The objective takes a single unit vector; it may be nonsmooth on a null
    set (duality switching loci)."""
    cfg = cfg or default_config(space)

    def batch(X):
        return np.array([objective(x) for x in X], dtype=float)

    if _planar(space):
        def sweep(t0, step, n):
            th = t0 + step * np.arange(n)
            pts = np.stack([np.cos(th), np.sin(th)], axis=1)
            X = space.unitize(pts)
            vals = batch(X)
            k = int(np.argmax(vals))
            return float(vals[k]), float(th[k])

        best, bt = _sweep_max(sweep, min(cfg.grid_size, 1024), cfg.refine_rounds)
        return _planar_point(space, bt), float(best)

    X, vals = _pattern_max(space, batch, cfg)
    return X[0], float(vals[0])
