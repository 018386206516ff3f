"""Decision procedures with witnesses for the four geometric relations and
the alternative Daugavet criterion.

Conventions: gap = achieved - required, so verdict=true iff gap >= -tol.
Over the reals the unimodular set is exactly {+1, -1}; over the complexes it
is searched on a phase grid with golden-section refinement of the best arc.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .engine import EngineConfig, default_config, numerical_radius
from .operators import as_operator, identity, operator_norm
from .spaces import COMPLEX, NormedSpace, pair

_PHI = (1.0 + np.sqrt(5.0)) / 2.0
_T_GRID = 720     # phase grid for cheap (vector-norm) objectives
_T_GRID_HEAVY = 48  # phase grid when each evaluation is a radius computation


@dataclass
class RelationWitness:
    scalar: complex | None = None  # lambda or alpha
    x: np.ndarray | None = None
    xstar: np.ndarray | None = None
    attained: dict = field(default_factory=dict)


@dataclass
class RelationReport:
    relation: str
    verdict: bool
    gap: float
    tol: float
    witness: RelationWitness | None = None
    details: dict = field(default_factory=dict)
    sweep: list | None = None


# ----------------------------------------------------------------------
# 1-D search helpers
# ----------------------------------------------------------------------

def golden_min(f, lo: float, hi: float, xtol: float):
    """Golden-section minimum of a (weakly) unimodal function on [lo, hi]."""
    a, b = float(lo), float(hi)
    c = b - (b - a) / _PHI
    d = a + (b - a) / _PHI
    fc, fd = f(c), f(d)
    while b - a > xtol:
        if fc < fd:
            b, d, fd = d, c, fc
            c = b - (b - a) / _PHI
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + (b - a) / _PHI
            fd = f(d)
    xm = 0.5 * (a + b)
    return xm, f(xm)


def unimodular_argmax(g, n_grid: int):
    """Maximize g(lambda) over the complex unit circle: grid + refinement."""
    th = np.linspace(0.0, 2.0 * np.pi, n_grid, endpoint=False)
    vals = [g(np.exp(1j * t)) for t in th]
    k = int(np.argmax(vals))
    h = 2.0 * np.pi / n_grid
    tm, negv = golden_min(lambda t: -g(np.exp(1j * t)), th[k] - h, th[k] + h,
                          xtol=h * 1e-6)
    if -negv >= vals[k]:
        return np.exp(1j * tm), -negv
    return np.exp(1j * th[k]), float(vals[k])


def _unimodular_candidates(space: NormedSpace):
    return (1.0, -1.0) if space.field != COMPLEX else None


# ----------------------------------------------------------------------
# vector-level relations
# ----------------------------------------------------------------------

def norm_parallel_vectors(space: NormedSpace, x, y, cfg: EngineConfig | None = None,
                          collect_sweep: bool = False) -> RelationReport:
    """x || y iff some unimodular lambda gives ||x + lambda y|| = ||x|| + ||y||."""
    cfg = cfg or default_config(space)
    x = space.as_vector(x)
    y = space.as_vector(y)
    nx, ny = float(space.norm(x)), float(space.norm(y))
    sweep = [] if collect_sweep else None
    if space.field != COMPLEX:
        cands = [(lam, float(space.norm(x + lam * y))) for lam in (1.0, -1.0)]
        if sweep is not None:
            sweep.extend([[lam, v] for lam, v in cands])
        lam, m = max(cands, key=lambda c: c[1])
    else:
        def g(lam):
            v = float(space.norm(x + lam * y))
            if sweep is not None:
                sweep.append([lam, v])
            return v

        lam, m = unimodular_argmax(g, _T_GRID)
    gap = m - (nx + ny)
    wit = RelationWitness(scalar=lam, attained={"norm_sum": m})
    if m > 1e-12:
        z = space.unitize(x + lam * y)
        wit.x = z
        wit.xstar = space.supporting_functional(z)
    return RelationReport("parallel", gap >= -cfg.tol, float(gap), cfg.tol, wit,
                          details={"norm_x": nx, "norm_y": ny}, sweep=sweep)


def _scalar_min(space: NormedSpace, g, bracket: float, xtol: float):
    """Minimize g over real or complex scalars of modulus <= bracket."""
    if space.field != COMPLEX:
        return golden_min(g, -bracket, bracket, xtol)

    def h(re):
        return golden_min(lambda im: g(re + 1j * im), -bracket, bracket, xtol)[1]

    re_m, _ = golden_min(h, -bracket, bracket, xtol)
    im_m, vm = golden_min(lambda im: g(re_m + 1j * im), -bracket, bracket, xtol)
    return re_m + 1j * im_m, vm


def birkhoff_vectors(space: NormedSpace, x, y, cfg: EngineConfig | None = None) -> RelationReport:
    """x is Birkhoff orthogonal to y iff ||x + alpha y|| >= ||x|| for all alpha.

    alpha -> ||x + alpha y|| is convex; the minimum lies in |alpha| <=
    2||x||/||y|| (outside the bracket the reverse triangle inequality gives
    ||x + alpha y|| >= |alpha| ||y|| - ||x|| > ||x||)."""
    cfg = cfg or default_config(space)
    x = space.as_vector(x)
    y = space.as_vector(y)
    nx, ny = float(space.norm(x)), float(space.norm(y))
    if ny <= 1e-12:
        return RelationReport("birkhoff", True, 0.0, cfg.tol,
                              RelationWitness(scalar=0.0), {"norm_x": nx, "norm_y": ny})
    B = 2.0 * nx / ny + 1e-12
    alpha, m = _scalar_min(space, lambda a: float(space.norm(x + a * y)),
                           B, xtol=1e-9 * (1.0 + B))
    gap = m - nx
    return RelationReport("birkhoff", gap >= -cfg.tol, float(gap), cfg.tol,
                          RelationWitness(scalar=alpha, attained={"min_norm": m}),
                          {"norm_x": nx, "norm_y": ny})


def zamani_t1_check(space: NormedSpace, x, y, cfg: EngineConfig | None = None) -> RelationReport:
    """x || y iff x is Birkhoff orthogonal to ||y|| x + lambda ||x|| y for
    some unimodular lambda (vector-level equivalence)."""
    cfg = cfg or default_config(space)
    x = space.as_vector(x)
    y = space.as_vector(y)
    nx, ny = float(space.norm(x)), float(space.norm(y))

    def gap_of(lam):
        return birkhoff_vectors(space, x, ny * x + lam * nx * y, cfg).gap

    if space.field != COMPLEX:
        cands = [(lam, gap_of(lam)) for lam in (1.0, -1.0)]
        lam, gap = max(cands, key=lambda c: c[1])
    else:
        lam, gap = unimodular_argmax(gap_of, 120)
    return RelationReport("zamani-t1", gap >= -cfg.tol, float(gap), cfg.tol,
                          RelationWitness(scalar=lam))


# ----------------------------------------------------------------------
# operator-level relations
# ----------------------------------------------------------------------

def _joint_sup(space: NormedSpace, T, S, cfg: EngineConfig):
    """sup over unit x, x* in J(x) of |x*(Tx)| + |x*(Sx)|, which equals
    max over unimodular lambda of v(T + lambda S).  Smooth (lp) spaces only."""
    from .engine import _pattern_max
    from .spaces import _lp_functional

    def value_fn(X):
        A = np.stack([_lp_functional(x, space.p) for x in X])
        return (np.abs((A * (X @ T.T)).sum(axis=1))
                + np.abs((A * (X @ S.T)).sum(axis=1)))

    X, vals = _pattern_max(space, value_fn, cfg)
    return float(vals[0]), X[0]


def nr_parallel(space: NormedSpace, T, S, cfg: EngineConfig | None = None) -> RelationReport:
    """T ||_v S iff v(T + lambda S) = v(T) + v(S) for some unimodular lambda.

    Degenerate rule: v(T) v(S) = 0 forces the relation (seminorm estimate)."""
    cfg = cfg or default_config(space)
    T = as_operator(space, T)
    S = as_operator(space, S)
    vT = numerical_radius(space, T, cfg, witnesses=False).value
    vS = numerical_radius(space, S, cfg, witnesses=False).value
    degenerate = min(vT, vS) <= cfg.tol
    wit = RelationWitness()
    if space.field != COMPLEX:
        lam = max((1.0, -1.0), key=lambda l: numerical_radius(
            space, T + l * S, cfg, witnesses=False).value)
        res = numerical_radius(space, T + lam * S, cfg)
        m = res.value
        wit = _corollary_witness(space, T, S, res, lam, vT, vS)
    else:
        if space.kind == "lp":
            m, x = _joint_sup(space, T, S, cfg)
            a = space.supporting_functional(x)
            u, w = pair(a, T @ x), pair(a, S @ x)
            lam = 1.0
            if abs(u) > 1e-12 and abs(w) > 1e-12:
                lam = (u / abs(u)) * np.conj(w / abs(w))
            wit = RelationWitness(scalar=lam, x=x, xstar=a,
                                  attained={"T": u, "S": w})
        else:
            def g(lam):
                return numerical_radius(space, T + lam * S, cfg, witnesses=False).value

            lam, m = unimodular_argmax(g, _T_GRID_HEAVY)
            res = numerical_radius(space, T + lam * S, cfg)
            wit = _corollary_witness(space, T, S, res, lam, vT, vS)
    gap = m - (vT + vS)
    verdict = degenerate or gap >= -cfg.tol
    if degenerate:
        res = numerical_radius(space, T if vT > vS else S, cfg)
        if res.witnesses:
            w0 = res.witnesses[0]
            wit = RelationWitness(scalar=1.0, x=w0.x, xstar=w0.xstar,
                                  attained={"T": pair(w0.xstar, T @ w0.x),
                                            "S": pair(w0.xstar, S @ w0.x)})
    return RelationReport("nr-parallel", verdict, float(gap), cfg.tol, wit,
                          details={"v_T": vT, "v_S": vS, "degenerate": degenerate})


def _corollary_witness(space, T, S, res, lam, vT, vS):
    """Pick the radius witness of T + lam S that best attains both radii."""
    best, err = None, np.inf
    for w in res.witnesses:
        u, v = pair(w.xstar, T @ w.x), pair(w.xstar, S @ w.x)
        e = max(abs(abs(u) - vT), abs(abs(v) - vS))
        if e < err:
            best, err = RelationWitness(scalar=lam, x=w.x, xstar=w.xstar,
                                        attained={"T": u, "S": v}), e
    return best or RelationWitness(scalar=lam)


def nr_birkhoff(space: NormedSpace, T, S, cfg: EngineConfig | None = None) -> RelationReport:
    """T is numerical-radius Birkhoff orthogonal to S iff v(T + alpha S) >= v(T)
    for every scalar alpha.

    alpha -> v(T + alpha S) is convex (pointwise sup of moduli of affine maps),
    and the minimum lies in |alpha| <= 2 v(T)/v(S): outside the bracket the
    seminorm reverse triangle inequality gives v(T+alpha S) >= |alpha| v(S)
    - v(T) > v(T)."""
    cfg = cfg or default_config(space)
    T = as_operator(space, T)
    S = as_operator(space, S)
    vT = numerical_radius(space, T, cfg, witnesses=False).value
    vS = numerical_radius(space, S, cfg, witnesses=False).value
    if vT <= cfg.tol or vS <= cfg.tol:
        return RelationReport("nr-birkhoff", True, 0.0, cfg.tol,
                              RelationWitness(scalar=0.0),
                              {"v_T": vT, "v_S": vS, "degenerate": True})
    B = 2.0 * vT / vS + 1e-12

    def g(alpha):
        return numerical_radius(space, T + alpha * S, cfg, witnesses=False).value

    alpha, m = _scalar_min(space, g, B, xtol=max(1e-8, 1e-8 * B))
    gap = m - vT
    return RelationReport("nr-birkhoff", gap >= -cfg.tol, float(gap), cfg.tol,
                          RelationWitness(scalar=alpha, attained={"min_v": m}),
                          {"v_T": vT, "v_S": vS, "degenerate": False})


def vo1_certificate(space: NormedSpace, T, S, lam, cfg: EngineConfig | None = None):
    """Search for a pair (x, x*) with |x*(Tx)| ~ v(T) and
    Re[lam * conj(x*(Tx)) * x*(Sx)] >= 0 (attained analogue of the
    orthogonality characterization).  Returns a RelationWitness or None."""
    cfg = cfg or default_config(space)
    T = as_operator(space, T)
    S = as_operator(space, S)
    res = numerical_radius(space, T, cfg)
    vT = res.value
    ctol = max(cfg.tol, 1e-7)
    candidates = [w.x for w in res.witnesses]
    if space.dim == 2 and space.field != COMPLEX:
        # near-maximal grid points catch flat objectives (e.g. the identity)
        from . import kernels
        code, p = space.kind_code, space.p or 0.0
        Tf = np.ascontiguousarray(T, dtype=np.float64)
        th, vals = kernels.radius_values(Tf, code, p, 0.0,
                                         2.0 * np.pi / cfg.grid_size, cfg.grid_size)
        idx = np.flatnonzero(vals >= vT - ctol)
        if idx.size > 512:
            idx = idx[:: max(1, idx.size // 512)]
        candidates.extend(space.unitize(np.array([np.cos(t), np.sin(t)]))
                          for t in th[idx])
    for x in candidates:
        y = T @ x
        for a in space.duality_set(x).functionals:
            u = pair(a, y)
            if abs(u) < vT - ctol:
                continue
            w = pair(a, S @ x)
            re = (lam * np.conj(u) * w).real
            if re >= -ctol:
                return RelationWitness(scalar=lam, x=x, xstar=a,
                                       attained={"T": u, "S": w, "re_term": re})
    return None


def nr_parallel_via_orthogonality(space: NormedSpace, T, S,
                                  cfg: EngineConfig | None = None) -> RelationReport:
    """T ||_v S iff T is numerical-radius Birkhoff orthogonal to
    v(S) T + lambda v(T) S for some unimodular lambda."""
    cfg = cfg or default_config(space)
    T = as_operator(space, T)
    S = as_operator(space, S)
    vT = numerical_radius(space, T, cfg, witnesses=False).value
    vS = numerical_radius(space, S, cfg, witnesses=False).value
    if min(vT, vS) <= cfg.tol:
        return RelationReport("nr-parallel-orth", True, 0.0, cfg.tol,
                              RelationWitness(scalar=1.0),
                              {"v_T": vT, "v_S": vS, "degenerate": True})

    def gap_of(lam):
        return nr_birkhoff(space, T, vS * T + lam * vT * S, cfg).gap

    if space.field != COMPLEX:
        cands = [(lam, gap_of(lam)) for lam in (1.0, -1.0)]
        lam, gap = max(cands, key=lambda c: c[1])
    else:
        lam, gap = unimodular_argmax(gap_of, 24)
    return RelationReport("nr-parallel-orth", gap >= -cfg.tol, float(gap), cfg.tol,
                          RelationWitness(scalar=lam),
                          {"v_T": vT, "v_S": vS, "degenerate": False})


def daugavet_check(space: NormedSpace, T, cfg: EngineConfig | None = None) -> RelationReport:
    """Alternative Daugavet equation max over unimodular lambda of
    ||I + lambda T|| = 1 + ||T||; equivalent to v(T) = ||T||."""
    cfg = cfg or default_config(space)
    T = as_operator(space, T)
    I = identity(space.dim, space.field == COMPLEX)
    tn = operator_norm(space, T, cfg)
    if space.field != COMPLEX:
        cands = [(lam, operator_norm(space, I + lam * T, cfg)) for lam in (1.0, -1.0)]
        lam, m = max(cands, key=lambda c: c[1])
    else:
        lam, m = unimodular_argmax(
            lambda l: operator_norm(space, I + l * T, cfg), _T_GRID_HEAVY)
    vT = numerical_radius(space, T, cfg, witnesses=False).value
    gap = m - (1.0 + tn)
    norm_eq = gap >= -cfg.tol
    radius_eq = abs(vT - tn) <= cfg.tol
    return RelationReport("daugavet", norm_eq, float(gap), cfg.tol,
                          RelationWitness(scalar=lam, attained={"max_norm": m}),
                          details={"operator_norm": tn, "v_T": vT,
                                   "radius_equals_norm": radius_eq})
