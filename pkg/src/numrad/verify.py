"""Executable verification of the theorem-level constructions: reproducible
seeded suites, each addressable by a stable string id."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .engine import EngineConfig, default_config, numerical_radius
from .operators import as_operator, identity, operator_norm, rank_one, rotation, \
    shift_fixture, swap_fixture
from .relations import (
    RelationReport,
    RelationWitness,
    daugavet_check,
    norm_parallel_vectors,
    nr_birkhoff,
    nr_parallel,
    nr_parallel_via_orthogonality,
    vo1_certificate,
)
from .spaces import COMPLEX, NormedSpace, pair

MARGIN = 1e-3  # strict inequalities must hold with at least this margin

L4_RADIUS = 3.0 ** 0.75 / 4.0  # max{x y^3 : x^4 + y^4 = 1}


@dataclass
class CheckResult:
    name: str
    passed: bool
    info: dict = field(default_factory=dict)


@dataclass
class VerificationOutcome:
    theorem_id: str
    passed: bool
    checks: list[CheckResult] = field(default_factory=list)
    seed: int | None = None

    def add(self, name, passed, **info):
        self.checks.append(CheckResult(name, bool(passed), info))
        self.passed = self.passed and bool(passed)

    @property
    def failures(self):
        return [c for c in self.checks if not c.passed]


def random_operator(space: NormedSpace, rng: np.random.Generator) -> np.ndarray:
    """Entries i.i.d. uniform on [-1, 1] (independently for re/im parts)."""
    shape = (space.dim, space.dim)
    T = rng.uniform(-1.0, 1.0, shape)
    if space.field == COMPLEX:
        T = T + 1j * rng.uniform(-1.0, 1.0, shape)
    return T


# ----------------------------------------------------------------------
# individual verifiers
# ----------------------------------------------------------------------

def verify_pvi(space: NormedSpace, trials: int, seed: int,
               cfg: EngineConfig | None = None) -> VerificationOutcome:
    """Every operator is numerical-radius parallel to every scalar multiple
    of the identity."""
    cfg = cfg or default_config(space, seed)
    out = VerificationOutcome("pvi", True, seed=seed)
    rng = np.random.default_rng([seed, 101])
    I = identity(space.dim, space.field == COMPLEX)
    for k in range(trials):
        T = random_operator(space, rng)
        alpha = rng.uniform(-1.5, 1.5)
        if space.field == COMPLEX:
            alpha = alpha * np.exp(2j * np.pi * rng.uniform())
        rep = nr_parallel(space, T, alpha * I, cfg)
        if not rep.verdict:
            out.add(f"trial-{k}", False, alpha=alpha, gap=rep.gap, matrix=T.tolist())
    out.add("parallel-to-scaled-identity", not out.failures, trials=trials)
    # degenerate scalar: alpha = 0 makes v(S) = 0, parallel by the seminorm rule
    rep0 = nr_parallel(space, random_operator(space, rng), 0.0 * I, cfg)
    out.add("alpha-zero-degenerate", rep0.verdict)
    return out


def nontransitivity_witness(space: NormedSpace, x=None, y=None,
                            cfg: EngineConfig | None = None) -> VerificationOutcome:
    """Concrete failure of transitivity: A ||_v I and I ||_v B but A not ||_v B,
    where A, B are rank-one operators built from a smooth point and an
    annihilated companion."""
    cfg = cfg or default_config(space)
    if space.dim != 2:
        raise ValueError("the planar construction needs dim=2")
    x = space.as_vector(x if x is not None else np.eye(space.dim)[0])
    y = space.as_vector(y if y is not None else np.eye(space.dim)[1])
    if not space.is_smooth_point(x):
        raise ValueError("construction needs a smooth point x")
    xstar = space.duality_set(x).functionals[0]
    if abs(pair(xstar, y)) > 1e-12:
        raise ValueError("construction needs x*(y) = 0")
    ystar = space.supporting_functional(y, y)
    A = rank_one(xstar, x)
    B = rank_one(ystar, y)
    I = identity(space.dim, space.field == COMPLEX)
    out = VerificationOutcome("tpt", True)
    out.add("A-parallel-I", nr_parallel(space, A, I, cfg).verdict)
    out.add("I-parallel-B", nr_parallel(space, I, B, cfg).verdict)
    repAB = nr_parallel(space, A, B, cfg)
    out.add("A-not-parallel-B", (not repAB.verdict) and repAB.gap <= -MARGIN,
            gap=repAB.gap)
    np_rep = norm_parallel_vectors(space, x, y, cfg)
    out.add("x-not-parallel-y", not np_rep.verdict, gap=np_rep.gap)
    return out


def nonadditivity_witness(space: NormedSpace,
                          cfg: EngineConfig | None = None) -> VerificationOutcome:
    """Numerical-radius Birkhoff orthogonality is neither right nor left
    additive: both failures are exhibited through the projection P = x*(.)x."""
    cfg = cfg or default_config(space)
    x = space.as_vector(np.eye(space.dim)[0])
    xstar = space.duality_set(x).functionals[0]
    P = rank_one(xstar, x)
    I = identity(space.dim, space.field == COMPLEX)
    out = VerificationOutcome("pva", True)
    # right chain: I perp P and I perp (I-P), yet I not perp P + (I-P) = I
    out.add("I-perp-P", nr_birkhoff(space, I, P, cfg).verdict)
    out.add("I-perp-I-minus-P", nr_birkhoff(space, I, I - P, cfg).verdict)
    rep = nr_birkhoff(space, I, I, cfg)
    out.add("I-not-perp-I", (not rep.verdict) and rep.gap <= -MARGIN, gap=rep.gap)
    # left chain: -P perp (I-P) and I perp (I-P), yet (I-P) not perp (I-P)
    out.add("negP-perp-I-minus-P", nr_birkhoff(space, -P, I - P, cfg).verdict)
    rep = nr_birkhoff(space, I - P, I - P, cfg)
    out.add("I-minus-P-not-perp-self", (not rep.verdict) and rep.gap <= -MARGIN,
            gap=rep.gap)
    return out


def verify_pnv_and_smooth(space: NormedSpace, trials: int, seed: int,
                          cfg: EngineConfig | None = None) -> VerificationOutcome:
    """(a) rank-one parallelism implies vector parallelism, always;
    (b) on smooth strictly convex (lp) spaces the converse holds as well."""
    cfg = cfg or default_config(space, seed)
    out = VerificationOutcome("pnv", True, seed=seed)
    rng = np.random.default_rng([seed, 104])
    for k in range(trials):
        x = space.random_unit(rng)
        y = space.random_unit(rng)
        xstar = space.supporting_functional(x, x)
        ystar = space.supporting_functional(y, y)
        ro = nr_parallel(space, rank_one(xstar, x), rank_one(ystar, y), cfg)
        if ro.verdict:
            vp = norm_parallel_vectors(space, x, y, cfg)
            if not vp.verdict:
                out.add(f"pnv-violation-{k}", False, x=x.tolist(), y=y.tolist())
    out.add("rank-one-parallel-implies-vector-parallel", not out.failures,
            trials=trials)
    if space.kind == "lp":
        ok = True
        for k in range(trials // 2):
            x = space.random_unit(rng)
            c = rng.uniform(0.3, 2.0) * (1 if rng.uniform() < 0.5 else -1)
            if space.field == COMPLEX:
                c = c * np.exp(2j * np.pi * rng.uniform())
            y = c * x
            xstar = space.supporting_functional(x, x)
            ystar = space.supporting_functional(space.unitize(y), y)
            ok &= nr_parallel(space, rank_one(xstar, x), rank_one(ystar, y),
                              cfg).verdict
        out.add("parallel-vectors-give-parallel-rank-ones", ok)
    return out


def noninjective_orthogonality(space: NormedSpace, T,
                               cfg: EngineConfig | None = None) -> RelationReport:
    """I is numerical-radius Birkhoff orthogonal to any non-injective T;
    certified through a unit kernel vector."""
    cfg = cfg or default_config(space)
    T = as_operator(space, T)
    sv = np.linalg.svd(T, compute_uv=False)
    if sv[-1] > 1e-9 * max(sv[0], 1.0):
        raise ValueError("T is injective: the orthogonality certificate "
                         "requires a nontrivial kernel")
    _, _, Vh = np.linalg.svd(T)
    x = space.unitize(np.conj(Vh[-1]))
    xstar = space.supporting_functional(x, x)
    I = identity(space.dim, space.field == COMPLEX)
    lower_ok = True
    for alpha in np.linspace(-5.0, 5.0, 41):
        v = numerical_radius(space, I + alpha * T, cfg, witnesses=False).value
        att = abs(pair(xstar, (I + alpha * T) @ x))
        if v < att - cfg.tol:
            lower_ok = False
    rep = nr_birkhoff(space, I, T, cfg)
    rep.details["kernel_vector_bound_holds"] = lower_ok
    rep.witness = RelationWitness(scalar=rep.witness.scalar if rep.witness else None,
                                  x=x, xstar=xstar,
                                  attained={"kernel_lower_bound": 1.0})
    rep.verdict = rep.verdict and lower_ok
    return rep


def run_worked_examples(cfg: EngineConfig | None = None) -> VerificationOutcome:
    """The planar worked examples: the quartic-norm operator pair, the
    absolute-sum-norm rank-one pair, and the mixed-norm point classification."""
    out = VerificationOutcome("examples", True)
    l4 = NormedSpace(2, "lp", 4.0)
    cfg4 = cfg or default_config(l4)
    T, S = shift_fixture(), swap_fixture()
    I = identity(2)

    vT = numerical_radius(l4, T, cfg4, witnesses=False).value
    vS = numerical_radius(l4, S, cfg4, witnesses=False).value
    vTmS = numerical_radius(l4, T - S, cfg4, witnesses=False).value
    out.add("v(T)", abs(vT - L4_RADIUS) < 1e-6, value=vT)
    out.add("v(T-S)", abs(vTmS - L4_RADIUS) < 1e-6, value=vTmS)
    out.add("v(S)", abs(vS - 1.0) < 1e-6, value=vS)
    out.add("norm(T)", abs(operator_norm(l4, T, cfg4) - 1.0) < 1e-6)
    out.add("norm(S)", abs(operator_norm(l4, S, cfg4) - 1.0) < 1e-6)
    out.add("norm(T+S)", abs(operator_norm(l4, T + S, cfg4) - 2.0) < 1e-6)

    rep = nr_parallel(l4, T, S, cfg4)
    out.add("T-not-vparallel-S", (not rep.verdict) and rep.gap <= -MARGIN,
            gap=rep.gap)
    m = max(operator_norm(l4, I + T, cfg4), operator_norm(l4, I - T, cfg4))
    out.add("T-not-parallel-I", m <= 2.0 - MARGIN, max_norm=m)
    out.add("T-vparallel-I", nr_parallel(l4, T, I, cfg4).verdict)

    l1 = NormedSpace(2, "l1")
    cfg1 = cfg or default_config(l1)
    out.add("l1-e1-parallel-e2",
            norm_parallel_vectors(l1, [1, 0], [0, 1], cfg1).verdict)
    A = rank_one([1.0, 0.0], [1.0, 0.0])
    B = rank_one([0.0, 1.0], [0.0, 1.0])
    rep = nr_parallel(l1, A, B, cfg1)
    out.add("l1-rank-ones-not-vparallel", (not rep.verdict) and rep.gap <= -MARGIN,
            gap=rep.gap)

    mixed = NormedSpace(2, "mixed")
    corner = np.array([-1.0, 1.0])
    out.add("mixed-corner-not-smooth", not mixed.is_smooth_point(corner))
    out.add("mixed-corner-not-rotund", not mixed.is_rotund_point(corner))
    arc = mixed.unitize(np.array([1.0, 1.0]))
    out.add("mixed-arc-point-smooth", mixed.is_smooth_point(arc))
    return out


# ----------------------------------------------------------------------
# suite registry
# ----------------------------------------------------------------------

def _suite_pvi(seed):
    out = verify_pvi(NormedSpace(2, "lp", 4.0), 200, seed)
    cplx = verify_pvi(NormedSpace(2, "lp", 2.0, COMPLEX), 10, seed,
                      EngineConfig(seed=seed, multistarts=16, tol=1e-5))
    merged = VerificationOutcome("pvi", out.passed and cplx.passed,
                                 out.checks + cplx.checks, seed)
    return merged


def _suite_tpt(seed):
    out = VerificationOutcome("tpt", True, seed=seed)
    for space in (NormedSpace(2, "lp", 4.0), NormedSpace(2, "lp", 2.0)):
        sub = nontransitivity_witness(space)
        out.add(f"{space.kind}:{space.p}", sub.passed,
                checks=[(c.name, c.passed) for c in sub.checks])
    # degenerate request: the construction must refuse a nonsmooth base point
    try:
        nontransitivity_witness(NormedSpace(2, "l1"))
        out.add("l1-rejects-nonsmooth-point", False)
    except ValueError:
        out.add("l1-rejects-nonsmooth-point", True)
    return out


def _suite_pva(seed):
    out = VerificationOutcome("pva", True, seed=seed)
    for space in (NormedSpace(2, "lp", 2.0), NormedSpace(2, "lp", 4.0),
                  NormedSpace(2, "l1")):
        sub = nonadditivity_witness(space)
        out.add(f"{space.kind}:{space.p}", sub.passed,
                checks=[(c.name, c.passed) for c in sub.checks])
    return out


def _suite_pnv(seed):
    out = verify_pnv_and_smooth(NormedSpace(2, "lp", 4.0), 100, seed)
    # the converse fails on the absolute-sum norm
    l1 = NormedSpace(2, "l1")
    cfg = default_config(l1, seed)
    vp = norm_parallel_vectors(l1, [1, 0], [0, 1], cfg)
    ro = nr_parallel(l1, rank_one([1.0, 0.0], [1.0, 0.0]),
                     rank_one([0.0, 1.0], [0.0, 1.0]), cfg)
    out.add("l1-converse-fails", vp.verdict and not ro.verdict and ro.gap <= -MARGIN,
            gap=ro.gap)
    return out


def _suite_examples(seed):
    out = run_worked_examples()
    out.seed = seed
    return out


def _suite_noninj(seed):
    out = VerificationOutcome("noninj", True, seed=seed)
    for space in (NormedSpace(2, "lp", 2.0), NormedSpace(2, "lp", 4.0)):
        x = np.eye(2)[0]
        xstar = space.duality_set(x).functionals[0]
        P = rank_one(xstar, x)
        I = identity(2)
        out.add(f"{space.kind}:{space.p}:rank-one",
                noninjective_orthogonality(space, P).verdict)
        out.add(f"{space.kind}:{space.p}:I-minus-rank-one",
                noninjective_orthogonality(space, I - P).verdict)
        try:
            noninjective_orthogonality(space, I)
            out.add(f"{space.kind}:{space.p}:identity-rejected", False)
        except ValueError:
            out.add(f"{space.kind}:{space.p}:identity-rejected", True)
    return out


def _suite_final_thm(seed):
    out = VerificationOutcome("final-thm", True, seed=seed)
    rng = np.random.default_rng([seed, 107])
    for space in (NormedSpace(2, "lp", 2.0), NormedSpace(2, "lp", 4.0)):
        cfg = default_config(space, seed)
        mismatch = 0
        for _ in range(100):
            T = random_operator(space, rng)
            S = random_operator(space, rng)
            if nr_parallel(space, T, S, cfg).verdict != \
                    nr_parallel_via_orthogonality(space, T, S, cfg).verdict:
                mismatch += 1
        out.add(f"{space.kind}:{space.p}:random-pairs", mismatch == 0,
                mismatches=mismatch)
        T = random_operator(space, rng)
        out.add(f"{space.kind}:{space.p}:scaled-identity",
                nr_parallel_via_orthogonality(space, T, 0.7 * identity(2), cfg).verdict)
    return out


def _suite_vo1(seed):
    out = VerificationOutcome("vo1", True, seed=seed)
    space = NormedSpace(2, "lp", 2.0)
    cfg = default_config(space, seed)
    I = identity(2)
    P = rank_one([1.0, 0.0], [1.0, 0.0])
    for lam in (1.0, -1.0):
        out.add(f"I-perp-P:lambda={lam:+g}",
                vo1_certificate(space, I, P, lam, cfg) is not None)
    out.add("T-vs-zero", vo1_certificate(space, shift_fixture(),
                                         np.zeros((2, 2)), 1.0, cfg) is not None)
    out.add("I-vs-I:lambda=-1-has-none",
            vo1_certificate(space, I, I, -1.0, cfg) is None)
    # orthogonal pairs must have certificates on the whole real phase set
    for space in (NormedSpace(2, "lp", 2.0), NormedSpace(2, "lp", 4.0)):
        cfg = default_config(space, seed)
        ok = all(vo1_certificate(space, I, P, lam, cfg) is not None
                 for lam in (1.0, -1.0))
        out.add(f"{space.kind}:{space.p}:orthogonal-pair-certified", ok)
    return out


def _suite_daugavet(seed):
    out = VerificationOutcome("daugavet", True, seed=seed)
    l4 = NormedSpace(2, "lp", 4.0)
    l2 = NormedSpace(2, "lp", 2.0)
    l1 = NormedSpace(2, "l1")
    rep = daugavet_check(l4, shift_fixture())
    out.add("l4-shift", (not rep.verdict)
            and not rep.details["radius_equals_norm"], gap=rep.gap)
    rep = daugavet_check(l2, identity(2))
    out.add("identity", rep.verdict and rep.details["radius_equals_norm"])
    rep = daugavet_check(l1, rank_one([1.0, 0.0], [1.0, 0.0]))
    out.add("l1-rank-one", rep.verdict and rep.details["radius_equals_norm"])
    rng = np.random.default_rng([seed, 109])
    agree = True
    for space in (l2, l4):
        for _ in range(10):
            rep = daugavet_check(space, random_operator(space, rng))
            agree &= rep.verdict == rep.details["radius_equals_norm"]
    out.add("random-agreement", agree)
    return out


SUITES = {
    "pvi": _suite_pvi,
    "tpt": _suite_tpt,
    "pva": _suite_pva,
    "pnv": _suite_pnv,
    "examples": _suite_examples,
    "noninj": _suite_noninj,
    "final-thm": _suite_final_thm,
    "vo1": _suite_vo1,
    "daugavet": _suite_daugavet,
}


def run_suite(suite_id: str, seed: int) -> VerificationOutcome:
    if suite_id not in SUITES:
        raise ValueError(f"unknown suite id {suite_id!r}; "
                         f"known: {', '.join(SUITES)}")
    return SUITES[suite_id](seed)


def run_all(seed: int) -> list[VerificationOutcome]:
    return [SUITES[sid](seed) for sid in SUITES]
