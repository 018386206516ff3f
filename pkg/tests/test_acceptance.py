"""Acceptance gate: one test per criterion, each printing a single
"criterion N (...): PASS|FAIL" line on the real terminal.

Oracles used here are written independently of the package engine: the
dense angle-grid evaluations below recompute unit vectors, supporting
functionals, and norms from first principles with plain numpy.
"""

import json
import time

import numpy as np
import pytest

from numrad import (
    EngineConfig,
    NormedSpace,
    identity,
    norm_parallel_vectors,
    nr_birkhoff,
    nr_parallel,
    nr_parallel_via_orthogonality,
    numerical_radius,
    operator_norm,
    rank_one,
    shift_fixture,
    swap_fixture,
)
from numrad.cli import main
from numrad.spaces import COMPLEX
from numrad.verify import (
    nonadditivity_witness,
    noninjective_orthogonality,
    nontransitivity_witness,
    run_suite,
)

L4 = NormedSpace(2, "lp", 4.0)
L2 = NormedSpace(2, "lp", 2.0)
L1 = NormedSpace(2, "l1")
L4_RADIUS = 3.0 ** 0.75 / 4.0
T_FIX = shift_fixture()
S_FIX = swap_fixture()
MARGIN = 1e-3
DENSE = 100_000


def announce(capsys, num, name, ok):
    with capsys.disabled():
        print(f"criterion {num} ({name}): {'PASS' if ok else 'FAIL'}")
    assert ok, f"criterion {num} ({name}) failed"


# independent dense-grid oracle for the quartic norm -----------------------

def _l4_grid():
    th = np.linspace(0.0, 2.0 * np.pi, DENSE, endpoint=False)
    c, s = np.cos(th), np.sin(th)
    nr = (c ** 4 + s ** 4) ** 0.25
    return c / nr, s / nr


def _oracle_radius_l4(M):
    """sup |x*(Mx)| over 1e5 unit points; x* = (sgn x1 |x1|^3, sgn x2 |x2|^3)."""
    x1, x2 = _l4_grid()
    y1 = M[0, 0] * x1 + M[0, 1] * x2
    y2 = M[1, 0] * x1 + M[1, 1] * x2
    a1 = np.sign(x1) * np.abs(x1) ** 3
    a2 = np.sign(x2) * np.abs(x2) ** 3
    return float(np.abs(a1 * y1 + a2 * y2).max())


def _oracle_opnorm_l4(M):
    x1, x2 = _l4_grid()
    y1 = M[0, 0] * x1 + M[0, 1] * x2
    y2 = M[1, 0] * x1 + M[1, 1] * x2
    return float(((y1 ** 4 + y2 ** 4) ** 0.25).max())


def test_criterion_1_l4_example_radii(capsys):
    t0 = time.time()
    vT = numerical_radius(L4, T_FIX, witnesses=False).value
    t1 = time.time()
    vTmS = numerical_radius(L4, T_FIX - S_FIX, witnesses=False).value
    vS = numerical_radius(L4, S_FIX, witnesses=False).value
    ok = (abs(vT - L4_RADIUS) < 1e-6 and abs(vTmS - L4_RADIUS) < 1e-6
          and abs(vS - 1.0) < 1e-6 and (t1 - t0) < 1.0)
    announce(capsys, 1, "l4 example radii", ok)


def test_criterion_2_l4_strictness_with_dense_oracle(capsys):
    vT = numerical_radius(L4, T_FIX, witnesses=False).value
    vS = numerical_radius(L4, S_FIX, witnesses=False).value
    ok = True
    # max over lambda in {+1, -1} of v(T + lambda S), engine vs dense oracle
    best_v = -np.inf
    for lam in (1.0, -1.0):
        M = T_FIX + lam * S_FIX
        engine = numerical_radius(L4, M, witnesses=False).value
        oracle = _oracle_radius_l4(M)
        ok &= abs(engine - oracle) < 1e-6
        best_v = max(best_v, oracle)
    ok &= best_v <= vT + vS - MARGIN
    best_n = -np.inf
    for lam in (1.0, -1.0):
        M = identity(2) + lam * T_FIX
        engine = operator_norm(L4, M)
        oracle = _oracle_opnorm_l4(M)
        ok &= abs(engine - oracle) < 1e-6
        best_n = max(best_n, oracle)
    ok &= best_n <= 2.0 - MARGIN
    announce(capsys, 2, "l4 example strictness", ok)


def test_criterion_3_operator_norms(capsys):
    ok = (abs(operator_norm(L4, T_FIX) - 1.0) < 1e-6
          and abs(operator_norm(L4, S_FIX) - 1.0) < 1e-6
          and abs(operator_norm(L4, T_FIX + S_FIX) - 2.0) < 1e-6)
    announce(capsys, 3, "operator norms", ok)


def test_criterion_4_l1_example(capsys):
    ok = norm_parallel_vectors(L1, [1, 0], [0, 1]).verdict
    A = rank_one([1.0, 0.0], [1.0, 0.0])
    B = rank_one([0.0, 1.0], [0.0, 1.0])
    best = max(numerical_radius(L1, A + lam * B, witnesses=False).value
               for lam in (1.0, -1.0))
    ok &= best <= 2.0 - MARGIN
    announce(capsys, 4, "l1 example", ok)


def test_criterion_5_euclidean_oracles(capsys):
    t0 = time.time()
    ok = True
    rng = np.random.default_rng(2024)
    for dim in (2, 3):
        space = NormedSpace(dim, "lp", 2.0)
        cfg = EngineConfig(seed=0, multistarts=32, tol=space.tol)
        for _ in range(25):
            T = rng.uniform(-1, 1, (dim, dim))
            oracle = float(np.abs(np.linalg.eigvalsh((T + T.T) / 2)).max())
            got = numerical_radius(space, T, cfg, witnesses=False).value
            ok &= abs(got - oracle) < 1e-6
    c2 = NormedSpace(2, "lp", 2.0, COMPLEX)
    cfg = EngineConfig(seed=0, multistarts=16, tol=1e-5)
    th = np.linspace(0.0, 2.0 * np.pi, 4096, endpoint=False)
    for _ in range(20):
        T = rng.uniform(-1, 1, (2, 2)) + 1j * rng.uniform(-1, 1, (2, 2))
        oracle = max(
            float(np.linalg.eigvalsh(
                (np.exp(1j * t) * T + np.conj(np.exp(1j * t) * T).T) / 2)[-1])
            for t in th)
        got = numerical_radius(c2, T, cfg, witnesses=False).value
        ok &= abs(got - oracle) < 1e-4
    ok &= (time.time() - t0) < 30.0
    announce(capsys, 5, "euclidean oracle equivalence", ok)


def test_criterion_6_property_suites(capsys):
    ok = True
    rng = np.random.default_rng(606)

    def rad(space, M):
        return numerical_radius(space, M, witnesses=False).value

    # seminorm triangle + homogeneity, and v <= operator norm (100 trials)
    for _ in range(100):
        T = rng.uniform(-1, 1, (2, 2))
        S = rng.uniform(-1, 1, (2, 2))
        c = rng.uniform(-2, 2)
        vT, vS = rad(L4, T), rad(L4, S)
        ok &= rad(L4, T + S) <= vT + vS + 1e-6
        ok &= abs(rad(L4, c * T) - abs(c) * vT) < 1e-6
        ok &= vT <= operator_norm(L4, T) + 1e-6

    # parallelism symmetry + positive homogeneity (100 trials)
    for _ in range(100):
        T = rng.uniform(-1, 1, (2, 2))
        S = rng.uniform(-1, 1, (2, 2))
        a, b = rng.uniform(0.2, 3.0, 2)
        v1 = nr_parallel(L4, T, S).verdict
        ok &= v1 == nr_parallel(L4, S, T).verdict
        ok &= v1 == nr_parallel(L4, a * T, b * S).verdict

    # Birkhoff homogeneity (100 trials)
    for _ in range(100):
        T = rng.uniform(-1, 1, (2, 2))
        S = rng.uniform(-1, 1, (2, 2))
        a, b = rng.uniform(0.2, 3.0, 2)
        ok &= nr_birkhoff(L4, T, S).verdict == \
            nr_birkhoff(L4, a * T, b * S).verdict

    # parallelism to scaled identities (100 trials)
    I = identity(2)
    for _ in range(100):
        T = rng.uniform(-1, 1, (2, 2))
        ok &= nr_parallel(L4, T, rng.uniform(-2, 2) * I).verdict

    # convexity of alpha -> v(T + alpha S) (100 trials)
    for _ in range(100):
        T = rng.uniform(-1, 1, (2, 2))
        S = rng.uniform(-1, 1, (2, 2))
        a1, a2 = rng.uniform(-2, 2, 2)
        ok &= rad(L4, T + 0.5 * (a1 + a2) * S) <= \
            0.5 * (rad(L4, T + a1 * S) + rad(L4, T + a2 * S)) + 1e-6

    # final-theorem equivalence on Lp(2) and Lp(4) (50 + 50 trials)
    for space in (L2, L4):
        for _ in range(50):
            T = rng.uniform(-1, 1, (2, 2))
            S = rng.uniform(-1, 1, (2, 2))
            ok &= nr_parallel(space, T, S).verdict == \
                nr_parallel_via_orthogonality(space, T, S).verdict
    announce(capsys, 6, "property suites", ok)


def test_criterion_7_constructive_theorems(capsys):
    ok = True
    for space in (L2, L4):
        out = nontransitivity_witness(space)
        ok &= out.passed
        out = nonadditivity_witness(space)
        ok &= out.passed
        gaps = [c.info["gap"] for c in out.checks if "gap" in c.info]
        ok &= all(g <= -MARGIN for g in gaps)
        P = rank_one([1.0, 0.0], [1.0, 0.0])
        ok &= noninjective_orthogonality(space, P).verdict
        ok &= noninjective_orthogonality(space, identity(2) - P).verdict
    ok &= run_suite("daugavet", 42).passed
    announce(capsys, 7, "constructive theorems", ok)


def test_criterion_8_verify_all_deterministic(capsys, tmp_path):
    p1, p2 = tmp_path / "r1.json", tmp_path / "r2.json"
    t0 = time.time()
    code1 = main(["verify", "all", "--seed", "42", "--report", str(p1)])
    elapsed = time.time() - t0
    code2 = main(["verify", "all", "--seed", "42", "--report", str(p2)])
    capsys.readouterr()
    a = json.loads(p1.read_text())
    b = json.loads(p2.read_text())
    a.pop("timestamp"), b.pop("timestamp")
    ok = code1 == 0 and code2 == 0 and elapsed < 300.0 and a == b
    announce(capsys, 8, "verify all --seed 42 deterministic", ok)
