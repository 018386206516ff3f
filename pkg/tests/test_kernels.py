import os
import subprocess
import sys

import numpy as np
import pytest

from numrad import _gridkern_np, kernels

try:
    from numrad import _gridkern
except ImportError:
    _gridkern = None

KINDS = [(0, 2.0), (0, 4.0), (0, 1.5), (1, 0.0), (2, 0.0), (3, 0.0)]


@pytest.mark.skipif(_gridkern is None, reason="compiled kernel not built")
@pytest.mark.parametrize("kind,p", KINDS)
def test_backend_parity_radius(kind, p):
    rng = np.random.default_rng(55)
    for _ in range(20):
        T = np.ascontiguousarray(rng.uniform(-1, 1, (2, 2)))
        t0 = rng.uniform(0, 2 * np.pi)
        a = _gridkern.radius_sweep(T, kind, p, t0, 0.003, 500)
        b = _gridkern_np.radius_sweep(T, kind, p, t0, 0.003, 500)
        assert a[0] == pytest.approx(b[0], abs=1e-12)
        assert a[1] == pytest.approx(b[1], abs=1e-12)


@pytest.mark.skipif(_gridkern is None, reason="compiled kernel not built")
@pytest.mark.parametrize("kind,p", KINDS)
def test_backend_parity_opnorm(kind, p):
    rng = np.random.default_rng(56)
    for _ in range(20):
        T = np.ascontiguousarray(rng.uniform(-1, 1, (2, 2)))
        a = _gridkern.opnorm_sweep(T, kind, p, 0.0, 0.01, 700)
        b = _gridkern_np.opnorm_sweep(T, kind, p, 0.0, 0.01, 700)
        assert a[0] == pytest.approx(b[0], abs=1e-12)
        assert a[1] == pytest.approx(b[1], abs=1e-12)


def test_backend_name_exported():
    assert kernels.BACKEND in ("compiled", "python")


def test_pure_python_env_override():
    env = dict(os.environ, NUMRAD_PURE_PYTHON="1")
    out = subprocess.run(
        [sys.executable, "-c", "import numrad; print(numrad.BACKEND)"],
        capture_output=True, text=True, env=env, check=True,
    )
    assert out.stdout.strip() == "python"


def test_pure_python_same_radius():
    env = dict(os.environ, NUMRAD_PURE_PYTHON="1")
    code = (
        "import numrad, numpy as np;"
        "s = numrad.NormedSpace(2, 'lp', 4.0);"
        "print(repr(numrad.numerical_radius(s, numrad.shift_fixture()).value))"
    )
    out = subprocess.run([sys.executable, "-c", code],
                         capture_output=True, text=True, env=env, check=True)
    import numrad
    here = numrad.numerical_radius(
        numrad.NormedSpace(2, "lp", 4.0), numrad.shift_fixture()).value
    assert abs(float(out.stdout.strip()) - here) < 1e-12
