"""Benchmark the compiled sweep kernel against the numpy fallback.

Run:  python3 benchmarks/bench_kernels.py [--grid 2048] [--repeat 200]
"""

from __future__ import annotations

import argparse
import importlib
import os
import statistics
import sys
import time

import numpy as np


def _load_backends():
    from numrad import _gridkern_np

    backends = {"python": _gridkern_np}
    try:
        from numrad import _gridkern  # type: ignore[attr-defined]

        backends["compiled"] = _gridkern
    except ImportError:
        print("compiled kernel not built; benchmarking the fallback only")
    return backends


CASES = [
    ("lp:4 shift", 0, 4.0, np.array([[0.0, 0.0], [1.0, 0.0]])),
    ("l1 rank-one", 1, 0.0, np.array([[1.0, 0.0], [0.0, 0.0]])),
    ("linf rotation", 2, 0.0, np.array([[0.6, -0.8], [0.8, 0.6]])),
    ("mixed generic", 3, 0.0, np.array([[0.3, 1.1], [-0.7, 0.2]])),
]


def bench(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return statistics.median(times)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--grid", type=int, default=2048)
    ap.add_argument("--repeat", type=int, default=200)
    args = ap.parse_args()

    backends = _load_backends()
    step = 2.0 * np.pi / args.grid
    print(f"grid={args.grid} repeat={args.repeat} (median seconds per sweep)")
    header = f"{'case':<16}" + "".join(f"{name:>12}" for name in backends)
    if len(backends) == 2:
        header += f"{'speedup':>10}"
    print(header)
    for label, code, p, T in CASES:
        Tf = np.ascontiguousarray(T)
        row = f"{label:<16}"
        meds = {}
        for name, mod in backends.items():
            meds[name] = bench(
                lambda m=mod: m.radius_sweep(Tf, code, p, 0.0, step, args.grid),
                args.repeat,
            )
            row += f"{meds[name]:>12.2e}"
        if len(meds) == 2:
            row += f"{meds['python'] / meds['compiled']:>9.1f}x"
        # cross-check the two backends agree
        vals = [m.radius_sweep(Tf, code, p, 0.0, step, args.grid)[0]
                for m in backends.values()]
        assert max(vals) - min(vals) < 1e-12, (label, vals)
        print(row)


if __name__ == "__main__":
    main()
