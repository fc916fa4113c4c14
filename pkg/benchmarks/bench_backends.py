#!/usr/bin/env python3
"""Benchmark the numba kernels against the pure-numpy fallback.

Runs each workload in a fresh subprocess per backend (the backend is fixed
at import time by NCHOZETA_BACKEND), warms the JIT cache first, and
reports the median of repeated timings.

    python benchmarks/bench_backends.py
"""

import argparse
import json
import os
import subprocess
import sys
import time
from pathlib import Path

SRC = str(Path(__file__).resolve().parent.parent / "src")


def _workloads():
    import numpy as np

    from nchozeta import (NchoParams, elliptic_k, g_euler, gauss_2f1_neg,
                          heun_coefficients, w_closed, zeta2_closed)

    zs = np.linspace(-100.0, -0.01, 4096)
    k2s = np.linspace(-5.0, 0.99, 10_000)
    points = [NchoParams(a, a / 2.0) for a in np.linspace(1.6, 20.0, 200)]

    return [
        ("2f1 scalar, deep argument (x=-961)", 20,
         lambda: gauss_2f1_neg(0.25, 0.75, 1.0, -961.0)),
        ("2f1 vector, 4096 arguments", 5,
         lambda: w_closed(zs)),
        ("euler-integral g(3)", 5,
         lambda: g_euler(3.0)),
        ("zeta closed form, 200-point sweep", 3,
         lambda: [zeta2_closed(p) for p in points]),
        ("heun coefficients, N=2000", 5,
         lambda: heun_coefficients(2000)),
        ("elliptic K, 10k moduli", 3,
         lambda: [elliptic_k(float(k2)) for k2 in k2s]),
    ]


def run_worker() -> dict:
    results = {}
    for name, repeats, fn in _workloads():
        fn()  # warm-up (and JIT compile on the numba backend)
        times = []
        for _ in range(repeats):
            t0 = time.perf_counter()
            fn()
            times.append(time.perf_counter() - t0)
        results[name] = sorted(times)[len(times) // 2]
    return results


def run_orchestrator() -> int:
    timings = {}
    for backend in ("numba", "numpy"):
        env = dict(os.environ)
        env["NCHOZETA_BACKEND"] = backend
        env["PYTHONPATH"] = SRC + os.pathsep + env.get("PYTHONPATH", "")
        proc = subprocess.run(
            [sys.executable, __file__, "--worker"],
            capture_output=True, text=True, env=env)
        if proc.returncode != 0:
            print(proc.stderr, file=sys.stderr)
            return 1
        timings[backend] = json.loads(proc.stdout)

    width = max(len(name) for name in timings["numba"])
    print(f"{'workload':<{width}}  {'numba':>10}  {'numpy':>10}  {'speedup':>8}")
    print("-" * (width + 34))
    for name in timings["numba"]:
        fast = timings["numba"][name]
        slow = timings["numpy"][name]
        print(f"{name:<{width}}  {fast * 1e3:>8.2f}ms  {slow * 1e3:>8.2f}ms  "
              f"{slow / fast:>7.1f}x")
    return 0


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--worker", action="store_true",
                    help="time the active backend and print JSON")
    ns = ap.parse_args()
    if ns.worker:
        print(json.dumps(run_worker()))
        return 0
    return run_orchestrator()


if __name__ == "__main__":
    sys.exit(main())
