#!/usr/bin/env python3
"""Compare the compiled Jacobi kernels against the numpy/LAPACK fallback.

Times the three primitives the deciders live on (singular values, full
SVD, Hermitian eigenvalues) across the small sizes the suites use, plus
an end-to-end decider workload. The size crossovers printed here are
what sets SVD_CUTOFF / EIGH_CUTOFF in orthomat._kernels.
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from orthomat._kernels import _reference

try:
    from orthomat._kernels import _jacobi
except ImportError:
    _jacobi = None


def _time(fn, arg, reps: int) -> float:
    fn(arg)  # warm up
    t0 = time.perf_counter()
    for _ in range(reps):
        fn(arg)
    return 1e6 * (time.perf_counter() - t0) / reps


def bench_primitives(reps: int) -> None:
    rng = np.random.default_rng(0)
    print(f"{'op':12s} {'n':>3s} {'field':>7s} {'jacobi us':>10s} {'numpy us':>10s} {'ratio':>7s}")
    for op, j_fn, r_fn, hermitian in (
        ("singvals", _jacobi.singvals, _reference.singvals, False),
        ("svd", _jacobi.svd, _reference.svd, False),
        ("eigvals", _jacobi.eigvals_herm, _reference.eigvals_herm, True),
    ):
        for n in (1, 2, 3, 4, 6, 8, 12):
            for cplx in (False, True):
                a = rng.standard_normal((n, n))
                if cplx:
                    a = a + 1j * rng.standard_normal((n, n))
                if hermitian:
                    a = (a + a.conj().T) / 2.0
                tj = _time(j_fn, a, reps)
                tr = _time(r_fn, a, reps)
                field = "complex" if cplx else "real"
                print(f"{op:12s} {n:3d} {field:>7s} {tj:10.2f} {tr:10.2f} {tr / tj:7.2f}")


def bench_decider_workload() -> None:
    """One Birkhoff-James crosscheck per dimension, per backend."""
    import importlib
    import os
    import subprocess
    import sys

    code = """
import os, time
import numpy as np
from orthomat.verify import SuiteConfig, run_suite
from orthomat import backend_name
t0 = time.perf_counter()
res = run_suite(SuiteConfig(suite="bhatia-semrl", trials=200, dims=(2, 3, 4, 5, 6), field="both", seed=3))
dt = time.perf_counter() - t0
print(f"{backend_name():8s} 200 crosscheck trials: {dt:.2f}s ({1e3 * dt / 200:.1f} ms/trial), failed={res.failed}")
"""
    for backend in ("jacobi", "numpy"):
        env = dict(os.environ, ORTHOMAT_KERNEL=backend)
        subprocess.run([sys.executable, "-c", code], env=env, check=True)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--reps", type=int, default=2000)
    parser.add_argument("--skip-workload", action="store_true")
    args = parser.parse_args()
    if _jacobi is None:
        raise SystemExit("compiled kernel not built; run: python setup.py build_ext --inplace")
    bench_primitives(args.reps)
    if not args.skip_workload:
        print()
        bench_decider_workload()


if __name__ == "__main__":
    main()
