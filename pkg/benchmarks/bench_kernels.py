"""Timing comparison of the compiled and vectorized kernel paths.

Run as a script:

    python3 benchmarks/bench_kernels.py

Both workloads mirror the heaviest call sites in the test and CLI
surface: the exact Dedekind batch over all residues coprime to a large
modulus, and the dual theta-type lattice sums over a parameter grid.
When numba is not importable (or RHO_CALC_DISABLE_NUMBA is set) only the
numpy fallback is timed.
"""

from __future__ import annotations

import time
from math import gcd

import numpy as np

import rhocalc._kernels as kernels


def bench_dedekind(m: int, repeats: int) -> dict:
    a_arr = np.array([a for a in range(1, m) if gcd(a, m) == 1], dtype=np.int64)
    cotbase = np.concatenate([[0.0], 1.0 / np.tan(np.pi * np.arange(1, m) / m)])
    kernels.dedekind_batch_exact(a_arr[:4], m)  # warm (JIT compile)
    kernels.dedekind_batch_cot(a_arr[:4], m, cotbase)
    t0 = time.perf_counter()
    for _ in range(repeats):
        exact = kernels.dedekind_batch_exact(a_arr, m)
    t_exact = (time.perf_counter() - t0) / repeats
    t0 = time.perf_counter()
    for _ in range(repeats):
        cot = kernels.dedekind_batch_cot(a_arr, m, cotbase)
    t_cot = (time.perf_counter() - t0) / repeats
    check = float(np.max(np.abs(exact.astype(np.float64) / (4.0 * m * m) - cot)))
    return {"exact_s": t_exact, "cot_s": t_cot, "pairs": len(a_arr), "agree": check}


def bench_f_sums(repeats: int) -> dict:
    grid = [
        (s1, s2, u, 0.5, 0.25)
        for s1 in (0.0, 0.3)
        for s2 in (0.7, 1.5)
        for u in (0.6, 1.0, 1.8)
    ]
    for s1, s2, u, n1, n2 in grid[:1]:  # warm (JIT compile)
        kernels.f_direct_sum(s1, s2, u, n1, n2, -40, 40, 9.0)
        kernels.f_poisson_sum(s1, s2, u, n1, n2, -40, 40, 9.0)
    t0 = time.perf_counter()
    for _ in range(repeats):
        for s1, s2, u, n1, n2 in grid:
            kernels.f_direct_sum(s1, s2, u, n1, n2, -40, 40, 9.0)
    t_direct = (time.perf_counter() - t0) / repeats
    t0 = time.perf_counter()
    for _ in range(repeats):
        for s1, s2, u, n1, n2 in grid:
            kernels.f_poisson_sum(s1, s2, u, n1, n2, -40, 40, 9.0)
    t_poisson = (time.perf_counter() - t0) / repeats
    return {"direct_s": t_direct, "poisson_s": t_poisson, "grid": len(grid)}


def run_path(label: str) -> None:
    ded = bench_dedekind(m=499, repeats=3)
    fs = bench_f_sums(repeats=5)
    print(f"[{label}]")
    print(
        f"  dedekind m=499 ({ded['pairs']} residues): "
        f"exact {ded['exact_s'] * 1e3:8.2f} ms   cot {ded['cot_s'] * 1e3:8.2f} ms   "
        f"max |exact-cot| {ded['agree']:.2e}"
    )
    print(
        f"  f-sums {fs['grid']}-point grid:          "
        f"direct {fs['direct_s'] * 1e3:7.2f} ms   poisson {fs['poisson_s'] * 1e3:6.2f} ms"
    )


def main() -> None:
    if kernels.HAS_NUMBA:
        run_path("numba")
        kernels.HAS_NUMBA = False
        try:
            run_path("numpy fallback")
        finally:
            kernels.HAS_NUMBA = True
    else:
        print("numba unavailable or disabled; timing the numpy fallback only")
        run_path("numpy fallback")


if __name__ == "__main__":
    main()
