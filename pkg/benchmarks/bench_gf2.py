#!/usr/bin/env python3
"""Benchmark the compiled GF(2) kernels against the pure-Python twins.

The hot loops are the Gray-code walk over a solution coset (minimum
weight search) and the brute-force feasibility sweep used by the
exhaustive cross-checks.  Run after building the extension:

    python benchmarks/bench_gf2.py
"""

import random
import time

from regionselect.gf2 import _purepy

try:
    from regionselect.gf2 import _gf2core as fast
except ImportError:
    fast = None


def bench(label, fn, repeat=3):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    print(f"  {label:18s} {best * 1000:9.2f} ms")
    return best


def main():
    rng = random.Random(42)
    cols = 40
    kdim = 20
    particular = rng.getrandbits(cols)
    basis = [rng.getrandbits(cols) for _ in range(kdim)]

    print(f"coset minimum-weight search: {kdim}-dimensional kernel, {cols} columns")
    t_py = bench("pure python", lambda: _purepy.coset_min_weight(particular, basis, 16))
    if fast is not None:
        t_c = bench("compiled", lambda: fast.coset_min_weight(particular, basis, 16))
        print(f"  speedup            {t_py / t_c:9.1f}x")
    else:
        print("  compiled backend not built")

    nrows, ncols = 14, 18
    rows = [rng.getrandbits(ncols) for _ in range(nrows)]
    rhs = rng.getrandbits(nrows) or 1

    print(f"exhaustive feasibility: {nrows} rows, 2^{ncols} subsets")
    t_py = bench("pure python", lambda: _purepy.exhaustive_feasible(rows, rhs, ncols))
    if fast is not None:
        t_c = bench("compiled", lambda: fast.exhaustive_feasible(rows, rhs, ncols))
        print(f"  speedup            {t_py / t_c:9.1f}x")


if __name__ == "__main__":
    main()
