#!/usr/bin/env python3
"""Benchmark the verification sweep kernels: numba backend vs numpy fallback.

Runs each sweep once per backend for warmup (numba pays its JIT there),
then times the best of `--repeat` runs.  Usage:

    python benchmarks/bench_sweeps.py [--repeat 3]
"""

from __future__ import annotations

import argparse
import time

from lensbounds import sweeps

SWEEPS = (
    ("kummer-vs-legendre (a<=1024)", lambda b: sweeps.sweep_kummer_legendre(1024, backend=b)),
    ("alpha-digit-identity (2^20)", lambda b: sweeps.sweep_alpha_identity(1 << 20, backend=b)),
    ("alpha-symbolic N=40 (2^16)", lambda b: sweeps.sweep_alpha_symbolic(40, 1 << 16, backend=b)),
    ("nu-binom-symbolic N=40 (4096^2)", lambda b: sweeps.sweep_nu_binom_symbolic(40, 4096, backend=b)),
)


def best_time(fn, backend: str, repeat: int) -> tuple[float, int]:
    outcome = fn(backend)  # warmup / JIT
    if not outcome.ok:
        raise SystemExit(f"sweep failed under {backend}: {outcome}")
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(backend)
        best = min(best, time.perf_counter() - t0)
    return best, outcome.cases


def main() -> None:
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    backends = ["numpy"] + (["numba"] if sweeps.HAS_NUMBA else [])
    print(f"{'sweep':36}  {'cases':>10}  " +
          "  ".join(f"{b:>10}" for b in backends) + "   speedup")
    for name, fn in SWEEPS:
        times = {}
        cases = 0
        for backend in backends:
            times[backend], cases = best_time(fn, backend, args.repeat)
        cols = "  ".join(f"{times[b] * 1e3:8.1f}ms" for b in backends)
        speedup = ""
        if "numba" in times:
            speedup = f"  {times['numpy'] / times['numba']:6.1f}x"
        print(f"{name:36}  {cases:>10}  {cols}{speedup}")


if __name__ == "__main__":
    main()
