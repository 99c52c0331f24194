#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure NumPy fallback.

Times the three hot kernels at several body counts and a full minimization,
then prints per-call timings and the compiled-over-python speedup.

Usage: python benchmarks/bench_kernels.py [--repeats 2000]
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from cocircular import _backend
from cocircular._backend import available_backends

from cocircular.optimizer import minimize_potential, random_feasible_config

def best_of(fn, repeats: int, batches: int = 5) -> float:
    best = float("inf")
    for _ in range(batches):
        t0 = time.perf_counter()
        for _ in range(repeats):
            fn()
        best = min(best, (time.perf_counter() - t0) / repeats)
    return best

def bench_kernels(repeats: int) -> None:
    backends = available_backends()
    rng = np.random.default_rng(0)
    rows = []
    for n in (6, 9, 12, 24):
        theta = random_feasible_config(n, rng, min_gap=0.05).angles
        m = rng.uniform(0.3, 3.0, n)
        for kernel in ("potential", "gradient", "hessian"):
            timings = {}
            for name, mod in sorted(backends.items()):
                fn = getattr(mod, kernel)
                timings[name] = best_of(lambda: fn(m, theta, 1.0), repeats)
            rows.append((kernel, n, timings))
    print(f"{'kernel':<10} {'n':>3} " + "".join(f"{b:>14}" for b in sorted(backends)) + f"{'speedup':>10}")
    for kernel, n, t in rows:
        line = f"{kernel:<10} {n:>3} "
        for name in sorted(t):
            line += f"{t[name] * 1e6:>12.2f}us"
        if "compiled" in t and "python" in t:
            line += f"{t['python'] / t['compiled']:>9.1f}x"
        print(line)

def bench_minimize(instances: int = 40) -> None:
    backends = available_backends()
    rng = np.random.default_rng(1)
    cases = []
    for _ in range(instances):
        n = int(rng.integers(5, 10))
        cases.append((rng.uniform(0.4, 3.0, n), float(rng.choice([0.5, 1.0, 2.0]))))
    print(f"\nfull minimization, {instances} random instances (n in 5..9):")
    timings = {}
    for name in sorted(backends):
        _backend.set_backend(name)
        t0 = time.perf_counter()
        iters = 0
        for m, alpha in cases:
            res = minimize_potential(m, alpha)
            assert res.converged
            iters += res.iterations
        timings[name] = time.perf_counter() - t0
        print(f"  {name:>9}: {timings[name] * 1e3:8.1f} ms total "
              f"({timings[name] / instances * 1e3:6.2f} ms/instance, {iters} Newton/descent steps)")
    if "compiled" in timings and "python" in timings:
        print(f"  speedup: {timings['python'] / timings['compiled']:.1f}x")

def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeats", type=int, default=2000)
    args = ap.parse_args()
    names = sorted(available_backends())
    print(f"available backends: {names}\n")
    bench_kernels(args.repeats)
    bench_minimize()

if __name__ == "__main__":
    main()
