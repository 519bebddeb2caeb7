#!/usr/bin/env python3
"""Benchmark the compiled kernels against the NumPy fallback.

Times lattice expansion, digital-net expansion, and the Keister transform
on identical inputs, checks both backends agree, and prints a small table:

    python benchmarks/bench_kernels.py [--log2n 16] [--dim 4] [--repeats 5]
"""

import argparse
import math
import time

import numpy as np

from momqmc import _kernels_py
from momqmc.pointsets import draw_random_lattice, draw_random_net, scrambled_columns
from momqmc.rng import SplitMix64

try:
    from momqmc import _kernels_cy
except ImportError:
    _kernels_cy = None


def _best_of(repeats, fn, *args):
    best = math.inf
    result = None
    for _ in range(repeats):
        start = time.perf_counter()
        result = fn(*args)
        best = min(best, time.perf_counter() - start)
    return best, result


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--log2n", type=int, default=16)
    parser.add_argument("--dim", type=int, default=4)
    parser.add_argument("--repeats", type=int, default=5)
    args = parser.parse_args()

    m, d = args.log2n, args.dim
    n = 1 << m
    rule = draw_random_lattice(n, d, SplitMix64(1))
    net = draw_random_net(m, d, SplitMix64(2))
    gen_vector = np.asarray(rule.gen_vector, dtype=np.uint64)
    shift = np.asarray(rule.shift, dtype=np.float64)
    columns = scrambled_columns(net)
    dshift = np.asarray(net.digital_shift, dtype=np.uint64)
    points = _kernels_py.net_points(columns, dshift, m)
    scale = math.pi ** (0.5 * d)

    cases = [
        ("lattice_points", (gen_vector, m, shift)),
        ("net_points", (columns, dshift, m)),
        ("keister_values", (points, scale)),
    ]

    print(f"n = 2^{m} = {n}, d = {d}, best of {args.repeats}")
    header = f"{'kernel':<16} {'python':>10} {'compiled':>10} {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for name, call_args in cases:
        t_py, ref = _best_of(args.repeats, getattr(_kernels_py, name), *call_args)
        if _kernels_cy is None:
            print(f"{name:<16} {t_py * 1e3:>8.1f}ms {'missing':>10} {'-':>8}")
            continue
        t_cy, out = _best_of(args.repeats, getattr(_kernels_cy, name), *call_args)
        if name == "keister_values":
            agreement = np.max(np.abs(out - ref)) if len(ref) else 0.0
            assert np.allclose(out, ref, rtol=1e-12, atol=1e-12), agreement
        else:
            assert np.array_equal(out, ref)
        print(f"{name:<16} {t_py * 1e3:>8.1f}ms {t_cy * 1e3:>8.1f}ms {t_py / t_cy:>7.1f}x")
    if _kernels_cy is None:
        print("\ncompiled extension not built; only the fallback was timed")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
