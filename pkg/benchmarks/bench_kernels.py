#!/usr/bin/env python3
"""Time the numba kernels against the pure-numpy fallback.

    python benchmarks/bench_kernels.py [--repeat 5]
"""
import argparse
import math
import time

import numpy as np

from unitcharge import _kernels


def timed(fn, repeat):
    best = math.inf
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def cases():
    nodes, weights = np.polynomial.legendre.leggauss(20)
    # real-axis j0 panels at eps = 0.01, the expensive regime
    xi = 2 * math.pi
    edges = np.concatenate(([0.0], np.arange(1, 12_800) * math.pi / xi, [6400.0]))
    return {
        "lorentzian_sum N=1e6": lambda b: b.lorentzian_sum(1.0, 1_000_000),
        "inverse_power_sum N=1e6": lambda b: b.inverse_power_sum(4.0, 1_000_000),
        "panel_integrals 12.8k panels": lambda b: b.panel_integrals(_kernels.J0, _kernels.REAL, 0.01, xi, edges, nodes, weights),
    }


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()

    if _kernels.numba_backend is None:
        print("numba backend unavailable; only numpy timings shown")
    print(f"{'kernel':<32}{'numpy [ms]':>12}{'numba [ms]':>12}{'speedup':>10}")
    for name, call in cases().items():
        t_np, r_np = timed(lambda: call(_kernels.numpy_backend), args.repeat)
        if _kernels.numba_backend is not None:
            call(_kernels.numba_backend)  # compile outside the timing
            t_nb, r_nb = timed(lambda: call(_kernels.numba_backend), args.repeat)
            agree = np.allclose(r_np, r_nb, rtol=1e-12, atol=0)
            print(f"{name:<32}{t_np * 1e3:>12.2f}{t_nb * 1e3:>12.2f}{t_np / t_nb:>9.1f}x{'' if agree else '  MISMATCH'}")
        else:
            print(f"{name:<32}{t_np * 1e3:>12.2f}{'-':>12}{'-':>10}")


if __name__ == "__main__":
    main()
