#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python fallback.

Both backends are imported directly (ignoring the import-time selection) and
timed on the hot operations: scalar inversions, vectorized inversion grids,
forward-map grids, and ladder water-fills. Results are best-of-N wall times.

Run:  python benchmarks/bench_backends.py [--repeats N]
"""

import argparse
import time

import numpy as np

from heatcap import _kernels_py

try:
    from heatcap import _kernels
except ImportError:
    _kernels = None


def best_of(fn, repeats: int) -> float:
    times = []
    for _ in range(repeats):
        start = time.perf_counter()
        fn()
        times.append(time.perf_counter() - start)
    return min(times)


def workloads():
    ys_sweep = np.logspace(-3.0, 6.0, 100_000)
    xs_grid = np.linspace(0.0, 20.0, 1_000_000)
    ladder = np.exp((2.0 * np.arange(100_000) + 1.0) / 5e4)  # tbp = 5e4 rungs
    scalar_ys = [10.0 ** (0.01 * i - 3.0) for i in range(2_000)]

    def scalar_w0(mod):
        for y in scalar_ys:
            mod.w0(y, 1e-12, 200)

    return [
        ("w0 scalar x 2000", scalar_w0),
        ("w0_many on 1e5 grid", lambda mod: mod.w0_many(ys_sweep, 1e-12, 200)),
        ("forward_map_many on 1e6 grid", lambda mod: mod.forward_map_many(xs_grid)),
        ("ladder_waterfill, 1e5 rungs", lambda mod: mod.ladder_waterfill(ladder, 2.5e4)),
    ]


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeats", type=int, default=3, help="best-of repeats per case")
    args = parser.parse_args()

    if _kernels is None:
        print("compiled extension not built; showing pure-Python timings only")

    name_w = 30
    header = f"{'workload':<{name_w}} {'python':>12} {'compiled':>12} {'speedup':>9}"
    print(header)
    print("-" * len(header))
    for name, fn in workloads():
        t_py = best_of(lambda: fn(_kernels_py), args.repeats)
        if _kernels is not None:
            t_c = best_of(lambda: fn(_kernels), args.repeats)
            print(f"{name:<{name_w}} {t_py * 1e3:>10.2f}ms {t_c * 1e3:>10.2f}ms {t_py / t_c:>8.1f}x")
        else:
            print(f"{name:<{name_w}} {t_py * 1e3:>10.2f}ms {'-':>12} {'-':>9}")

    # sanity: identical results, not just fast ones
    if _kernels is not None:
        ys = np.logspace(-6.0, 6.0, 1000)
        same = np.array_equal(
            _kernels.w0_many(ys, 1e-12, 200), _kernels_py.w0_many(ys, 1e-12, 200)
        )
        print(f"\nbackends bitwise identical on a 1000-point grid: {same}")
        if not same:
            return 1
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
