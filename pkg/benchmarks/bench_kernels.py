"""Benchmark the compiled digit-scan kernels against the pure-Python twins.

Runs staircase and first-moment-series sweeps over a dense grid with both
backends and reports per-call timings plus the speedup.  The two
implementations must agree bit-for-bit, which is asserted along the way.

Usage: python3 benchmarks/bench_kernels.py [grid_size]
"""

import sys
import time

from falpha import _kernels_py

try:
    from falpha import _kernels
except ImportError:
    _kernels = None


def sweep(fn, xs, repeat=5):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        for x in xs:
            fn(x)
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    n = int(sys.argv[1]) if len(sys.argv) > 1 else 200000
    xs = [i / n for i in range(n + 1)]

    if _kernels is None:
        print("compiled backend not available; showing pure Python only")
    else:
        for x in xs[:: max(1, n // 1000)]:
            assert _kernels.cantor_scaled(x) == _kernels_py.cantor_scaled(x)
            assert _kernels.g_series_scaled(x) == _kernels_py.g_series_scaled(x)

    print(f"grid: {n + 1} points, best of 5 runs")
    for name, py_fn, c_fn in (
        ("staircase", _kernels_py.cantor_scaled,
         _kernels.cantor_scaled if _kernels else None),
        ("g-series", _kernels_py.g_series_scaled,
         _kernels.g_series_scaled if _kernels else None),
    ):
        t_py = sweep(py_fn, xs)
        line = f"{name:10s} python {t_py * 1e9 / (n + 1):8.1f} ns/call"
        if c_fn is not None:
            t_c = sweep(c_fn, xs)
            line += (f"   compiled {t_c * 1e9 / (n + 1):8.1f} ns/call"
                     f"   speedup {t_py / t_c:5.1f}x")
        print(line)


if __name__ == "__main__":
    main()
