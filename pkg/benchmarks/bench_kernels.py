"""Compare the numba kernels with the pure-numpy fallback.

    python benchmarks/bench_kernels.py [--repeat 5]

Each case is run once to warm up (this triggers JIT compilation), then timed
``--repeat`` times; the best time is reported.  Results of the two backends
are also compared so a speed-up never hides a wrong answer.
"""
from __future__ import annotations

import argparse
import time

import numpy as np

from mjpoly.numint import get_kernels
from mjpoly.numint.quadrature import composite_gauss_legendre


def _cases():
    t_nodes, t_w = composite_gauss_legendre(0.0, 1.0, 16, 20)
    u_nodes, u_w = composite_gauss_legendre(0.0, 60.0, 16, 20)
    s_nodes, s_w = composite_gauss_legendre(0.0, 1.0, 32, 20)
    z = np.linspace(0.0, 40.0, 20_000)
    return {
        "bessel_j(2.5, 20k points)": lambda k: k.bessel_j(2.5, z),
        "laguerre_eval(12, 3.5, 20k points)": lambda k: k.laguerre_eval(12, 3.5, z),
        "lanczos_gamma(20k points)": lambda k: k.lanczos_gamma(z + 0.5),
        "intrep_sums(j=4, l=2, 320x320 nodes)": lambda k: k.intrep_sums(
            4, 2, 3.5, 1.0, t_nodes, t_w, u_nodes, u_w),
        "hankel_sums(j=4, 640 nodes)": lambda k: k.hankel_sums(4, 2.0, 1.0, s_nodes, s_w, 12.0),
    }


def _best(fn, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()

    kernels = {name: get_kernels(name) for name in ("numpy", "numba")}
    print(f"{'case':40s} {'numpy ms':>10s} {'numba ms':>10s} {'speed-up':>9s} {'max rel diff':>13s}")
    for label, case in _cases().items():
        outputs = {name: np.asarray(case(k), dtype=float) for name, k in kernels.items()}  # warm-up
        times = {name: _best(lambda k=k: case(k), args.repeat) for name, k in kernels.items()}
        a, b = outputs["numpy"], outputs["numba"]
        diff = float(np.max(np.abs(a - b) / np.maximum(np.maximum(np.abs(a), np.abs(b)), 1.0)))
        print(f"{label:40s} {times['numpy'] * 1e3:10.2f} {times['numba'] * 1e3:10.2f} "
              f"{times['numpy'] / times['numba']:8.1f}x {diff:13.2e}")


if __name__ == "__main__":
    main()
