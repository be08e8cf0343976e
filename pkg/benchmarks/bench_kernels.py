"""Time the numba kernels against the pure-numpy ones.

    python3 benchmarks/bench_kernels.py [--points N] [--repeat R]

Both implementations are imported directly, so the FRACWAVE_DISABLE_NUMBA
switch does not matter here. The first numba call (compilation) is excluded.
"""
import argparse
import math
import time

import numpy as np

from fracwave.kernels import numba_impl, numpy_impl


def best_of(fn, repeat):
    best = math.inf
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--points", type=int, default=1_000_000)
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    if numba_impl is None:
        raise SystemExit("numba is not installed; nothing to compare")

    alpha = 1.5
    s, c = math.sin(math.pi * alpha / 2), math.cos(math.pi * alpha / 2)
    rng = np.random.default_rng(0)
    x = rng.uniform(-5.0, 5.0, args.points)
    t = rng.uniform(0.01, 3.0, args.points)
    tau = rng.uniform(0.0, 50.0, args.points)
    betas = np.linspace(-3.5, 1.5, 21)

    cases = [
        ("green_kernel", lambda m: m.green_kernel(alpha, s, c, x, t)),
        ("laux_kernel", lambda m: m.laux_kernel(alpha, s, c, tau)),
        (f"lpow_integral x{betas.size}",
         lambda m: [m.lpow_integral(alpha, s, c, b, 1e-10, 1e-14, 2000) for b in betas]),
    ]
    print(f"{'kernel':<22}{'numpy [s]':>12}{'numba [s]':>12}{'speedup':>10}   max |diff|")
    for name, run in cases:
        ref, fast = run(numpy_impl), run(numba_impl)  # also triggers compilation
        if isinstance(ref, list):
            diff = max(abs(a[0] - b[0]) for a, b in zip(ref, fast))
        else:
            diff = float(np.max(np.abs(ref - fast)))
        t_np = best_of(lambda: run(numpy_impl), args.repeat)
        t_nb = best_of(lambda: run(numba_impl), args.repeat)
        print(f"{name:<22}{t_np:>12.4f}{t_nb:>12.4f}{t_np / t_nb:>10.1f}   {diff:.1e}")


if __name__ == "__main__":
    main()
