"""Benchmark the retarded-time solver backends.

Times the compiled kernel against the pure-NumPy fallback on identical
inputs and prints a throughput table.  Run as::

    python3 benchmarks/bench_kernels.py --n 200000 --repeat 5
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from dopplerlab._kernels import PROFILE_IDS, available_backends


def run_case(solver, pid: int, n: int, repeat: int) -> tuple[float, np.ndarray]:
    rng = np.random.default_rng(1234)
    v, a, omega_big, c = 0.0, 0.2 / 0.1, 0.1, 1.0
    x = 5.0
    ts = x / c + rng.uniform(0.0, 200.0, size=n)
    ts.sort()
    best = float("inf")
    te = None
    for _ in range(repeat):
        start = time.perf_counter()
        te, resid, iters = solver(pid, v, a, omega_big, c, x, ts, 1e-12, 200)
        best = min(best, time.perf_counter() - start)
    assert np.max(np.abs(resid)) <= 1e-12, "solver did not converge"
    return best, te


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n", type=int, default=200_000, help="points per run")
    parser.add_argument("--repeat", type=int, default=5, help="runs (best-of)")
    args = parser.parse_args()

    backends = available_backends()
    print(f"backends: {', '.join(backends)}   n={args.n}   best of {args.repeat}")
    print(f"{'profile':<14} {'backend':<8} {'time [ms]':>10} {'Mpts/s':>8}")

    results: dict[tuple[str, str], float] = {}
    reference: dict[str, np.ndarray] = {}
    for prof, pid in PROFILE_IDS.items():
        for name, solver in backends.items():
            seconds, te = run_case(solver, pid, args.n, args.repeat)
            results[(prof, name)] = seconds
            if name == "pure":
                reference[prof] = te
            else:
                gap = float(np.max(np.abs(te - reference[prof])))
                assert gap < 1e-10, f"backend mismatch on {prof}: {gap}"
            print(f"{prof:<14} {name:<8} {seconds * 1e3:>10.2f} "
                  f"{args.n / seconds / 1e6:>8.2f}")

    if "native" in backends:
        for prof in PROFILE_IDS:
            speedup = results[(prof, "pure")] / results[(prof, "native")]
            print(f"{prof}: native speedup {speedup:.1f}x (bulk)")
        # Single-point latency is where the compiled kernel actually pays
        # off: scattered retarded-time queries issue one tiny solve each,
        # so per-call overhead dominates the vectorized fallback.
        point = np.array([25.0])
        lat = {}
        for name, solver in backends.items():
            best = float("inf")
            for _ in range(2000):
                start = time.perf_counter()
                solver(2, 0.0, 2.0, 0.1, 1.0, 5.0, point, 1e-12, 200)
                best = min(best, time.perf_counter() - start)
            lat[name] = best
        print(f"single-point solve: pure {lat['pure'] * 1e6:.1f} us, "
              f"native {lat['native'] * 1e6:.1f} us "
              f"({lat['pure'] / lat['native']:.0f}x)")
    else:
        print("native kernel not built; only the pure backend was timed")


if __name__ == "__main__":
    main()
