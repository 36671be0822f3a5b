"""Benchmark the compiled kernels against the pure-Python fallback.

Times the two hot kernels (cyclic Jacobi eigendecomposition and the MEF
grid scan) through both backend modules, then times the full default CLI
sweep through whichever backend the package resolved at import.

Run from the repository root:

    python3 benchmarks/bench_backends.py
    python3 benchmarks/bench_backends.py --repeats 9 --grid 32
"""

import argparse
import importlib
import time

import numpy as np


def best_of(fn, repeats):
    times = []
    for _ in range(repeats):
        start = time.perf_counter()
        fn()
        times.append(time.perf_counter() - start)
    return min(times)


def load_backends():
    backends = {}
    for name in ("entfid._core", "entfid._core_py"):
        try:
            mod = importlib.import_module(name)
        except ImportError:
            continue
        backends[mod.BACKEND] = mod
    return backends


def bench_jacobi(mod, matrices, repeats):
    def work():
        for a in matrices:
            mod.jacobi_eigh(a)
    return best_of(work, repeats)


def bench_grid_scan(mod, m, n, repeats):
    return best_of(lambda: mod.mef_grid_scan(m, n), repeats)


def bench_sweep(repeats):
    from entfid.cli import render_csv
    from entfid.scenario import SweepConfig, sweep

    return best_of(lambda: render_csv(sweep(SweepConfig())), repeats)


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeats", type=int, default=5,
                        help="best-of repetitions per measurement (default 5)")
    parser.add_argument("--grid", type=int, default=24,
                        help="grid points per angle for the scan bench (default 24)")
    parser.add_argument("--matrices", type=int, default=400,
                        help="number of 4x4 eigendecompositions per repeat")
    args = parser.parse_args()

    rng = np.random.default_rng(0)
    matrices = []
    for _ in range(args.matrices):
        a = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
        matrices.append(np.ascontiguousarray(a + a.conj().T))
    m = rng.normal(size=(4, 2, 2)) + 1j * rng.normal(size=(4, 2, 2))
    m = np.ascontiguousarray(m)

    backends = load_backends()
    if not backends:
        raise SystemExit("no backend module could be imported")

    print(f"{'kernel':<28}" + "".join(f"{name:>12}" for name in backends))
    row = [f"{'jacobi_eigh (400 x 4x4)':<28}"]
    jt = {name: bench_jacobi(mod, matrices, args.repeats)
          for name, mod in backends.items()}
    print(row[0] + "".join(f"{jt[name] * 1e3:>10.2f}ms" for name in backends))

    gt = {name: bench_grid_scan(mod, m, args.grid, args.repeats)
          for name, mod in backends.items()}
    label = f"mef_grid_scan (n={args.grid})"
    print(f"{label:<28}" + "".join(f"{gt[name] * 1e3:>10.2f}ms" for name in backends))

    if len(backends) == 2:
        print(f"{'speedup (python/cython)':<28}"
              f"{jt['python'] / jt['cython']:>11.1f}x"
              f"{gt['python'] / gt['cython']:>11.1f}x")

    import entfid
    st = bench_sweep(max(1, args.repeats // 2))
    print(f"\nfull default sweep via resolved backend "
          f"({entfid.BACKEND}): {st:.2f}s")


if __name__ == "__main__":
    main()
