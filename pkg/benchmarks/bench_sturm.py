"""Sturm bisection and Legendre recurrence: numba kernels against the numpy path.

    python3 benchmarks/bench_sturm.py [--N 4000] [--k 10] [--repeat 3]

Run with SCARFPOLY_DISABLE_NUMBA=1 to confirm the package still works with
only the numpy path (the numba column is then skipped).
"""
import argparse
import time

import numpy as np

from scarfpoly import _accel
from scarfpoly.fdoracle import FDGrid, tridiagonal_eigenvalues
from scarfpoly.noncentral import _assoc_legendre_kernel, assoc_legendre
from scarfpoly.scarf import ScarfParams, potential_II


def best_of(fn, repeat):
    times = []
    out = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t0)
    return min(times), out


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--N", type=int, default=4000)
    ap.add_argument("--k", type=int, default=10)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    grid = FDGrid(20.0, args.N)
    sp = ScarfParams(10, 5)
    h = grid.h
    diag = 2.0 / h**2 + potential_II(sp, grid.points)
    off = np.full(grid.N - 1, -1.0 / h**2)

    print(f"tridiagonal N={args.N}, k={args.k}, numba available: {_accel.HAVE_NUMBA}")
    t_np, ev_np = best_of(lambda: tridiagonal_eigenvalues(diag, off, args.k, backend="numpy"), args.repeat)
    print(f"  numpy   {t_np:8.3f} s")
    if _accel.HAVE_NUMBA:
        t0 = time.perf_counter()
        tridiagonal_eigenvalues(diag, off, 1, backend="numba")
        print(f"  numba first call (compile or cache load) {time.perf_counter() - t0:.3f} s")
        t_nb, ev_nb = best_of(lambda: tridiagonal_eigenvalues(diag, off, args.k, backend="numba"), args.repeat)
        print(f"  numba   {t_nb:8.3f} s   speedup x{t_np / t_nb:.1f}")
        print(f"  max |numba - numpy| = {np.max(np.abs(ev_nb - ev_np)):.3e}")

    x = np.cos(np.linspace(0.1, np.pi - 0.1, 200_000))
    t_py, p_py = best_of(lambda: assoc_legendre(30, 3, x, backend="numpy"), args.repeat)
    print(f"associated Legendre P_30^3 on {x.size} points")
    print(f"  numpy   {t_py:8.3f} s")
    if _accel.HAVE_NUMBA:
        _assoc_legendre_kernel(30, 3, x[:4])
        t_nb, p_nb = best_of(lambda: assoc_legendre(30, 3, x, backend="numba"), args.repeat)
        print(f"  numba   {t_nb:8.3f} s   speedup x{t_py / t_nb:.1f}")
        print(f"  max rel diff = {np.max(np.abs(p_nb - p_py)) / np.max(np.abs(p_py)):.3e}")


if __name__ == "__main__":
    main()
