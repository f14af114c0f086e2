"""Finite-difference eigenvalues of ``-psi'' + v(z) psi = e psi`` on ``[-L, L]``.

Three-point Laplacian with Dirichlet walls gives a symmetric tridiagonal
matrix (diagonal ``2/h^2 + v(z_i)``, off-diagonal ``-1/h^2``). Its lowest
eigenvalues come from Sturm-sequence bisection, each bracketed and bisected
independently from the Gershgorin interval, so results do not depend on the
order in which eigenvalues are requested.

The Sturm counts run through a numba kernel unless ``SCARFPOLY_DISABLE_NUMBA``
is set, in which case a numpy path vectorised over all brackets is used.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _accel
from ._accel import njit
from .scarf import EnergyLevel, ScarfParams, bound_state_count, potential_II, spectrum_II

__all__ = [
    "FDGrid",
    "SpectrumReport",
    "fd_eigenvalues",
    "compare_spectrum",
    "sturm_count",
    "tridiagonal_eigenvalues",
]

_MAX_BISECT = 200


@dataclass(frozen=True)
class FDGrid:
    L: float = 20.0
    N: int = 4000

    def __post_init__(self):
        if not self.L > 0:
            raise ValueError("L must be positive")
        if self.N < 3:
            raise ValueError("N must be at least 3")

    @property
    def h(self) -> float:
        return 2.0 * self.L / (self.N + 1)

    @property
    def points(self) -> np.ndarray:
        return -self.L + self.h * np.arange(1, self.N + 1)

    def refined(self) -> "FDGrid":
        """Same box, half the spacing; the nodes of ``self`` are a subset."""
        return FDGrid(self.L, 2 * self.N + 1)


@dataclass(frozen=True)
class SpectrumReport:
    analytic: list
    numeric: np.ndarray
    deviations: np.ndarray
    method: str = "richardson"

    @property
    def max_deviation(self) -> float:
        return float(np.max(self.deviations)) if len(self.deviations) else 0.0


@njit
def _sturm_count_jit(diag, off2, x):
    # number of eigenvalues strictly below x
    count = 0
    q = diag[0] - x
    if q < 0.0:
        count += 1
    tiny = 1e-300
    for i in range(1, diag.shape[0]):
        if q == 0.0:
            q = tiny
        q = diag[i] - x - off2[i - 1] / q
        if q < 0.0:
            count += 1
    return count


@njit
def _bisect_jit(diag, off2, k, lo0, hi0, rtol):
    out = np.empty(k)
    for j in range(k):
        lo, hi = lo0, hi0
        for _ in range(_MAX_BISECT):
            mid = 0.5 * (lo + hi)
            if mid <= lo or mid >= hi:
                break
            if _sturm_count_jit(diag, off2, mid) > j:
                hi = mid
            else:
                lo = mid
            if hi - lo <= rtol * max(abs(lo), abs(hi), 1.0):
                break
        out[j] = 0.5 * (lo + hi)
    return out


def _sturm_counts_numpy(diag, off2, xs):
    """Sturm counts for a vector of shifts at once (same op order as the kernel)."""
    xs = np.asarray(xs, dtype=float)
    count = np.zeros(xs.shape, dtype=np.int64)
    q = diag[0] - xs
    count += q < 0.0
    # a pivot of 1e-300 may overflow to -inf, as in the kernel; that still counts correctly
    with np.errstate(over="ignore"):
        for i in range(1, diag.shape[0]):
            q = np.where(q == 0.0, 1e-300, q)
            q = diag[i] - xs - off2[i - 1] / q
            count += q < 0.0
    return count


def _bisect_numpy(diag, off2, k, lo0, hi0, rtol):
    lo = np.full(k, lo0)
    hi = np.full(k, hi0)
    idx = np.arange(k)
    active = np.ones(k, dtype=bool)
    for _ in range(_MAX_BISECT):
        if not active.any():
            break
        mid = 0.5 * (lo + hi)
        stuck = (mid <= lo) | (mid >= hi)
        active &= ~stuck
        if not active.any():
            break
        cnt = _sturm_counts_numpy(diag, off2, mid)
        up = active & (cnt > idx)
        down = active & ~(cnt > idx)
        hi = np.where(up, mid, hi)
        lo = np.where(down, mid, lo)
        done = (hi - lo) <= rtol * np.maximum(np.maximum(np.abs(lo), np.abs(hi)), 1.0)
        active &= ~done
    return 0.5 * (lo + hi)


def sturm_count(diag, off, x: float) -> int:
    """Number of eigenvalues below ``x`` of the tridiagonal matrix (diag, off)."""
    diag = np.ascontiguousarray(diag, dtype=float)
    off2 = np.ascontiguousarray(off, dtype=float) ** 2
    if _accel.HAVE_NUMBA:
        return int(_sturm_count_jit(diag, off2, float(x)))
    return int(_sturm_counts_numpy(diag, off2, np.array([x]))[0])


def tridiagonal_eigenvalues(diag, off, k: int, rtol: float = 1e-15, backend: str | None = None) -> np.ndarray:
    """Lowest ``k`` eigenvalues, ascending, by Sturm bisection."""
    diag = np.ascontiguousarray(diag, dtype=float)
    off = np.ascontiguousarray(off, dtype=float)
    n = diag.shape[0]
    if k > n:
        raise ValueError(f"requested {k} eigenvalues of a {n}x{n} matrix")
    if k <= 0:
        return np.empty(0)
    off2 = off * off
    r = np.zeros(n)
    r[:-1] += np.abs(off)
    r[1:] += np.abs(off)
    lo0, hi0 = float(np.min(diag - r)), float(np.max(diag + r))
    pad = 1e-12 * max(abs(lo0), abs(hi0), 1.0)
    lo0, hi0 = lo0 - pad, hi0 + pad
    if backend is None:
        backend = "numba" if _accel.HAVE_NUMBA else "numpy"
    if backend == "numba":
        if not _accel.HAVE_NUMBA:
            raise RuntimeError("numba backend requested but numba is unavailable or disabled")
        return _bisect_jit(diag, off2, int(k), lo0, hi0, float(rtol))
    if backend == "numpy":
        return _bisect_numpy(diag, off2, int(k), lo0, hi0, float(rtol))
    raise ValueError(f"unknown backend {backend!r}")


def fd_eigenvalues(v, grid: FDGrid, k: int, backend: str | None = None) -> np.ndarray:
    """Lowest ``k`` eigenvalues of the discretised ``-d^2/dz^2 + v``."""
    if k > grid.N:
        raise ValueError(f"k = {k} exceeds the number of grid points N = {grid.N}")
    h = grid.h
    diag = 2.0 / h**2 + np.asarray(v(grid.points), dtype=float)
    off = np.full(grid.N - 1, -1.0 / h**2)
    return tridiagonal_eigenvalues(diag, off, k, backend=backend)


def compare_spectrum(params: ScarfParams, grid: FDGrid | None = None, k: int | None = None,
                     richardson: bool = True, backend: str | None = None) -> SpectrumReport:
    """Analytic Scarf II levels e_n against the finite-difference oracle.

    With ``richardson`` (default) the oracle value is ``(4 E(h/2) - E(h)) / 3``
    from ``grid`` and its nested refinement, cancelling the O(h^2) error of the
    three-point stencil; otherwise the raw ``grid`` eigenvalues are reported.
    """
    grid = grid or FDGrid()
    count = bound_state_count(params)
    if k is None:
        k = count
    if k > count:
        raise ValueError(f"k = {k} exceeds the bound-state count {count}")
    levels: list[EnergyLevel] = spectrum_II(params)[:k]

    def v(z):
        return potential_II(params, z)

    coarse = fd_eigenvalues(v, grid, k, backend=backend)
    if richardson:
        fine = fd_eigenvalues(v, grid.refined(), k, backend=backend)
        numeric = (4.0 * fine - coarse) / 3.0
    else:
        numeric = coarse
    exact = np.array([float(lv.e) for lv in levels])
    return SpectrumReport(levels, numeric, np.abs(numeric - exact), "richardson" if richardson else "plain")
