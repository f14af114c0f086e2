"""Integration over the real line and Gram matrices of Romanovski polynomials.

The default transform maps the line onto ``(-pi/2, pi/2)`` through
``x = tan(phi)``; a ``(1+x^2)^(-p)`` weight then becomes a bounded
``cos(phi)^(2p-2)``-type integrand on a finite interval.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .romanovski import RomanovskiParams, orthogonal_pair, romanovski, weight

__all__ = [
    "QuadratureSpec",
    "QuadResult",
    "GramMatrix",
    "integrate_line",
    "gamma",
    "gram",
    "inner_product",
    "divergence_witness",
]

RULES = ("gauss-legendre", "adaptive-simpson")
TRANSFORMS = ("arctan", "truncated")


@dataclass(frozen=True)
class QuadratureSpec:
    rule: str = "gauss-legendre"
    nodes: int = 256
    transform: str = "arctan"
    X: float | None = None
    tol: float = 1e-13

    def __post_init__(self):
        if self.rule not in RULES:
            raise ValueError(f"unknown rule {self.rule!r}; expected one of {RULES}")
        if self.transform not in TRANSFORMS:
            raise ValueError(f"unknown transform {self.transform!r}; expected one of {TRANSFORMS}")
        if self.nodes < 2:
            raise ValueError("nodes must be >= 2")
        if self.transform == "truncated" and not (self.X is not None and self.X > 0):
            raise ValueError("truncated transform needs X > 0")


class QuadResult(float):
    """A float carrying an ``error`` estimate (difference of nested rules)."""

    error: float

    def __new__(cls, value, error):
        obj = super().__new__(cls, value)
        obj.error = float(error)
        return obj


@lru_cache(maxsize=32)
def _gl(n: int):
    x, w = np.polynomial.legendre.leggauss(n)
    x.flags.writeable = False
    w.flags.writeable = False
    return x, w


def _phi_integrand(f):
    def g(phi):
        c = np.cos(phi)
        return f(np.tan(phi)) / (c * c)

    return g


def _gl_interval(g, lo, hi, n):
    x, w = _gl(n)
    half, mid = 0.5 * (hi - lo), 0.5 * (hi + lo)
    vals = np.asarray(g(mid + half * x), dtype=float)
    if not np.all(np.isfinite(vals)):
        raise FloatingPointError("integrand produced non-finite samples")
    return half * float(np.dot(w, vals))


def _adaptive_simpson(g, lo, hi, tol, max_depth=50):
    def s(a, fa, b, fb):
        m = 0.5 * (a + b)
        fm = float(g(np.array([m]))[0])
        return m, fm, (b - a) / 6.0 * (fa + 4 * fm + fb)

    fa, fb = (float(v) for v in g(np.array([lo, hi])))
    m, fm, whole = s(lo, fa, hi, fb)
    total = 0.0
    err = 0.0
    # explicit stack, left-to-right: summation order is fixed
    stack = [(lo, fa, hi, fb, m, fm, whole, tol, 0)]
    while stack:
        a, fa, b, fb, m, fm, whole, eps, depth = stack.pop()
        lm, flm, left = s(a, fa, m, fm)
        rm, frm, right = s(m, fm, b, fb)
        if not all(math.isfinite(v) for v in (flm, frm)):
            raise FloatingPointError("integrand produced non-finite samples")
        delta = left + right - whole
        if depth >= max_depth or abs(delta) <= 15 * eps:
            total += left + right + delta / 15.0
            err += abs(delta) / 15.0
        else:
            stack.append((m, fm, b, fb, rm, frm, right, eps / 2, depth + 1))
            stack.append((a, fa, m, fm, lm, flm, left, eps / 2, depth + 1))
    return total, err


def integrate_line(f, spec: QuadratureSpec | None = None) -> QuadResult:
    """Integrate a vectorised ``f(x)`` over the real line (or ``[-X, X]``).

    Both transforms work in the angle ``phi = arctan(x)``; the truncated one
    just stops at ``arctan(X)``. For Gauss-Legendre the error estimate is the
    difference against the rule with half as many nodes.
    """
    spec = spec or QuadratureSpec()
    g = _phi_integrand(f)
    hi = math.pi / 2 if spec.transform == "arctan" else math.atan(spec.X)
    lo = -hi
    if spec.rule == "gauss-legendre":
        val = _gl_interval(g, lo, hi, spec.nodes)
        coarse = _gl_interval(g, lo, hi, max(2, spec.nodes // 2))
        return QuadResult(val, abs(val - coarse))
    # endpoint samples of the arctan map are singular; shave one ulp-scale margin
    if spec.transform == "arctan":
        lo, hi = np.nextafter(lo, 0.0), np.nextafter(hi, 0.0)
    val, err = _adaptive_simpson(g, lo, hi, spec.tol)
    return QuadResult(val, err)


def gamma(x: float) -> float:
    """Gamma function for ``x > 0`` (libm's ``tgamma``)."""
    if not x > 0:
        raise ValueError(f"gamma is only provided for x > 0, got {x}")
    return math.gamma(x)


@dataclass(frozen=True)
class GramMatrix:
    params: RomanovskiParams
    max_n: int
    entries: np.ndarray
    convergent_mask: np.ndarray

    def off_diagonal_relative(self) -> np.ndarray:
        """|G_mn| / sqrt(G_mm G_nn) on convergent off-diagonal pairs, nan elsewhere."""
        g = self.entries
        diag = np.diag(g)
        out = np.full_like(g, np.nan)
        for m in range(self.max_n + 1):
            for k in range(self.max_n + 1):
                if m != k and self.convergent_mask[m, k] and np.isfinite(diag[m]) and np.isfinite(diag[k]):
                    out[m, k] = abs(g[m, k]) / math.sqrt(diag[m] * diag[k])
        return out


def inner_product(params: RomanovskiParams, m: int, k: int, spec: QuadratureSpec | None = None) -> QuadResult:
    """Weighted integral of R_m R_k; symmetric in (m, k) down to the last bit."""
    m, k = min(m, k), max(m, k)
    rm = romanovski(params, m).poly
    rk = romanovski(params, k).poly
    return integrate_line(lambda x: weight(params, x) * rm.eval(x) * rk.eval(x), spec)


def gram(params: RomanovskiParams, max_n: int, spec: QuadratureSpec | None = None) -> GramMatrix:
    """Weighted inner products of R_0..R_max_n; divergent pairs are skipped (nan)."""
    spec = spec or QuadratureSpec()
    size = max_n + 1
    entries = np.full((size, size), np.nan)
    mask = np.zeros((size, size), dtype=bool)
    for m in range(size):
        for k in range(m, size):
            if not orthogonal_pair(params, m, k):
                continue
            val = inner_product(params, m, k, spec)
            entries[m, k] = entries[k, m] = float(val)
            mask[m, k] = mask[k, m] = True
    return GramMatrix(params, max_n, entries, mask)


def divergence_witness(params: RomanovskiParams, m: int, k: int, X1: float = 1e3, X2: float = 1e6, nodes: int = 4096):
    """Truncated inner products on ``[-X1, X1]`` and ``[-X2, X2]``.

    Returns ``(I1, I2, relative_change)``; a convergent integral barely moves,
    a divergent one keeps growing with the cutoff.
    """
    rm = romanovski(params, m).poly
    rk = romanovski(params, k).poly

    def f(x):
        return weight(params, x) * rm.eval(x) * rk.eval(x)

    i1 = float(integrate_line(f, QuadratureSpec(nodes=nodes, transform="truncated", X=X1)))
    i2 = float(integrate_line(f, QuadratureSpec(nodes=nodes, transform="truncated", X=X2)))
    scale = max(abs(i1), abs(i2), np.finfo(float).tiny)
    return i1, i2, abs(i2 - i1) / scale
