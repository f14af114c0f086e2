"""Finite Romanovski polynomials R_n^{(p,q)}.

Weight ``w(x) = (1+x^2)^(-p) exp(q arctan x)`` on the whole real line, and

    R_n = (1/w) d^n/dx^n [(1+x^2)^n w],

kept unnormalized exactly as the Rodrigues formula produces them.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .gaussian import GaussRational
from .hypergeq import HypergeqParams, master_coefficients, ode_residual
from .polycore import ExactPoly, QArctanForm, as_fraction, form_nth_deriv

__all__ = [
    "RomanovskiParams",
    "RomanovskiPoly",
    "romanovski",
    "weight",
    "orthogonal_pair",
    "norm_closed_q0",
    "romanovski_residual",
    "jacobi_phase_pair",
]


@dataclass(frozen=True)
class RomanovskiParams:
    p: Fraction
    q: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "p", as_fraction(self.p))
        object.__setattr__(self, "q", as_fraction(self.q))
        if self.p <= 0:
            raise ValueError(f"Romanovski parameter p must be positive, got {self.p}")

    @classmethod
    def from_scarf(cls, a, b) -> "RomanovskiParams":
        """The Scarf II dictionary ``p = a + 1/2``, ``q = -2b``."""
        return cls(as_fraction(a) + Fraction(1, 2), -2 * as_fraction(b))

    @property
    def hypergeq(self) -> HypergeqParams:
        return HypergeqParams.romanovski(self.p, self.q)


@dataclass(frozen=True)
class RomanovskiPoly:
    params: RomanovskiParams
    n: int
    poly: ExactPoly

    @property
    def degree_deficient(self) -> bool:
        return self.poly.degree < self.n

    def __call__(self, x):
        return self.poly.eval(x)


@lru_cache(maxsize=512)
def _rodrigues(p: Fraction, q: Fraction, n: int) -> ExactPoly:
    return form_nth_deriv(QArctanForm(ExactPoly.const(1), n - p, q), n).poly


def romanovski(params: RomanovskiParams, n: int) -> RomanovskiPoly:
    if n < 0:
        raise ValueError("n must be nonnegative")
    return RomanovskiPoly(params, n, _rodrigues(params.p, params.q, n))


def weight(params: RomanovskiParams, x):
    x = np.asarray(x, dtype=float)
    return np.power(1.0 + x * x, -float(params.p)) * np.exp(float(params.q) * np.arctan(x))


def orthogonal_pair(params: RomanovskiParams, m: int, mp: int) -> bool:
    """True iff the weighted product integral of R_m and R_mp converges: m + mp < 2p - 1."""
    return m + mp < 2 * params.p - 1


def romanovski_residual(params: RomanovskiParams, n: int, poly: ExactPoly | None = None) -> ExactPoly:
    """``(1+x^2) R'' + (2(1-p)x + q) R' - (n(n-1) + 2n(1-p)) R``; zero for a true R_n."""
    if poly is None:
        poly = romanovski(params, n).poly
    return ode_residual(params.hypergeq, poly, n)


def norm_closed_q0(a, n: int) -> float:
    """Squared norm of R_n^{(a+1/2, 0)} from its gamma-function closed form (n = 1, 2, 3)."""
    from .quadrature import gamma

    a = float(a)
    if n not in (1, 2, 3):
        raise ValueError("closed forms exist here for n = 1, 2, 3 only")
    if not a > n:
        raise ValueError(f"norm integral diverges unless a > {n} (got a = {a})")
    rpi = math.sqrt(math.pi)
    if n == 1:
        return (2 * a - 1) ** 2 * rpi * gamma(a - 1) / (2 * gamma(a + 0.5))
    if n == 2:
        return 2 * rpi * (a - 1) * gamma(a - 2) / gamma(a - 0.5) * (3 - 2 * a) ** 2
    return 3 * rpi * (a - 2) * gamma(a - 3) / gamma(a - 0.5) * (4 * a * a - 16 * a + 15) ** 2


def jacobi_phase_pair(params: RomanovskiParams, n: int):
    """Monic R_n coefficients next to those of ``(-i)^n J_n(i x)``.

    ``J_n`` is the monic solution for ``sigma = 1 - y^2``, ``tau = -2(1-p) y - i q``,
    i.e. the Jacobi equation with complex-conjugate indices. Substituting
    ``y = i x`` maps it onto the Romanovski equation, so the two coefficient
    lists must coincide exactly (Gaussian-rational equality).
    """
    p, q = params.p, params.q
    rom = master_coefficients(1, 0, 1, 2 * (1 - p), q, n)
    jac = master_coefficients(-1, 0, 1, -2 * (1 - p), GaussRational(0, -q), n)
    phase = GaussRational(0, -1) ** n
    mapped = [phase * GaussRational(0, 1) ** k * g for k, g in enumerate(jac)]
    return rom, mapped

