"""Trigonometric (I) and hyperbolic (II) Scarf potentials.

Units hbar = 2m = 1, Hamiltonian ``-d^2/dz^2 + v(z)``. Scarf II bound states are
built from Romanovski polynomials in ``x = sinh(alpha z)``:

    psi_n(z) = (1+x^2)^(-A/2) exp(-B arctan x) R_n^{(A+1/2, -2B)}(x),
    A = a/alpha, B = b/alpha,  e_n = a^2 - (a - n alpha)^2,  n < A.

Everything exact runs at the rescaled (A, B) with unit range; energies scale
back by alpha^2.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .hypergeq import HypergeqParams, rodrigues_poly
from .polycore import ONE_PLUS_X2, ExactPoly, QArctanForm, as_fraction
from .quadrature import QuadratureSpec, integrate_line
from .romanovski import RomanovskiParams, romanovski

__all__ = [
    "ScarfParams",
    "EnergyLevel",
    "WaveFunction",
    "JacobiWaveFunction",
    "UnboundStateError",
    "potential_I",
    "potential_II",
    "spectrum_I",
    "spectrum_II",
    "bound_state_count",
    "wavefunction_I",
    "wavefunction_II",
    "wavefunction_form",
    "susy_groundstate",
    "superpotential",
    "schrodinger_residual_II",
    "node_count",
    "overlap_matrix_II",
]


class UnboundStateError(ValueError):
    pass


@dataclass(frozen=True)
class ScarfParams:
    a: Fraction
    b: Fraction = Fraction(0)
    alpha: Fraction = Fraction(1)

    def __post_init__(self):
        for name in ("a", "b", "alpha"):
            object.__setattr__(self, name, as_fraction(getattr(self, name)))
        if self.a <= 0:
            raise ValueError(f"a must be positive, got {self.a}")
        if self.alpha <= 0:
            raise ValueError(f"alpha must be positive, got {self.alpha}")

    @property
    def A(self) -> Fraction:
        return self.a / self.alpha

    @property
    def B(self) -> Fraction:
        return self.b / self.alpha

    @property
    def romanovski_params(self) -> RomanovskiParams:
        return RomanovskiParams.from_scarf(self.A, self.B)

    @property
    def gamma(self) -> Fraction:
        """Scarf I Jacobi index (a - b)/alpha."""
        return (self.a - self.b) / self.alpha

    @property
    def delta(self) -> Fraction:
        return (self.a + self.b) / self.alpha


@dataclass(frozen=True)
class EnergyLevel:
    n: int
    epsilon: Fraction
    e: Fraction


def potential_II(params: ScarfParams, z):
    a, b, al = float(params.a), float(params.b), float(params.alpha)
    z = np.asarray(z, dtype=float)
    sech = 1.0 / np.cosh(al * z)
    return a * a + (b * b - a * a - a * al) * sech**2 + b * (2 * a + al) * sech * np.tanh(al * z)


def potential_I(params: ScarfParams, z):
    """``-a^2 + (a^2 + b^2 - a alpha) sec^2 - b (2a - alpha) tan sec`` on ``|alpha z| < pi/2``.

    The tan*sec coefficient is the one for which the Jacobi states of
    :func:`wavefunction_I` are eigenfunctions (superpotential a tan - b sec).
    """
    a, b, al = float(params.a), float(params.b), float(params.alpha)
    z = np.asarray(z, dtype=float)
    if np.any(np.abs(al * z) >= math.pi / 2):
        raise ValueError("Scarf I is defined for |alpha z| < pi/2")
    sec = 1.0 / np.cos(al * z)
    return -a * a + (a * a + b * b - a * al) * sec**2 - b * (2 * a - al) * np.tan(al * z) * sec


def superpotential(params: ScarfParams, z):
    a, b, al = float(params.a), float(params.b), float(params.alpha)
    z = np.asarray(z, dtype=float)
    return a * np.tanh(al * z) + b / np.cosh(al * z)


def bound_state_count(params: ScarfParams) -> int:
    """Number of integers n >= 0 with n < a/alpha."""
    A = params.A
    return math.ceil(A) if A.denominator != 1 else int(A)


def spectrum_II(params: ScarfParams) -> list[EnergyLevel]:
    a, al = params.a, params.alpha
    out = []
    for n in range(bound_state_count(params)):
        eps = -((a - n * al) ** 2)
        out.append(EnergyLevel(n, eps, eps + a * a))
    return out


def spectrum_I(params: ScarfParams, n_max: int) -> list[EnergyLevel]:
    a, al = params.a, params.alpha
    out = []
    for n in range(n_max + 1):
        eps = (a + n * al) ** 2
        out.append(EnergyLevel(n, eps, eps - a * a))
    return out


@dataclass(frozen=True)
class WaveFunction:
    """Scarf II bound state; ``form`` lives in ``x = sinh(alpha z)``."""

    params: ScarfParams
    level: EnergyLevel
    form: QArctanForm
    normalization: float

    @property
    def polynomial(self) -> ExactPoly:
        return self.form.poly

    def of_x(self, x):
        return self.normalization * self.form.evaluate(x)

    def __call__(self, z):
        z = np.asarray(z, dtype=float)
        return self.of_x(np.sinh(float(self.params.alpha) * z))


def wavefunction_form(params: ScarfParams, n: int) -> QArctanForm:
    """Unnormalised g_n(x) = (1+x^2)^(-A/2) e^(-B arctan x) R_n(x); no bound-state check."""
    R = romanovski(params.romanovski_params, n).poly
    return QArctanForm(R, -params.A / 2, -params.B)


def wavefunction_II(params: ScarfParams, n: int, spec: QuadratureSpec | None = None) -> WaveFunction:
    if n < 0:
        raise ValueError("n must be nonnegative")
    if not n < params.A:
        raise UnboundStateError(f"n = {n} is not a bound state: need n < a/alpha = {params.A}")
    form = wavefunction_form(params, n)
    wf = form.poly.to_float()
    rp = params.romanovski_params
    p, q = float(rp.p), float(rp.q)

    # int psi^2 dz = int w^{(A+1/2, -2B)} R_n^2 dx / alpha
    def integrand(x):
        return np.power(1.0 + x * x, -p) * np.exp(q * np.arctan(x)) * np.polynomial.polynomial.polyval(x, wf) ** 2

    norm2 = float(integrate_line(integrand, spec)) / float(params.alpha)
    sign = 1.0 if form.poly.leading > 0 else -1.0
    energy = next(lv for lv in spectrum_II(params) if lv.n == n)
    return WaveFunction(params, energy, form, sign / math.sqrt(norm2))


def susy_groundstate(params: ScarfParams, z):
    """``exp(-int_0^z U)`` with ``U = a tanh(alpha z) + b sech(alpha z)``.

    Antiderivative: ``(a/alpha) ln cosh(alpha z) + (2b/alpha) arctan(tanh(alpha z / 2))``.
    """
    a, b, al = float(params.a), float(params.b), float(params.alpha)
    z = np.asarray(z, dtype=float)
    u = al * z
    # ln cosh without overflow
    lncosh = np.abs(u) + np.log1p(np.exp(-2 * np.abs(u))) - math.log(2.0)
    return np.exp(-(a / al) * lncosh - (2 * b / al) * np.arctan(np.tanh(u / 2)))


def schrodinger_residual_II(params: ScarfParams, n: int, epsilon=None) -> QArctanForm:
    """Exact residual of the Schrodinger equation in ``x = sinh z`` applied to g_n.

    (1+x^2) g'' + x g' + [(A(A+1) - B^2)/(1+x^2) - B(2A+1) x/(1+x^2) + eps] g

    in reduced units (A, B, eps/alpha^2). ``epsilon`` overrides eps_n (in
    physical units) for negative controls. Returns a QArctanForm whose poly is
    identically zero for a true eigenpair.
    """
    if epsilon is None:
        epsilon = -((params.a - n * params.alpha) ** 2)
    eps = as_fraction(epsilon) / params.alpha**2
    A, B = params.A, params.B
    g0 = wavefunction_form(params, n)
    g1 = g0.deriv()
    g2 = g1.deriv()
    s = g0.power
    x = ExactPoly.x()
    P0, P1, P2 = g0.poly, g1.poly, g2.poly  # powers s, s-1, s-2
    total = (
        P2  # (1+x^2) * P2 (1+x^2)^(s-2)
        + x * P1
        + (P0 * ONE_PLUS_X2).scale(eps)
        + P0 * ExactPoly((A * (A + 1) - B * B, -B * (2 * A + 1)))
    )
    return QArctanForm(total, s - 1, g0.arc)


def node_count(params: ScarfParams, n: int, points: int = 20001) -> int:
    """Sign changes of R_n sampled on x = tan(phi), phi uniform in (-pi/2, pi/2)."""
    R = romanovski(params.romanovski_params, n).poly
    phi = np.linspace(-math.pi / 2, math.pi / 2, points + 2)[1:-1]
    v = R.eval(np.tan(phi))
    s = np.sign(v[v != 0])
    return int(np.count_nonzero(s[1:] != s[:-1]))


def overlap_matrix_II(params: ScarfParams, spec: QuadratureSpec | None = None) -> np.ndarray:
    """``int psi_n psi_m dz`` over all bound pairs, by quadrature in x."""
    states = [wavefunction_II(params, n, spec) for n in range(bound_state_count(params))]
    al = float(params.alpha)
    k = len(states)
    out = np.empty((k, k))
    for i in range(k):
        for j in range(i, k):
            si, sj = states[i], states[j]

            def f(x, si=si, sj=sj):
                return si.of_x(x) * sj.of_x(x) / np.sqrt(1.0 + x * x) / al

            out[i, j] = out[j, i] = float(integrate_line(f, spec))
    return out


@dataclass(frozen=True)
class JacobiWaveFunction:
    """Scarf I bound state ``sqrt((1-x)^gamma (1+x)^delta) P_n(x)``, ``x = sin(alpha z)``."""

    params: ScarfParams
    level: EnergyLevel
    jacobi: ExactPoly
    normalization: float

    def of_x(self, x):
        x = np.asarray(x, dtype=float)
        g, d = float(self.params.gamma), float(self.params.delta)
        return self.normalization * np.sqrt((1 - x) ** g * (1 + x) ** d) * self.jacobi.eval(x)

    def __call__(self, z):
        z = np.asarray(z, dtype=float)
        return self.of_x(np.sin(float(self.params.alpha) * z))


def wavefunction_I(params: ScarfParams, n: int, nodes: int = 400) -> JacobiWaveFunction:
    g, d = params.gamma, params.delta
    if not (g > 0 and d > 0):
        raise ValueError(f"Scarf I state not normalizable: need gamma, delta > 0 (got {g}, {d})")
    jac = HypergeqParams.jacobi(g - Fraction(1, 2), d - Fraction(1, 2))
    P = rodrigues_poly(jac, n=n).poly
    level = spectrum_I(params, n)[-1]
    unnorm = JacobiWaveFunction(params, level, P, 1.0)
    half = math.pi / (2 * float(params.alpha))
    xs, ws = np.polynomial.legendre.leggauss(nodes)
    norm2 = half * float(np.dot(ws, unnorm(half * xs) ** 2))
    return JacobiWaveFunction(params, level, P, 1.0 / math.sqrt(norm2))
