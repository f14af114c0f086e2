"""Angular functions of the Coulomb plus ``-c cot(theta)/r^2`` potential.

The polar equation turns into the Scarf II problem under ``theta = 2 arctan(e^z)``
(equivalently ``sinh z = -cot theta``), with

    l(l+1) = a(a+1) - b^2,    c = -b(2a+1),    m^2 = (a-n)^2.

Three ways of solving these constraints are offered (``parmts_2`` default:
a = b = l(l+1), n = l(l+1) - m). The c = 0 case links Romanovski polynomials
to associated Legendre functions.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import _accel
from ._accel import njit
from .hypergeq import rational_sqrt
from .polycore import ExactPoly, QArctanForm, as_fraction
from .quadrature import QuadratureSpec, integrate_line
from .romanovski import RomanovskiParams, romanovski
from .scarf import ScarfParams, wavefunction_form

__all__ = [
    "STRATEGIES",
    "AngularProblem",
    "AngularFunction",
    "SU11Labels",
    "theta_to_z",
    "z_to_theta",
    "solve_params",
    "angular_function",
    "su11_labels",
    "assoc_legendre",
    "legendre_bridge",
    "infinite_orthogonality",
    "infinite_orthogonality_relative",
    "BridgeReport",
    "coulomb_energy",
]

STRATEGIES = ("parmts_2", "set_1", "set_2")


def theta_to_z(theta):
    theta = np.asarray(theta, dtype=float)
    if np.any((theta <= 0) | (theta >= math.pi)):
        raise ValueError("theta must lie in the open interval (0, pi)")
    return np.arcsinh(-np.cos(theta) / np.sin(theta))


def z_to_theta(z):
    """``2 arctan(e^z)``, evaluated as arccot(-sinh z) to stay accurate for large |z|."""
    z = np.asarray(z, dtype=float)
    return np.arctan2(1.0, -np.sinh(z))


@dataclass(frozen=True)
class AngularProblem:
    l: object
    m: object
    c: object
    a: object
    b: object
    n: int
    strategy: str

    def constraint_residuals(self) -> tuple[float, float, float]:
        """Residuals of the three coupling equations (exact zero for rational inputs)."""
        l, m, c, a, b = self.l, self.m, self.c, self.a, self.b
        n = self.n
        return (
            l * (l + 1) + (b * b - a * (a + 1)),
            c + b * (2 * a + 1),
            m * m - (a - n) ** 2,
        )


def _exact_or_float(v):
    if isinstance(v, (int, Fraction)) and not isinstance(v, bool):
        return Fraction(v)
    if isinstance(v, str):
        return as_fraction(v)
    return float(v)


def solve_params(strategy: str = "parmts_2", *, l=None, m=None, c=None, n=None) -> AngularProblem:
    """Derive (a, b, n) for one of the three strategies.

    * ``parmts_2``: integer ``l`` and ``m`` -> a = b = l(l+1), n = a - m, c = -b(2a+1)
    * ``set_1``: ``l``, ``c`` (and ``n``, default 0) -> a, b from the first two
      equations, m = a - n
    * ``set_2``: ``m``, ``n``, ``c`` -> a = m + n, b = -c/(2a+1), l from the first
      equation (generally non-integer)
    """
    if strategy == "parmts_2":
        if l is None or m is None:
            raise ValueError("parmts_2 needs l and m")
        l, m = _exact_or_float(l), _exact_or_float(m)
        if not (isinstance(l, Fraction) and l.denominator == 1 and l >= 0):
            raise ValueError(f"parmts_2 needs a nonnegative integer l, got {l}")
        a = l * (l + 1)
        nn = a - m
        if m < 0:
            raise ValueError(f"m must be nonnegative, got {m}")
        if not (isinstance(nn, Fraction) and nn.denominator == 1 and nn >= 0):
            raise ValueError(f"n = l(l+1) - m = {nn} must be a nonnegative integer")
        b = a
        return AngularProblem(l, m, -b * (2 * a + 1), a, b, int(nn), strategy)
    if strategy == "set_1":
        if l is None or c is None:
            raise ValueError("set_1 needs l and c")
        l, c = _exact_or_float(l), _exact_or_float(c)
        n = 0 if n is None else int(n)
        if c == 0 and isinstance(l, Fraction):
            # the inner root collapses: a = l exactly
            a, b, c = l, Fraction(0), Fraction(0)
        else:
            l, c = float(l), float(c)
            h2 = (l + 0.5) ** 2
            root = math.sqrt(h2 * h2 + c * c)
            a = math.sqrt(0.5 * (h2 + root)) - 0.5
            b = -c / (2 * a + 1)
        m = a - n
        if m < 0:
            raise ValueError(f"inconsistent constraints: m = a - n = {m} is negative")
        return AngularProblem(l, m, c, a, b, n, strategy)
    if strategy == "set_2":
        if m is None or n is None or c is None:
            raise ValueError("set_2 needs m, n and c")
        m, c = _exact_or_float(m), _exact_or_float(c)
        n = int(n)
        a = m + n
        b = -c / (2 * a + 1)
        radicand = Fraction(1, 4) + a * (a + 1) - b * b if isinstance(b, Fraction) else 0.25 + a * (a + 1) - b * b
        if radicand < 0:
            raise ValueError(f"negative radicand {float(radicand)} for l")
        root = rational_sqrt(radicand) if isinstance(radicand, Fraction) else None
        l = root - Fraction(1, 2) if root is not None else math.sqrt(radicand) - 0.5
        return AngularProblem(l, m, c, a, b, n, strategy)
    raise ValueError(f"unknown strategy {strategy!r}; expected one of {STRATEGIES}")


@dataclass(frozen=True)
class SU11Labels:
    j: object
    mprime: object
    epsilon: object

    def energy_consistent(self, problem: AngularProblem) -> bool:
        return -(self.j - Fraction(1, 2)) ** 2 == -((problem.a - problem.n) ** 2)


def su11_labels(problem: AngularProblem) -> SU11Labels:
    mprime = problem.a + Fraction(1, 2)
    j = mprime - problem.n
    return SU11Labels(j, mprime, -((j - Fraction(1, 2)) ** 2))


def _to_fraction(v) -> Fraction:
    # floats are dyadic rationals; convert exactly
    return v if isinstance(v, Fraction) else Fraction(v)


@dataclass(frozen=True)
class AngularFunction:
    """Theta(theta) = g_n(-cot theta) and Z(theta, phi) = Theta(theta) e^{i m phi}.

    ``normalization`` makes ``int_0^pi Theta^2 sin(theta) d theta = 1``; the
    overall phase is not meaningful.
    """

    problem: AngularProblem
    form: QArctanForm
    normalization: float

    def theta(self, theta):
        theta = np.asarray(theta, dtype=float)
        x = -np.cos(theta) / np.sin(theta)
        return self.normalization * self.form.evaluate(x)

    def __call__(self, theta, phi=0.0):
        return self.theta(theta) * np.exp(1j * float(self.problem.m) * np.asarray(phi, dtype=float))

    def abs_z(self, theta, phi=0.0):
        return np.abs(self(theta, phi))


def angular_function(problem: AngularProblem, nodes: int = 400) -> AngularFunction:
    if problem.n < 0:
        raise ValueError("n must be a nonnegative integer")
    a, b = _to_fraction(problem.a), _to_fraction(problem.b)
    if a == 0:
        if problem.n != 0:
            raise ValueError("a = 0 admits only n = 0")
        form = QArctanForm(ExactPoly.const(1), Fraction(0), -b)
    else:
        form = wavefunction_form(ScarfParams(a, b), problem.n)
    unit = AngularFunction(problem, form, 1.0)
    xs, ws = np.polynomial.legendre.leggauss(nodes)
    th = 0.5 * math.pi * (xs + 1)
    norm2 = 0.5 * math.pi * float(np.dot(ws, unit.theta(th) ** 2 * np.sin(th)))
    return AngularFunction(problem, form, 1.0 / math.sqrt(norm2))


@njit
def _assoc_legendre_kernel(l, m, x):
    out = np.empty(x.shape[0])
    for i in range(x.shape[0]):
        xi = x[i]
        s = math.sqrt(max(0.0, 1.0 - xi * xi))
        pmm = 1.0
        fact = 1.0
        for _ in range(m):
            pmm *= fact * s
            fact += 2.0
        if l == m:
            out[i] = pmm
            continue
        pm1 = xi * (2 * m + 1) * pmm
        if l == m + 1:
            out[i] = pm1
            continue
        p2, p1 = pmm, pm1
        for ll in range(m + 2, l + 1):
            p = (xi * (2 * ll - 1) * p1 - (ll + m - 1) * p2) / (ll - m)
            p2, p1 = p1, p
        out[i] = p1
    return out


def _assoc_legendre_numpy(l, m, x):
    # same operation order as the kernel, vectorised over x
    s = np.sqrt(np.maximum(0.0, 1.0 - x * x))
    pmm = np.ones_like(x)
    fact = 1.0
    for _ in range(m):
        pmm = pmm * (fact * s)
        fact += 2.0
    if l == m:
        return pmm
    p2, p1 = pmm, x * (2 * m + 1) * pmm
    for ll in range(m + 2, l + 1):
        p2, p1 = p1, (x * (2 * ll - 1) * p1 - (ll + m - 1) * p2) / (ll - m)
    return p1


def assoc_legendre(l: int, m: int, x, backend: str | None = None):
    """P_l^m(x) without the Condon-Shortley phase, by upward recurrence in l."""
    if not (0 <= m <= l):
        raise ValueError("need 0 <= m <= l")
    x = np.ascontiguousarray(np.atleast_1d(np.asarray(x, dtype=float)))
    if backend is None:
        backend = "numba" if _accel.HAVE_NUMBA else "numpy"
    if backend == "numba":
        if not _accel.HAVE_NUMBA:
            raise RuntimeError("numba backend requested but numba is unavailable or disabled")
        return _assoc_legendre_kernel(int(l), int(m), x)
    if backend == "numpy":
        return _assoc_legendre_numpy(int(l), int(m), x)
    raise ValueError(f"unknown backend {backend!r}")


@dataclass(frozen=True)
class BridgeReport:
    l: int
    m: int
    theta: np.ndarray
    legendre: np.ndarray
    romanovski: np.ndarray
    ratio: np.ndarray

    @property
    def relative_spread(self) -> float:
        r = np.abs(self.ratio)
        return float(np.std(r) / abs(np.mean(r)))


def _bridge_rhs(l: int, m: int, theta):
    R = romanovski(RomanovskiParams(Fraction(l) + Fraction(1, 2), 0), l - m).poly
    cot = np.cos(theta) / np.sin(theta)
    return np.power(1.0 + cot * cot, -0.5 * l) * R.eval(-cot)


def legendre_bridge(l: int, m: int, margin: float = 0.1, points: int = 201) -> BridgeReport:
    """Compare P_l^m(cos theta) with (1+cot^2)^(-l/2) R_{l-m}^{(l+1/2,0)}(-cot theta)."""
    if not (0 <= m <= l):
        raise ValueError("need integers 0 <= m <= l")
    theta = np.linspace(margin, math.pi - margin, points)
    lhs = assoc_legendre(l, m, np.cos(theta))
    rhs = _bridge_rhs(l, m, theta)
    # both sides share their zeros; compare where the Legendre side is not tiny
    keep = np.abs(lhs) > 1e-8 * np.max(np.abs(lhs))
    return BridgeReport(l, m, theta[keep], lhs[keep], rhs[keep], lhs[keep] / rhs[keep])


def infinite_orthogonality(l: int, lp: int, m: int, spec: QuadratureSpec | None = None) -> float:
    """int sqrt(w_l) R_{l-m} sqrt(w_l') R_{l'-m} dx / (1+x^2), weights w^{(l+1/2, 0)}."""
    if l - m < 0 or lp - m < 0:
        raise ValueError("need l - m and l' - m nonnegative")
    R1 = romanovski(RomanovskiParams(Fraction(l) + Fraction(1, 2), 0), l - m).poly
    R2 = romanovski(RomanovskiParams(Fraction(lp) + Fraction(1, 2), 0), lp - m).poly
    expo = -0.5 * (l + 0.5) - 0.5 * (lp + 0.5) - 1.0

    def f(x):
        return np.power(1.0 + x * x, expo) * R1.eval(x) * R2.eval(x)

    return float(integrate_line(f, spec))


def coulomb_energy(n_r: int, l) -> float:
    """-1/(2 (n_r + l + 1)^2) in units Z = e = mu = hbar = 1."""
    if n_r < 0:
        raise ValueError("n_r must be nonnegative")
    if not float(l) > -1:
        raise ValueError("l must exceed -1")
    return -0.5 / (n_r + float(l) + 1) ** 2


def infinite_orthogonality_relative(l: int, lp: int, m: int, spec: QuadratureSpec | None = None) -> float:
    """|I(l, l', m)| / sqrt(I(l, l, m) I(l', l', m))."""
    off = infinite_orthogonality(l, lp, m, spec)
    return abs(off) / math.sqrt(infinite_orthogonality(l, l, m, spec) * infinite_orthogonality(lp, lp, m, spec))
