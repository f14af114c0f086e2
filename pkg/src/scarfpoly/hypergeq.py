"""Polynomial solutions of the hypergeometric-type equation

    sigma(x) y'' + tau(x) y' - lambda_n y = 0,
    sigma = a x^2 + b x + c,  tau = d x + e,  lambda_n = n(n-1) a + n d.

Two constructions are provided and cross-checked against each other:

* :func:`rodrigues_poly` -- ``(1/w) d^n/dx^n (sigma^n w)`` with the Pearson weight
  ``w``, differentiated exactly inside a closed family;
* :func:`monic_master` -- the monic solution as a sum of terminating Gauss
  series, evaluated in Gaussian-rational arithmetic.

They are related by ``rodrigues = leading_product * monic``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, isqrt

import numpy as np

from .gaussian import GaussRational
from .polycore import ExactPoly, QArctanForm, as_fraction, form_nth_deriv

__all__ = [
    "HypergeqParams",
    "ClosedWeight",
    "CanonicalFamily",
    "RodriguesPoly",
    "NoExactPath",
    "DegenerateGaussParameters",
    "ConstructionRefused",
    "lambda_n",
    "pearson_weight",
    "rodrigues_poly",
    "monic_master",
    "master_coefficients",
    "leading_product",
    "classify",
    "ode_residual",
    "canonical_params",
]


class NoExactPath(ValueError):
    """The weight kind admits no exact differentiation route for these parameters."""


class DegenerateGaussParameters(ValueError):
    """A Gauss-series denominator (or prefactor) vanishes."""


class ConstructionRefused(ValueError):
    """Polynomial construction deliberately unsupported (Bessel family)."""


def rational_sqrt(v: Fraction) -> Fraction | None:
    """Exact square root of a nonnegative rational, or None if irrational."""
    v = as_fraction(v)
    if v < 0:
        return None
    rn, rd = isqrt(v.numerator), isqrt(v.denominator)
    if rn * rn == v.numerator and rd * rd == v.denominator:
        return Fraction(rn, rd)
    return None


@dataclass(frozen=True)
class HypergeqParams:
    a: Fraction
    b: Fraction
    c: Fraction
    d: Fraction
    e: Fraction

    def __post_init__(self):
        for name in "abcde":
            object.__setattr__(self, name, as_fraction(getattr(self, name)))
        if self.a == 0 and self.b == 0 and self.c == 0:
            raise ValueError("sigma(x) = a x^2 + b x + c vanishes identically")

    @classmethod
    def romanovski(cls, p, q) -> "HypergeqParams":
        p = as_fraction(p)
        return cls(1, 0, 1, 2 * (1 - p), q)

    @classmethod
    def jacobi(cls, gamma, delta) -> "HypergeqParams":
        g, dl = as_fraction(gamma), as_fraction(delta)
        return cls(-1, 0, 1, -g - dl - 2, -g + dl)

    @classmethod
    def laguerre(cls, alpha) -> "HypergeqParams":
        return cls(0, 1, 0, -1, as_fraction(alpha) + 1)

    @classmethod
    def hermite(cls) -> "HypergeqParams":
        return cls(0, 0, 1, -2, 0)

    @classmethod
    def bessel(cls, alpha, beta) -> "HypergeqParams":
        return cls(1, 0, 0, as_fraction(alpha) + 2, beta)

    @property
    def sigma(self) -> ExactPoly:
        return ExactPoly((self.c, self.b, self.a))

    @property
    def tau(self) -> ExactPoly:
        return ExactPoly((self.e, self.d))

    @property
    def discriminant(self) -> Fraction:
        return self.b * self.b - 4 * self.a * self.c

    def lambda_n(self, n: int) -> Fraction:
        return lambda_n(self, n)

    def as_tuple(self):
        return (self.a, self.b, self.c, self.d, self.e)


def lambda_n(params: HypergeqParams, n: int) -> Fraction:
    if n < 0:
        raise ValueError("n must be nonnegative")
    return n * (n - 1) * params.a + n * params.d


def ode_residual(params: HypergeqParams, y: ExactPoly, n: int) -> ExactPoly:
    """``sigma y'' + tau y' - lambda_n y`` as an exact polynomial."""
    return params.sigma * y.deriv(2) + params.tau * y.deriv() - y.scale(lambda_n(params, n))


# ---------------------------------------------------------------------------
# Pearson weights


def _num(v):
    """Fraction if exact, else float; numbers printed in reports stay readable."""
    return v if isinstance(v, Fraction) else float(v)


@dataclass(frozen=True)
class ClosedWeight:
    """Closed-form solution of ``(sigma w)' = tau w``.

    ``kind`` is one of ``two-linear-factors``, ``repeated-factor``,
    ``irreducible-quadratic``, ``exponential-limit``. ``data`` holds the
    kind-specific constants (Fractions where exact, floats where the roots of
    sigma are irrational):

    * two-linear-factors: ``roots=(r1, r2)``, ``exponents=(A, B)``;
      ``w = |x-r1|^A |x-r2|^B``
    * repeated-factor: ``root``, ``exponent``, ``recip``;
      ``w = |x-r|^A exp(-recip/(x-r))``
    * irreducible-quadratic: ``shift h``, ``width k``, ``power s``, ``arc t``;
      ``w = ((x+h)^2 + k^2)^s exp(t arctan((x+h)/k))``
    * exponential-limit (a = 0): optional ``root``/``exponent`` and
      ``exp_poly`` (coefficients of the polynomial exponent E(x));
      ``w = |x-r|^A exp(E(x))``
    """

    params: HypergeqParams
    kind: str
    data: dict = field(default_factory=dict)

    def __call__(self, x):
        return self.evaluate(x)

    def evaluate(self, x):
        x = np.asarray(x, dtype=float)
        return self._eval(x, np)

    def evaluate_mp(self, x):
        """High-precision scalar evaluation through mpmath (verification only)."""
        import mpmath

        return self._eval(mpmath.mpf(x), _MpLib(mpmath))

    def _eval(self, x, lib):
        d = self.data
        f = float if lib is np else lib.num
        if self.kind == "two-linear-factors":
            (r1, r2), (A, B) = d["roots"], d["exponents"]
            return lib.power(lib.abs(x - f(r1)), f(A)) * lib.power(lib.abs(x - f(r2)), f(B))
        if self.kind == "repeated-factor":
            r, A, C = f(d["root"]), f(d["exponent"]), f(d["recip"])
            return lib.power(lib.abs(x - r), A) * lib.exp(-C / (x - r))
        if self.kind == "irreducible-quadratic":
            h, k, s, t = (f(d[key]) for key in ("shift", "width", "power", "arc"))
            y = (x + h) / k
            return lib.power((x + h) * (x + h) + k * k, s) * lib.exp(t * lib.arctan(y))
        if self.kind == "exponential-limit":
            expo = 0
            for j, cj in enumerate(d["exp_poly"]):
                expo = expo + f(cj) * x**j
            out = lib.exp(expo)
            if d.get("root") is not None:
                out = out * lib.power(lib.abs(x - f(d["root"])), f(d["exponent"]))
            return out
        raise AssertionError(self.kind)

    def is_exact(self) -> bool:
        return all(isinstance(v, Fraction) for v in _flatten(self.data.values()))


def _flatten(vals):
    for v in vals:
        if isinstance(v, (tuple, list)):
            yield from _flatten(v)
        elif v is not None:
            yield v


class _MpLib:
    """numpy-ish facade over mpmath used by ClosedWeight.evaluate_mp."""

    def __init__(self, mp):
        self.mp = mp

    def num(self, v):
        if isinstance(v, Fraction):
            return self.mp.mpf(v.numerator) / v.denominator
        return self.mp.mpf(v)

    def power(self, x, y):
        return self.mp.power(x, y)

    def abs(self, x):
        return self.mp.fabs(x)

    def exp(self, x):
        return self.mp.exp(x)

    def arctan(self, x):
        return self.mp.atan(x)


def _sqrt_num(v: Fraction):
    r = rational_sqrt(v)
    return r if r is not None else math.sqrt(v)


def pearson_weight(params: HypergeqParams) -> ClosedWeight:
    """Integrate ``w'/w = ((d-2a) x + (e-b)) / sigma`` in closed form."""
    a, b, c, d, e = params.as_tuple()
    u, v = d - 2 * a, e - b  # numerator u x + v
    if a != 0:
        D = params.discriminant
        if D > 0:
            sq = _sqrt_num(D)
            r1 = (-b - sq) / (2 * a)
            r2 = (-b + sq) / (2 * a)
            if r1 > r2:
                r1, r2 = r2, r1
            A = (u * r1 + v) / (a * (r1 - r2))
            B = (u * r2 + v) / (a * (r2 - r1))
            data = {"roots": (_num(r1), _num(r2)), "exponents": (_num(A), _num(B))}
            return ClosedWeight(params, "two-linear-factors", data)
        if D == 0:
            r = -b / (2 * a)
            data = {"root": r, "exponent": u / a, "recip": (u * r + v) / a}
            return ClosedWeight(params, "repeated-factor", data)
        h = b / (2 * a)
        k = _sqrt_num(-D / (4 * a * a))
        data = {
            "shift": h,
            "width": _num(k),
            "power": u / (2 * a),
            "arc": _num((v - u * h) / (a * k)),
        }
        return ClosedWeight(params, "irreducible-quadratic", data)
    if b != 0:
        r = -c / b
        data = {"root": r, "exponent": (v - u * c / b) / b, "exp_poly": (Fraction(0), u / b)}
        return ClosedWeight(params, "exponential-limit", data)
    data = {"root": None, "exponent": None, "exp_poly": (Fraction(0), v / c, u / (2 * c))}
    return ClosedWeight(params, "exponential-limit", data)


# ---------------------------------------------------------------------------
# Rodrigues construction


@dataclass(frozen=True)
class _RootPowerForm:
    """``P(x) * prod (x - r_i)^alpha_i * exp(E(x))`` with polynomial ``E'``."""

    poly: ExactPoly
    roots: tuple
    exps: tuple
    dexpo: ExactPoly

    def deriv(self) -> "_RootPowerForm":
        lin = [ExactPoly((-r, 1)) for r in self.roots]
        prod = ExactPoly.const(1)
        for L in lin:
            prod = prod * L
        p = self.poly
        out = p.deriv() * prod + self.dexpo * p * prod
        for i, alpha in enumerate(self.exps):
            others = ExactPoly.const(1)
            for j, L in enumerate(lin):
                if j != i:
                    others = others * L
            out = out + (p * others).scale(alpha)
        return _RootPowerForm(out, self.roots, tuple(x - 1 for x in self.exps), self.dexpo)


@dataclass(frozen=True)
class RodriguesPoly:
    poly: ExactPoly
    n: int

    @property
    def degree(self) -> int:
        return self.poly.degree

    @property
    def degree_deficient(self) -> bool:
        return self.poly.degree < self.n


def rodrigues_poly(params: HypergeqParams, weight: ClosedWeight | None = None, n: int = 0) -> RodriguesPoly:
    """``(1/w) d^n/dx^n (sigma^n w)``, exactly.

    Degree collapse (vanishing :func:`leading_product`) is not an error; the
    returned polynomial simply has degree below ``n``.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if weight is None:
        weight = pearson_weight(params)
    elif weight.params != params:
        raise ValueError("weight was built for a different parameter tuple")
    if classify(params).tag == "Bessel":
        raise ConstructionRefused(
            "Bessel-type tuple: these polynomials are not orthogonal on a real interval; construction is not supported"
        )
    if not weight.is_exact():
        raise NoExactPath(f"{weight.kind} weight has irrational constants {weight.data}; no exact Rodrigues path")
    a, b, c = params.a, params.b, params.c
    dd = weight.data
    kind = weight.kind
    if kind == "irreducible-quadratic":
        h, k = dd["shift"], dd["width"]
        f = QArctanForm(ExactPoly.const(1), n + dd["power"], dd["arc"])
        core = form_nth_deriv(f, n).poly
        # y = (x + h)/k ; d/dx = (1/k) d/dy ; sigma = a k^2 (1 + y^2)
        poly = core.compose_affine(1 / k, h / k).scale((a * k) ** n)
        return RodriguesPoly(poly, n)
    if kind == "two-linear-factors":
        roots, exps = dd["roots"], tuple(x + n for x in dd["exponents"])
        lead = a**n
        dexpo = ExactPoly()
    elif kind == "exponential-limit" and dd["root"] is not None:
        roots, exps = (dd["root"],), (dd["exponent"] + n,)
        lead = b**n
        dexpo = ExactPoly(dd["exp_poly"]).deriv()
    elif kind == "exponential-limit":
        roots, exps = (), ()
        lead = c**n
        dexpo = ExactPoly(dd["exp_poly"]).deriv()
    else:
        raise NoExactPath(f"no exact differentiation path for weight kind {kind!r}")
    f = _RootPowerForm(ExactPoly.const(1), tuple(roots), exps, dexpo)
    for _ in range(n):
        f = f.deriv()
    return RodriguesPoly(f.poly.scale(lead), n)


def leading_product(params: HypergeqParams, n: int) -> Fraction:
    """``prod_{k=1..n} (d + (n+k-2) a)``, the x^n coefficient of the Rodrigues polynomial."""
    out = Fraction(1)
    for k in range(1, n + 1):
        out *= params.d + (n + k - 2) * params.a
    return out


# ---------------------------------------------------------------------------
# Master formula


def _gauss_sqrt(D: Fraction) -> GaussRational:
    if D >= 0:
        r = rational_sqrt(D)
        if r is not None:
            return GaussRational(r)
    else:
        r = rational_sqrt(-D)
        if r is not None:
            return GaussRational(0, r)
    raise NoExactPath(f"sqrt(b^2 - 4ac) = sqrt({D}) is irrational; the master formula needs it in Q(i)")


def _terminating_2f1(m: int, beta, gamma, z, *, k: int, n: int):
    """``2F1(-m, beta; gamma; z)`` for nonnegative integer ``m``; fixed summation order."""
    total = GaussRational(0)
    term = GaussRational(1)
    for j in range(m + 1):
        total = total + term
        if j == m:
            break
        den = gamma + j
        if GaussRational.lift(den).is_zero():
            raise DegenerateGaussParameters(
                f"denominator parameter 2 - d/a - 2n = {_fmt(gamma)} makes the factor (2 - d/a - 2n + {j}) vanish"
                f" in G_{k}^({n})"
            )
        term = term * (j - m) * (beta + j) * z / (den * (j + 1))
    return total


def _fmt(g):
    g = GaussRational.lift(g)
    return str(g.re) if g.is_real() else f"{g.re}{'+' if g.im >= 0 else '-'}{abs(g.im)}i"


def master_coefficients(a, b, c, d, e, n: int) -> list[GaussRational]:
    """x^k coefficients (k = 0..n) of the monic solution, in Gaussian rationals.

    Parameters may themselves be Gaussian rationals (used by the Romanovski /
    complex-Jacobi phase relation). For ``a != 0`` the coefficient of x^k is
    ``C(n,k) (2a/(b+s))^(k-n) 2F1(k-n, (2ae-bd)/(2as) + 1 - d/(2a) - n; 2 - d/a - 2n; 2s/(b+s))``
    with ``s = sqrt(b^2 - 4ac)``; for ``a = 0`` the limiting 2F0 form is used.
    """
    a, b, c, d, e = (GaussRational.lift(v) for v in (a, b, c, d, e))
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return [GaussRational(1)]
    if a.is_zero():
        return _master_a0(b, c, d, e, n)
    D = b * b - 4 * a * c
    if not D.is_real():
        raise NoExactPath("complex discriminant is outside the supported parameter set")
    s = _gauss_sqrt(D.re)
    if s.is_zero():
        raise DegenerateGaussParameters("b^2 - 4ac = 0: the factor sqrt(b^2 - 4ac) in the Gauss parameter vanishes")
    if (b + s).is_zero():
        s = -s  # other branch of the square root; the formula is branch-symmetric
    bs = b + s
    pref = 2 * a / bs
    beta = (2 * a * e - b * d) / (2 * a * s) + 1 - d / (2 * a) - n
    gamma = 2 - d / a - 2 * n
    z = 2 * s / bs
    out = []
    for k in range(n + 1):
        g = pref ** (k - n) * _terminating_2f1(n - k, beta, gamma, z, k=k, n=n)
        out.append(g * comb(n, k))
    return out


def _terminating_2f0(m: int, p1, p2, z):
    total = GaussRational(0)
    term = GaussRational(1)
    for j in range(m + 1):
        total = total + term
        term = term * (p1 + j) * (p2 + j) * z / (j + 1)
    return total


def _expand_shifted(t_coeffs: list, shift) -> list:
    """Coefficients in x of ``sum_j t_coeffs[j] (x + shift)^j``."""
    n = len(t_coeffs) - 1
    out = [GaussRational(0) for _ in range(n + 1)]
    for j, cj in enumerate(t_coeffs):
        if cj.is_zero():
            continue
        for k in range(j + 1):
            out[k] = out[k] + cj * comb(j, k) * shift ** (j - k)
    return out


def _master_a0(b, c, d, e, n):
    if d.is_zero():
        raise DegenerateGaussParameters("a = 0 and d = 0: every lambda_n vanishes, the factor d^n is zero")
    t_coeffs = [GaussRational(0) for _ in range(n + 1)]
    if not b.is_zero():
        # sigma = b t, tau = d t + e', t = x + c/b
        shift = c / b
        e1 = e - d * c / b
        # t^n 2F0(-n, -(n-1) - e'/b; ; b/(d t))
        z = b / d
        p2 = -(n - 1) - e1 / b
        term = GaussRational(1)
        for j in range(n + 1):
            t_coeffs[n - j] = term
            term = term * (j - n) * (p2 + j) * z / (j + 1)
    else:
        # sigma = c, tau = d t, t = x + e/d
        shift = e / d
        z = 2 * c / d
        p1 = GaussRational(Fraction(-n, 2))
        p2 = GaussRational(Fraction(1 - n, 2))
        term = GaussRational(1)
        for j in range(n // 2 + 1):
            t_coeffs[n - 2 * j] = term
            term = term * (p1 + j) * (p2 + j) * z / (j + 1)
    return _expand_shifted(t_coeffs, shift)


def _confluent_master(params: HypergeqParams, n: int) -> ExactPoly:
    """Monic solution for a repeated-root sigma (b^2 = 4ac), verification only.

    As the discriminant closes, ``beta * z`` stays finite and the Gauss sum
    becomes ``1F1(k-n; 2 - d/a - 2n; (2ae - bd)/(ab))``. A tuple with ``b = 0``
    is shifted by one first so that ``b != 0``. The public constructors keep
    refusing this (Bessel) family.
    """
    a, b, c, d, e = params.as_tuple()
    if a == 0 or params.discriminant != 0:
        raise ValueError("confluent limit needs a != 0 and b^2 - 4ac = 0")
    if n == 0:
        return ExactPoly.const(1)
    if b == 0:
        moved = HypergeqParams(a, 2 * a, a + c, d, d + e)  # x = y + 1
        return _confluent_master(moved, n).compose_affine(Fraction(1), Fraction(-1))
    w = (2 * a * e - b * d) / (a * b)
    gamma = 2 - d / a - 2 * n
    coeffs = []
    for k in range(n + 1):
        m = n - k
        total, term = Fraction(0), Fraction(1)
        for j in range(m + 1):
            total += term
            if j == m:
                break
            if gamma + j == 0:
                raise DegenerateGaussParameters(f"1F1 denominator 2 - d/a - 2n + {j} vanishes")
            term = term * (j - m) * w / ((gamma + j) * (j + 1))
        coeffs.append(comb(n, k) * (2 * a / b) ** (k - n) * total)
    return ExactPoly(coeffs)


def _repeated_factor_rodrigues(params: HypergeqParams, n: int) -> ExactPoly:
    """Rodrigues polynomial for ``w = |x-r|^A exp(-C/(x-r))``, verification only.

    d/dx [P (x-r)^s e^{-C/(x-r)}] = [P' (x-r)^2 + s (x-r) P + C P] (x-r)^(s-2) e^{-C/(x-r)}
    """
    w = pearson_weight(params)
    if w.kind != "repeated-factor":
        raise ValueError("not a repeated-factor weight")
    r, A, C = w.data["root"], w.data["exponent"], w.data["recip"]
    lin = ExactPoly((-r, 1))
    lin2 = lin * lin
    P, s = ExactPoly.const(1), 2 * n + A
    for _ in range(n):
        P = P.deriv() * lin2 + (lin * P).scale(s) + P.scale(C)
        s -= 2
    return P.scale(params.a**n)


def monic_master(params: HypergeqParams, n: int) -> ExactPoly:
    """Monic polynomial solution from the Gauss-sum master formula (exact)."""
    coeffs = master_coefficients(*params.as_tuple(), n)
    for k, g in enumerate(coeffs):
        if not g.is_real():
            raise ArithmeticError(f"coefficient of x^{k} has nonzero imaginary part {g.im}")
    return ExactPoly(g.re for g in coeffs)


# ---------------------------------------------------------------------------
# Classification


@dataclass(frozen=True)
class CanonicalFamily:
    """Family tag with canonical parameters.

    The tuple is reduced by ``x = alpha*y + beta`` and an overall factor
    ``scale`` on the equation; an exact canonical tuple has ``(1, 0, 1)``.
    Values are Fractions where the reduction is rational, floats otherwise.
    """

    tag: str
    params: dict
    alpha: object = Fraction(1)
    beta: object = Fraction(0)
    scale: object = Fraction(1)
    note: str = ""

    @property
    def is_exact_canonical(self) -> bool:
        return (self.alpha, self.beta, self.scale) == (1, 0, 1)


def _reduced(params: HypergeqParams, alpha, beta, kappa):
    """(d, e) of the reduced equation after x = alpha y + beta and scaling by kappa."""
    d, e = params.d, params.e
    return kappa * d, kappa * (d * beta + e) / alpha


def classify(params: HypergeqParams) -> CanonicalFamily:
    a, b, c, d, e = params.as_tuple()
    if a != 0:
        D = params.discriminant
        if D > 0:
            sq = _sqrt_num(D)
            r1, r2 = sorted(((-b - sq) / (2 * a), (-b + sq) / (2 * a)))
            alpha, beta, kappa = _num((r2 - r1) / 2), _num((r1 + r2) / 2), -1 / a
            dt, et = _reduced(params, alpha, beta, kappa)
            gamma, delta = (-dt - 2 - et) / 2, (-dt - 2 + et) / 2
            return CanonicalFamily("Jacobi", {"gamma": _num(gamma), "delta": _num(delta)}, alpha, beta, kappa)
        if D == 0:
            beta, kappa = -b / (2 * a), 1 / a
            dt, et = _reduced(params, Fraction(1), beta, kappa)
            return CanonicalFamily(
                "Bessel", {"alpha": dt - 2, "beta": et}, Fraction(1), beta, kappa,
                "classification only: not orthogonal on a real interval",
            )
        h = b / (2 * a)
        k = _sqrt_num(-D / (4 * a * a))
        alpha, beta, kappa = _num(k), -h, 1 / a
        dt, et = _reduced(params, alpha, beta, kappa)
        p, q = 1 - dt / 2, et
        if p > 0:
            return CanonicalFamily("Romanovski", {"p": _num(p), "q": _num(q)}, alpha, beta, kappa)
        return CanonicalFamily(
            "Other", {"p": _num(p), "q": _num(q)}, alpha, beta, kappa,
            "Romanovski-type sigma but p <= 0",
        )
    if b != 0:
        if d == 0:
            return CanonicalFamily("Other", {}, note="a = 0, d = 0: no polynomial family (lambda_n = 0)")
        alpha, beta = -b / d, -c / b
        kappa = alpha / b
        dt, et = _reduced(params, alpha, beta, kappa)
        return CanonicalFamily("Laguerre", {"alpha": et - 1}, alpha, beta, kappa)
    # a = b = 0, c != 0
    if d == 0:
        return CanonicalFamily("Other", {}, note="a = b = 0, d = 0: no polynomial family")
    kappa = Fraction(-2) / d
    a2 = kappa * c
    if a2 <= 0:
        return CanonicalFamily("Other", {}, note="Hermite-type with weight exp(+x^2)")
    alpha = _num(_sqrt_num(a2))
    beta = -e / d
    return CanonicalFamily("Hermite", {}, alpha, beta, kappa)


def canonical_params(family: CanonicalFamily) -> HypergeqParams:
    """The canonical five-tuple named by ``family`` (exact parameters only)."""
    pr = family.params
    if family.tag == "Jacobi":
        return HypergeqParams.jacobi(pr["gamma"], pr["delta"])
    if family.tag == "Laguerre":
        return HypergeqParams.laguerre(pr["alpha"])
    if family.tag == "Hermite":
        return HypergeqParams.hermite()
    if family.tag == "Romanovski":
        return HypergeqParams.romanovski(pr["p"], pr["q"])
    if family.tag == "Bessel":
        return HypergeqParams.bessel(pr["alpha"], pr["beta"])
    raise ValueError(f"no canonical tuple for tag {family.tag!r}")
