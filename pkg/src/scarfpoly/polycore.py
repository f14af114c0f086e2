"""Exact polynomial arithmetic over the rationals.

Coefficients are :class:`fractions.Fraction`; index ``k`` of ``ExactPoly.coeffs``
holds the coefficient of ``x**k``. :class:`QArctanForm` represents

    P(x) * (1 + x**2)**s * exp(q * arctan(x))

and is closed under differentiation, which makes every Rodrigues construction on
``sigma = 1 + x**2`` an exact computation.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Iterable

import numpy as np

__all__ = [
    "Fraction",
    "as_fraction",
    "ExactPoly",
    "QArctanForm",
    "ONE_PLUS_X2",
    "poly_add",
    "poly_mul",
    "poly_scale",
    "poly_eval",
    "form_deriv",
    "form_nth_deriv",
]


def as_fraction(value) -> Fraction:
    """Coerce ints, Fractions and decimal/ratio strings to an exact Fraction.

    Floats are rejected: a float silently smuggles binary rounding into
    quantities that are supposed to be exact.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    if isinstance(value, np.integer):
        return Fraction(int(value))
    raise TypeError(f"expected an exact rational, got {type(value).__name__}: {value!r}")


def _trim(coeffs: Iterable[Fraction]) -> tuple[Fraction, ...]:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


class ExactPoly:
    """Immutable dense polynomial with rational coefficients (ascending order)."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Iterable = ()):
        self._c = _trim(as_fraction(c) for c in coeffs)

    # construction helpers
    @classmethod
    def const(cls, value) -> "ExactPoly":
        return cls((value,))

    @classmethod
    def x(cls) -> "ExactPoly":
        return cls((0, 1))

    @classmethod
    def monomial(cls, k: int, value=1) -> "ExactPoly":
        return cls([0] * k + [value])

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        """Coefficients, ascending; the zero polynomial has ``(Fraction(0),)``."""
        return self._c if self._c else (Fraction(0),)

    @property
    def degree(self) -> int:
        """Degree; ``-1`` for the zero polynomial."""
        return len(self._c) - 1

    @property
    def leading(self) -> Fraction:
        return self._c[-1] if self._c else Fraction(0)

    def is_zero(self) -> bool:
        return not self._c

    def __getitem__(self, k: int) -> Fraction:
        if 0 <= k < len(self._c):
            return self._c[k]
        return Fraction(0)

    def __len__(self):
        return len(self._c)

    def __eq__(self, other):
        if isinstance(other, ExactPoly):
            return self._c == other._c
        if isinstance(other, (int, Fraction)):
            return self._c == _trim((Fraction(other),))
        return NotImplemented

    def __hash__(self):
        return hash(self._c)

    def __repr__(self):
        return f"ExactPoly({[str(c) for c in self.coeffs]})"

    def __str__(self):
        if not self._c:
            return "0"
        terms = []
        for k, c in enumerate(self._c):
            if c == 0:
                continue
            mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            if mono and c == 1:
                terms.append(mono)
            elif mono and c == -1:
                terms.append(f"-{mono}")
            else:
                terms.append(f"{c}{'*' + mono if mono else ''}")
        return " + ".join(terms).replace("+ -", "- ")

    # ring operations
    def __add__(self, other):
        other = _lift(other)
        n = max(len(self._c), len(other._c))
        return ExactPoly(self[k] + other[k] for k in range(n))

    __radd__ = __add__

    def __neg__(self):
        return ExactPoly(-c for c in self._c)

    def __sub__(self, other):
        return self + (-_lift(other))

    def __rsub__(self, other):
        return _lift(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = _lift(other)
        if not self._c or not other._c:
            return ExactPoly()
        out = [Fraction(0)] * (len(self._c) + len(other._c) - 1)
        for i, a in enumerate(self._c):
            if a == 0:
                continue
            for j, b in enumerate(other._c):
                out[i + j] += a * b
        return ExactPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power of a polynomial")
        out = ExactPoly.const(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def scale(self, factor) -> "ExactPoly":
        f = as_fraction(factor)
        return ExactPoly(c * f for c in self._c)

    def deriv(self, m: int = 1) -> "ExactPoly":
        c = list(self._c)
        for _ in range(m):
            c = [k * c[k] for k in range(1, len(c))]
        return ExactPoly(c)

    def __call__(self, x):
        return self.eval(x)

    def eval(self, x):
        """Horner evaluation; exact for rational ``x``, elementwise for arrays."""
        if isinstance(x, (int, Fraction)):
            acc = Fraction(0)
            for c in reversed(self._c):
                acc = acc * x + c
            return acc
        return np.polynomial.polynomial.polyval(x, self.to_float())

    def to_float(self) -> np.ndarray:
        return np.array([float(c) for c in self.coeffs])

    def compose_affine(self, alpha, beta) -> "ExactPoly":
        """Return ``P(alpha*x + beta)``."""
        lin = ExactPoly((beta, alpha))
        acc = ExactPoly()
        for c in reversed(self._c):
            acc = acc * lin + c
        return acc

    def monic(self) -> "ExactPoly":
        if not self._c:
            raise ZeroDivisionError("the zero polynomial has no monic form")
        return self.scale(1 / self.leading)


def _lift(p) -> ExactPoly:
    if isinstance(p, ExactPoly):
        return p
    return ExactPoly.const(p)


ONE_PLUS_X2 = ExactPoly((1, 0, 1))


def poly_add(p: ExactPoly, r: ExactPoly) -> ExactPoly:
    return p + r


def poly_mul(p: ExactPoly, r: ExactPoly) -> ExactPoly:
    return p * r


def poly_scale(p: ExactPoly, factor) -> ExactPoly:
    return p.scale(factor)


def poly_eval(p: ExactPoly, x):
    return p.eval(x)


@dataclass(frozen=True)
class QArctanForm:
    """``poly(x) * (1 + x**2)**power * exp(arc * arctan(x))`` held exactly."""

    poly: ExactPoly
    power: Fraction = Fraction(0)
    arc: Fraction = Fraction(0)

    def __post_init__(self):
        if not isinstance(self.poly, ExactPoly):
            object.__setattr__(self, "poly", ExactPoly(self.poly))
        object.__setattr__(self, "power", as_fraction(self.power))
        object.__setattr__(self, "arc", as_fraction(self.arc))

    def is_zero(self) -> bool:
        return self.poly.is_zero()

    def deriv(self) -> "QArctanForm":
        return form_deriv(self)

    def nth_deriv(self, n: int) -> "QArctanForm":
        return form_nth_deriv(self, n)

    def at_power(self, power) -> "QArctanForm":
        """Rewrite with a smaller exponent by absorbing ``(1+x^2)^k`` into the poly.

        ``power`` must differ from ``self.power`` by a nonnegative integer.
        """
        k = self.power - as_fraction(power)
        if k.denominator != 1 or k < 0:
            raise ValueError(f"cannot lower power {self.power} to {power}")
        return QArctanForm(self.poly * ONE_PLUS_X2 ** int(k), as_fraction(power), self.arc)

    def __add__(self, other: "QArctanForm") -> "QArctanForm":
        if self.arc != other.arc:
            raise ValueError("forms with different arctan coefficients do not add in-family")
        delta = self.power - other.power
        if delta.denominator != 1:
            raise ValueError("forms whose powers differ by a non-integer do not add in-family")
        low = min(self.power, other.power)
        return QArctanForm(self.at_power(low).poly + other.at_power(low).poly, low, self.arc)

    def scale(self, factor) -> "QArctanForm":
        return QArctanForm(self.poly.scale(factor), self.power, self.arc)

    def mul_poly(self, p: ExactPoly) -> "QArctanForm":
        return QArctanForm(self.poly * p, self.power, self.arc)

    def evaluate(self, x):
        """Floating evaluation, for plotting and quadrature only."""
        x = np.asarray(x, dtype=float)
        return (
            self.poly.eval(x)
            * np.power(1.0 + x * x, float(self.power))
            * np.exp(float(self.arc) * np.arctan(x))
        )


def form_deriv(f: QArctanForm) -> QArctanForm:
    """d/dx of P (1+x^2)^s e^{q atan x} = [P'(1+x^2) + 2 s x P + q P] (1+x^2)^(s-1) e^{q atan x}."""
    p = f.poly
    new = p.deriv() * ONE_PLUS_X2 + (ExactPoly.x() * p).scale(2 * f.power) + p.scale(f.arc)
    return QArctanForm(new, f.power - 1, f.arc)


def form_nth_deriv(f: QArctanForm, n: int) -> QArctanForm:
    if n < 0:
        raise ValueError("derivative order must be nonnegative")
    for _ in range(n):
        f = form_deriv(f)
    return f

