"""Gaussian rationals ``re + i*im`` with Fraction parts."""
from __future__ import annotations

from fractions import Fraction

from .polycore import as_fraction


class GaussRational:
    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = as_fraction(re)
        self.im = as_fraction(im)

    @classmethod
    def lift(cls, v) -> "GaussRational":
        if isinstance(v, GaussRational):
            return v
        return cls(v, 0)

    def is_real(self) -> bool:
        return self.im == 0

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def conjugate(self) -> "GaussRational":
        return GaussRational(self.re, -self.im)

    def __add__(self, o):
        o = GaussRational.lift(o)
        return GaussRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussRational(-self.re, -self.im)

    def __sub__(self, o):
        return self + (-GaussRational.lift(o))

    def __rsub__(self, o):
        return GaussRational.lift(o) - self

    def __mul__(self, o):
        o = GaussRational.lift(o)
        return GaussRational(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __truediv__(self, o):
        o = GaussRational.lift(o)
        den = o.re * o.re + o.im * o.im
        if den == 0:
            raise ZeroDivisionError("division by the Gaussian rational zero")
        num = self * o.conjugate()
        return GaussRational(num.re / den, num.im / den)

    def __rtruediv__(self, o):
        return GaussRational.lift(o) / self

    def __pow__(self, k: int):
        if k < 0:
            return GaussRational(1) / (self ** (-k))
        out = GaussRational(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, o):
        if isinstance(o, (int, Fraction)):
            o = GaussRational(o)
        if not isinstance(o, GaussRational):
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __repr__(self):
        return f"GaussRational({self.re}, {self.im})"

    def __complex__(self):
        return complex(float(self.re), float(self.im))


I = GaussRational(0, 1)
