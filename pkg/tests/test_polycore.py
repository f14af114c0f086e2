from fractions import Fraction as F

import numpy as np
import pytest
import sympy as sp
from hypothesis import given
from hypothesis import strategies as st

from scarfpoly.polycore import (
    ONE_PLUS_X2,
    ExactPoly,
    QArctanForm,
    as_fraction,
    form_deriv,
    form_nth_deriv,
    poly_add,
    poly_eval,
    poly_mul,
    poly_scale,
)

X = sp.Symbol("x")
rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)
polys = st.lists(rationals, min_size=0, max_size=6).map(ExactPoly)


def to_sympy_form(f: QArctanForm):
    P = sum(sp.Rational(c.numerator, c.denominator) * X**k for k, c in enumerate(f.poly.coeffs))
    s = sp.Rational(f.power.numerator, f.power.denominator)
    q = sp.Rational(f.arc.numerator, f.arc.denominator)
    return P * (1 + X**2) ** s * sp.exp(q * sp.atan(X))


def test_ring_examples():
    p = ExactPoly((1, 0, 2))
    assert poly_eval(p, F(3)) == 19
    assert poly_mul(ExactPoly.x(), ExactPoly.x()) == ExactPoly.monomial(2)
    assert poly_add(p, ExactPoly()) == p
    assert poly_scale(p, F(1, 2)) == ExactPoly((F(1, 2), 0, 1))


def test_trailing_zeros_and_degree():
    assert ExactPoly((1, 2, 0, 0)).degree == 1
    assert ExactPoly((0, 0)).is_zero() and ExactPoly().degree == -1
    assert (ExactPoly((1, 1)) - ExactPoly((1, 1))).is_zero()


def test_rejects_floats():
    with pytest.raises(TypeError):
        as_fraction(0.5)
    with pytest.raises(TypeError):
        ExactPoly((1.0,))
    assert as_fraction("3/4") == F(3, 4)
    assert as_fraction(np.int64(7)) == 7


@given(polys, polys, polys)
def test_ring_axioms(p, q, r):
    assert (p + q) * r == p * r + q * r
    assert p * q == q * p
    assert (p * q).degree == (-1 if p.is_zero() or q.is_zero() else p.degree + q.degree)


@given(polys, rationals)
def test_horner_matches_sympy(p, x0):
    expr = sum(sp.Rational(c.numerator, c.denominator) * X**k for k, c in enumerate(p.coeffs))
    got = p.eval(x0)
    want = expr.subs(X, sp.Rational(x0.numerator, x0.denominator))
    assert sp.Rational(got.numerator, got.denominator) == sp.nsimplify(want)


def test_float_eval_path():
    p = ExactPoly((1, -3, F(1, 2)))
    xs = np.linspace(-2, 2, 7)
    assert np.allclose(p.eval(xs), 1 - 3 * xs + 0.5 * xs**2, rtol=0, atol=1e-14)


def test_compose_affine():
    p = ExactPoly((1, 2, 3))
    q = p.compose_affine(F(2), F(-1))  # p(2x - 1)
    for x0 in (F(0), F(1, 3), F(-5)):
        assert q.eval(x0) == p.eval(2 * x0 - 1)


def test_form_deriv_examples():
    one = ExactPoly.const(1)
    assert form_deriv(QArctanForm(one, F(0), F(0))).poly.is_zero()
    d = form_deriv(QArctanForm(one, F(1), F(0)))
    assert d.poly == ExactPoly((0, 2)) and d.power == 0
    d = form_deriv(QArctanForm(one, F(0), F(1)))
    assert d.poly == one and d.power == -1 and d.arc == 1


def test_nth_deriv_examples():
    f = QArctanForm(ExactPoly.const(1), F(1), F(0))
    assert form_nth_deriv(f, 0) == f
    d2 = form_nth_deriv(f, 2)
    # d^2/dx^2 (1+x^2) = 2, carried at power -1 as 2(1+x^2)/(1+x^2)
    assert d2.power == -1 and d2.poly == ExactPoly((2, 0, 2))
    p, q = F(7, 2), F(-3)
    d1 = form_nth_deriv(QArctanForm(ExactPoly.const(1), 1 - p, q), 1)
    assert d1.poly == ExactPoly((q, 2 * (1 - p))) and d1.power == -p


@given(
    polys,
    st.fractions(min_value=-5, max_value=5, max_denominator=4),
    st.fractions(min_value=-5, max_value=5, max_denominator=4),
)
def test_deriv_matches_sympy(p, s, q):
    f = QArctanForm(p, s, q)
    d = form_deriv(f)
    assert sp.simplify(sp.diff(to_sympy_form(f), X) - to_sympy_form(d)) == 0


@given(polys, st.integers(0, 3), st.integers(0, 3), st.fractions(max_denominator=3, min_value=-3, max_value=3))
def test_nth_deriv_composes(p, n, m, q):
    f = QArctanForm(p, F(1, 2), q)
    assert form_nth_deriv(form_nth_deriv(f, n), m) == form_nth_deriv(f, n + m)


@given(polys, polys)
def test_deriv_linear(p, r):
    s, q = F(-3, 2), F(2)
    lhs = form_deriv(QArctanForm(p + r, s, q))
    rhs = form_deriv(QArctanForm(p, s, q)) + form_deriv(QArctanForm(r, s, q))
    assert lhs.at_power(rhs.power).poly == rhs.poly


@pytest.mark.parametrize("s,n", [(3, 1), (3, 3), (4, 2), (5, 5), (2, 4)])
def test_q0_matches_direct_expansion(s, n):
    direct = (ONE_PLUS_X2**s).deriv(n)
    form = form_nth_deriv(QArctanForm(ExactPoly.const(1), F(s), F(0)), n)
    assert form.power == s - n
    if s >= n:
        assert form.at_power(F(0)).poly == direct
    else:
        assert form.poly == direct * ONE_PLUS_X2 ** (n - s)


def test_form_float_evaluate():
    f = QArctanForm(ExactPoly((1, 1)), F(-3, 2), F(2))
    xs = np.array([-2.0, 0.0, 0.5, 3.0])
    want = (1 + xs) * (1 + xs**2) ** -1.5 * np.exp(2 * np.arctan(xs))
    assert np.allclose(f.evaluate(xs), want, rtol=1e-14)
