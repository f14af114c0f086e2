import math
from fractions import Fraction as F

import mpmath
import numpy as np
import pytest
import sympy as sp
from hypothesis import given
from hypothesis import strategies as st

from scarfpoly.gaussian import GaussRational
from scarfpoly.hypergeq import (
    ConstructionRefused,
    DegenerateGaussParameters,
    HypergeqParams,
    NoExactPath,
    canonical_params,
    classify,
    lambda_n,
    leading_product,
    master_coefficients,
    monic_master,
    ode_residual,
    pearson_weight,
    rodrigues_poly,
)
from scarfpoly.hypergeq import _confluent_master, _repeated_factor_rodrigues
from scarfpoly.polycore import ExactPoly

X = sp.Symbol("x")


def sym(p: ExactPoly):
    return sum(sp.Rational(c.numerator, c.denominator) * X**k for k, c in enumerate(p.coeffs))


def from_sym(expr) -> ExactPoly:
    coeffs = sp.Poly(sp.expand(expr), X).all_coeffs()[::-1]
    return ExactPoly(F(int(c.p), int(c.q)) for c in coeffs)


def test_lambda_examples():
    rom = lambda p: HypergeqParams.romanovski(p, 0)  # noqa: E731
    assert lambda_n(rom(F(3)), 0) == 0
    assert lambda_n(rom(F(5, 2)), 2) == -4
    assert lambda_n(HypergeqParams.hermite(), 3) == -6
    assert HypergeqParams.hermite().lambda_n(3) == -6


def test_sigma_must_not_vanish():
    with pytest.raises(ValueError):
        HypergeqParams(0, 0, 0, 1, 1)


# --- Pearson weights ---------------------------------------------------------

WEIGHT_CASES = [
    # (tuple, sample points inside the support)
    ((1, 0, 1, -3, 2), np.linspace(-4, 4, 20)),  # Romanovski p=5/2 q=2
    ((0, 0, 1, -2, 0), np.linspace(-3, 3, 20)),  # Hermite
    ((-1, 0, 1, F(-9, 2), F(-1, 2)), np.linspace(-0.95, 0.95, 20)),  # Jacobi 3/2, 1
    ((0, 1, 0, -1, F(5, 2)), np.linspace(0.1, 8, 20)),  # Laguerre alpha=3/2
    ((1, 0, 0, 3, 1), np.linspace(0.2, 3, 20)),  # Bessel: repeated factor
    ((2, 2, 5, -1, 3), np.linspace(-5, 5, 20)),  # shifted Romanovski-type
    ((1, 0, -2, -3, 1), np.linspace(-1.3, 1.3, 20)),  # irrational roots
    ((0, 2, 3, -4, 1), np.linspace(-1.4, 4, 20)),  # shifted Laguerre
    ((0, 0, 3, -1, 2), np.linspace(-4, 4, 20)),  # shifted Hermite
]


@pytest.mark.parametrize("tup,xs", WEIGHT_CASES)
def test_pearson_equation_mpmath(tup, xs):
    """(sigma w)' = tau w at 20 points, derivative by mpmath numerical differentiation."""
    hp = HypergeqParams(*tup)
    w = pearson_weight(hp)
    a, b, c, d, e = (mpmath.mpf(v.numerator) / v.denominator for v in hp.as_tuple())
    mpmath.mp.dps = 40
    try:
        for x0 in xs:
            x0 = mpmath.mpf(float(x0))
            lhs = mpmath.diff(lambda t: (a * t * t + b * t + c) * w.evaluate_mp(t), x0)
            rhs = (d * x0 + e) * w.evaluate_mp(x0)
            scale = max(abs(rhs), abs(w.evaluate_mp(x0)))
            assert abs(lhs - rhs) <= 1e-12 * scale
    finally:
        mpmath.mp.dps = 15


@pytest.mark.parametrize("tup,xs", WEIGHT_CASES)
def test_float_weight_matches_mp(tup, xs):
    w = pearson_weight(HypergeqParams(*tup))
    got = w.evaluate(xs)
    want = np.array([float(w.evaluate_mp(float(x))) for x in xs])
    assert np.allclose(got, want, rtol=1e-12, atol=0)


def test_weight_examples():
    p, q = F(5, 2), F(2)
    w = pearson_weight(HypergeqParams.romanovski(p, q))
    xs = np.linspace(-3, 3, 7)
    assert np.allclose(w(xs), (1 + xs**2) ** -2.5 * np.exp(2 * np.arctan(xs)), rtol=1e-14)
    w = pearson_weight(HypergeqParams.hermite())
    assert np.allclose(w(xs), np.exp(-(xs**2)), rtol=1e-14)
    g, dl = F(3, 2), F(1)
    w = pearson_weight(HypergeqParams.jacobi(g, dl))
    for x0 in (0.0, 0.5, -0.5):
        assert math.isclose(float(w(x0)), (1 - x0) ** 1.5 * (1 + x0), rel_tol=1e-14)


def test_irrational_roots_have_no_exact_path():
    hp = HypergeqParams(1, 0, -2, -3, 1)
    assert not pearson_weight(hp).is_exact()
    with pytest.raises(NoExactPath):
        rodrigues_poly(hp, n=2)


# --- Rodrigues construction ------------------------------------------------------

def test_rodrigues_romanovski_examples():
    a, b = F(7, 3), F(-2, 5)
    hp = HypergeqParams.romanovski(a + F(1, 2), -2 * b)
    assert rodrigues_poly(hp, n=0).poly == ExactPoly.const(1)
    assert rodrigues_poly(hp, n=1).poly == ExactPoly((-2 * b, 1 - 2 * a))


@pytest.mark.parametrize("n", range(7))
def test_rodrigues_hermite_vs_recurrence(n):
    # physicists' Hermite from H_{n+1} = 2x H_n - 2n H_{n-1}
    h = [ExactPoly.const(1), ExactPoly((0, 2))]
    for k in range(1, n):
        h.append(ExactPoly((0, 2)) * h[k] - h[k - 1].scale(2 * k))
    R = rodrigues_poly(HypergeqParams.hermite(), n=n).poly
    assert R == h[n].scale((-1) ** n)


@pytest.mark.parametrize("n", range(6))
@pytest.mark.parametrize("g,dl", [(F(1, 2), F(3, 2)), (F(9, 2), F(29, 2)), (F(0), F(2))])
def test_rodrigues_jacobi_vs_sympy(n, g, dl):
    R = rodrigues_poly(HypergeqParams.jacobi(g, dl), n=n).poly
    ref = sp.jacobi(n, sp.Rational(g.numerator, g.denominator), sp.Rational(dl.numerator, dl.denominator), X)
    assert R == from_sym((-2) ** n * sp.factorial(n) * ref)


@pytest.mark.parametrize("n", range(6))
@pytest.mark.parametrize("alpha", [F(0), F(3, 2), F(4)])
def test_rodrigues_laguerre_vs_sympy(n, alpha):
    R = rodrigues_poly(HypergeqParams.laguerre(alpha), n=n).poly
    ref = sp.assoc_laguerre(n, sp.Rational(alpha.numerator, alpha.denominator), X)
    assert R == from_sym(sp.factorial(n) * ref)


def test_bessel_refused():
    with pytest.raises(ConstructionRefused):
        rodrigues_poly(HypergeqParams.bessel(1, 1), n=2)


def test_weight_params_must_match():
    w = pearson_weight(HypergeqParams.hermite())
    with pytest.raises(ValueError):
        rodrigues_poly(HypergeqParams.laguerre(1), w, n=1)


SHIFTED = [
    (1, 0, 1, -3, 2),
    (2, 2, 5, -1, 3),
    (-1, 0, 1, F(-9, 2), F(-1, 2)),
    (-2, 2, 4, -7, 1),
    (0, 1, 0, -1, F(5, 2)),
    (0, 2, 3, -4, 1),
    (0, 0, 1, -2, 0),
    (0, 0, 3, -1, 2),
    (4, 0, 1, -5, 3),
]


@pytest.mark.parametrize("tup", SHIFTED)
@pytest.mark.parametrize("n", range(7))
def test_both_paths_solve_the_ode(tup, n):
    hp = HypergeqParams(*tup)
    R = rodrigues_poly(hp, n=n).poly
    assert ode_residual(hp, R, n).is_zero()
    lead = leading_product(hp, n)
    if lead == 0:
        assert R.degree < n
        return
    M = monic_master(hp, n)
    assert ode_residual(hp, M, n).is_zero()
    assert M.scale(lead) == R


def monic_by_linear_solve(tup, n):
    """Independent oracle: unknown monic coefficients from the ODE, solved by sympy."""
    a, b, c, d, e = (sp.Rational(v.numerator, v.denominator) for v in map(F, tup))
    cs = sp.symbols(f"c0:{n}")
    y = X**n + sum(ck * X**k for k, ck in enumerate(cs))
    lam = n * (n - 1) * a + n * d
    res = sp.expand((a * X**2 + b * X + c) * sp.diff(y, X, 2) + (d * X + e) * sp.diff(y, X) - lam * y)
    sol = sp.solve(sp.Poly(res, X).all_coeffs(), cs, dict=True)
    return from_sym(y.subs(sol[0])) if n else ExactPoly.const(1)


@pytest.mark.parametrize("tup", SHIFTED[:6])
@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_master_vs_linear_solve(tup, n):
    hp = HypergeqParams(*tup)
    if leading_product(hp, n) == 0:
        with pytest.raises(DegenerateGaussParameters):
            monic_master(hp, n)
        return
    assert monic_master(hp, n) == monic_by_linear_solve(tup, n)


def test_master_examples():
    hp = HypergeqParams.romanovski(F(9, 2), F(3))
    assert monic_master(hp, 0) == ExactPoly.const(1)
    a, b = F(4), F(-3, 2)
    hp = HypergeqParams.romanovski(a + F(1, 2), -2 * b)
    assert monic_master(hp, 1) == ExactPoly((-2 * b / (1 - 2 * a), 1))
    assert monic_master(HypergeqParams.romanovski(F(7, 2), 0), 2) == ExactPoly((F(-1, 4), 0, 1))


def test_master_complex_intermediates_are_real():
    # Romanovski: sqrt(b^2 - 4ac) = 2i, so the sum runs through Gaussian rationals
    coeffs = master_coefficients(1, 0, 1, -9, 3, 4)
    assert all(isinstance(g, GaussRational) for g in coeffs)
    assert all(g.im == 0 for g in coeffs)


def test_master_degeneracy_named():
    # p = 3/2, n = 2: d + (n+k-2) a vanishes at k = 1
    with pytest.raises(DegenerateGaussParameters):
        monic_master(HypergeqParams.romanovski(F(3, 2), 0), 2)
    with pytest.raises(DegenerateGaussParameters):
        monic_master(HypergeqParams.bessel(1, 1), 2)


def test_leading_product_examples():
    hp = HypergeqParams.romanovski(F(13, 2), 1)
    assert leading_product(hp, 0) == 1
    for a in (F(3), F(7, 2), F(-1, 3)):
        hp = HypergeqParams.romanovski(a + F(1, 2), 0)
        assert leading_product(hp, 2) == 6 - 10 * a + 4 * a * a
    hp = HypergeqParams.romanovski(F(3, 2), 0)
    assert leading_product(hp, 2) == 0
    assert rodrigues_poly(hp, n=2).poly == ExactPoly.const(1)


# --- classification ----------------------------------------------------------------

def test_classify_bullets():
    p, q = F(5, 2), F(-4)
    fam = classify(HypergeqParams(1, 0, 1, 2 * (1 - p), q))
    assert fam.tag == "Romanovski" and fam.params == {"p": p, "q": q} and fam.is_exact_canonical
    fam = classify(HypergeqParams(0, 1, 0, -1, F(3, 2) + 1))
    assert fam.tag == "Laguerre" and fam.params == {"alpha": F(3, 2)}
    fam = classify(HypergeqParams(1, 0, 0, F(1, 2) + 2, 3))
    assert fam.tag == "Bessel" and fam.note
    assert classify(HypergeqParams.hermite()).tag == "Hermite"
    fam = classify(HypergeqParams.jacobi(F(1, 3), F(5)))
    assert fam.tag == "Jacobi" and fam.params == {"gamma": F(1, 3), "delta": F(5)}


@pytest.mark.parametrize(
    "hp",
    [
        HypergeqParams.jacobi(F(3, 2), F(1, 2)),
        HypergeqParams.laguerre(F(2)),
        HypergeqParams.hermite(),
        HypergeqParams.romanovski(F(7, 2), F(-1)),
        HypergeqParams.bessel(F(1), F(2)),
    ],
)
def test_classify_canonical_roundtrip(hp):
    fam = classify(hp)
    assert fam.is_exact_canonical
    assert canonical_params(fam) == hp


@pytest.mark.parametrize("tup,tag", [((2, 2, 5, -1, 3), "Romanovski"), ((-2, 2, 4, -7, 1), "Jacobi"),
                                     ((0, 2, 3, -4, 1), "Laguerre"), ((0, 0, 3, -1, 2), "Hermite"),
                                     ((1, 0, 1, 3, 0), "Other"), ((0, 0, 1, 2, 0), "Other")])
def test_classify_shifted(tup, tag):
    fam = classify(HypergeqParams(*tup))
    assert fam.tag == tag


@pytest.mark.parametrize("tup", [(2, 2, 5, -1, 3), (-2, 2, 4, -7, 1), (0, 2, 3, -4, 1), (4, 0, 1, -5, 3)])
@pytest.mark.parametrize("n", range(5))
def test_shift_maps_to_canonical_polynomial(tup, n):
    """P_n(alpha y + beta) is proportional to the canonical family's P_n(y)."""
    hp = HypergeqParams(*tup)
    fam = classify(hp)
    P = monic_master(hp, n) if leading_product(hp, n) else None
    C = monic_master(canonical_params(fam), n) if leading_product(canonical_params(fam), n) else None
    if P is None or C is None:
        return
    shifted = P.compose_affine(fam.alpha, fam.beta)
    assert shifted.monic() == C


@given(
    st.fractions(min_value=F(1, 2), max_value=12, max_denominator=6),
    st.fractions(min_value=-10, max_value=10, max_denominator=6),
    st.integers(0, 7),
)
def test_romanovski_property(p, q, n):
    hp = HypergeqParams.romanovski(p, q)
    R = rodrigues_poly(hp, n=n).poly
    assert ode_residual(hp, R, n).is_zero()
    lead = leading_product(hp, n)
    assert R.degree == n if lead != 0 else R.degree < n
    if lead != 0:
        assert monic_master(hp, n).scale(lead) == R


BESSEL_TUPLES = [(1, 0, 0, 3, 1), (1, 0, 0, F(5, 2), -2), (1, 2, 1, 3, 1), (2, -4, 2, 5, F(1, 3))]


def sympy_bessel_rodrigues(tup, n):
    a, b, c, d, e = (sp.Rational(v.numerator, v.denominator) for v in map(F, tup))
    r = -b / (2 * a)
    t = X - r
    # ln w = ((d - 2a)/a) ln(x - r) - ((d - 2a) r + e - b)/(a (x - r))
    w = t ** ((d - 2 * a) / a) * sp.exp(-((d - 2 * a) * r + e - b) / (a * t))
    sigma = a * t**2
    return from_sym(sp.simplify(sp.diff(sigma**n * w, X, n) / w))


@pytest.mark.parametrize("tup", BESSEL_TUPLES)
@pytest.mark.parametrize("n", range(7))
def test_bessel_private_paths_agree(tup, n):
    hp = HypergeqParams(*tup)
    M = _confluent_master(hp, n)
    R = _repeated_factor_rodrigues(hp, n)
    assert ode_residual(hp, M, n).is_zero()
    assert M.scale(leading_product(hp, n)) == R


@pytest.mark.parametrize("tup", BESSEL_TUPLES)
@pytest.mark.parametrize("n", [1, 2, 3])
def test_bessel_private_paths_vs_sympy(tup, n):
    hp = HypergeqParams(*tup)
    assert _confluent_master(hp, n) == monic_by_linear_solve(tup, n)
    assert _repeated_factor_rodrigues(hp, n) == sympy_bessel_rodrigues(tup, n)


def test_bessel_private_paths_reject_other_families():
    with pytest.raises(ValueError):
        _confluent_master(HypergeqParams.romanovski(2, 1), 2)
    with pytest.raises(ValueError):
        _repeated_factor_rodrigues(HypergeqParams.jacobi(1, 1), 2)
