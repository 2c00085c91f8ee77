from fractions import Fraction

import mpmath
import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from dedekind.cotderiv import (
    cot_derivative_numeric,
    cot_derivative_polynomial,
    cot_laurent_coefficients,
    laurent_constant_term,
)
from dedekind.numeric import PrecisionContext
from dedekind.cyclotomic import cot_derivative_exact, to_complex
from dedekind.polynomial import Polynomial
from oracles import mp_cot_derivative

noninteger = st.fractions(min_value=-2, max_value=2, max_denominator=10).filter(lambda t: t.denominator != 1)


def test_polynomial_examples():
    assert cot_derivative_polynomial(0).poly == Polynomial([0, 1])
    assert cot_derivative_polynomial(1).poly == Polynomial([-1, 0, -1])
    assert cot_derivative_polynomial(2).poly == Polynomial([0, 2, 0, 2])


def test_degree_and_parity():
    for m in range(21):
        p = cot_derivative_polynomial(m).poly
        assert p.degree == m + 1
        # only monomials of degree with the parity of m+1 appear
        assert all(c == 0 for i, c in enumerate(p.coefficients) if (i - m - 1) % 2)


def test_recursion():
    for m in range(20):
        p = cot_derivative_polynomial(m).poly
        assert cot_derivative_polynomial(m + 1).poly == -(Polynomial([1, 0, 1]) * p.derivative())


def test_polynomials_match_symbolic_derivatives():
    x, c = sympy.symbols("x c")
    for m in range(8):
        expr = sympy.diff(sympy.cot(x), x, m)
        expr = sympy.simplify(expr.subs(sympy.cot(x), c).rewrite(sympy.cot))
        ours = cot_derivative_polynomial(m).poly
        ours_expr = sum(int(v) * c**i for i, v in enumerate(ours.coefficients))
        # check numerically at a generic point to avoid simplifier quirks
        point = 0.7
        got = float(sympy.diff(sympy.cot(x), x, m).subs(x, point))
        assert abs(float(ours_expr.subs(c, sympy.cot(point))) - got) < 1e-9 * max(1, abs(got))


def test_laurent_examples():
    coeffs = cot_laurent_coefficients(0, 1, 1)
    assert coeffs == [1, 0, Fraction(-1, 3)]
    assert cot_laurent_coefficients(1, 1, 0)[0] == -1
    assert cot_laurent_coefficients(0, 2, -1) == [Fraction(1, 2)]


@pytest.mark.parametrize("m,a", [(0, 1), (1, 1), (2, 3), (3, 2), (4, 1), (5, 2)])
def test_laurent_against_series(m, a):
    z = sympy.Symbol("z")
    order = 6
    expr = sympy.diff(sympy.cot(z), z, m).subs(z, sympy.pi * a * z)
    series = sympy.series(expr, z, 0, order + 1).removeO()
    coeffs = cot_laurent_coefficients(m, a, order)
    for i, r in enumerate(coeffs):
        e = i - (m + 1)
        got = sympy.nsimplify(sympy.simplify(series.coeff(z, e) / sympy.pi**e))
        assert got == sympy.Rational(r.numerator, r.denominator), (m, a, e)


def test_constant_terms():
    for m in range(9):
        coeffs = cot_laurent_coefficients(m, 1, 0)
        assert laurent_constant_term(m) == coeffs[-1]


def test_numeric_examples():
    assert abs(cot_derivative_numeric(0, "0.25") - 1) < mpmath.mpf(10) ** -55
    assert abs(cot_derivative_numeric(1, "0.25") + 2) < mpmath.mpf(10) ** -55


@given(
    st.integers(1, 5),
    st.floats(-0.45, 0.45).filter(lambda v: abs(v) > 0.05),
    st.floats(-0.5, 0.5),
)
def test_numeric_against_finite_difference(m, re, im):
    # central difference at 100 digits with step 1e-30: truncation error ~1e-60
    ctx = PrecisionContext(100)
    mp = ctx.mp
    w = ctx.convert(complex(re, im))
    h = mp.mpf(10) ** -30
    fd = (cot_derivative_numeric(m - 1, w + h, ctx) - cot_derivative_numeric(m - 1, w - h, ctx)) / (2 * h * mp.pi)
    got = cot_derivative_numeric(m, complex(re, im), 60)
    assert abs(got - fd) <= mpmath.mpf(10) ** -20 * max(1, abs(fd))


@given(st.integers(0, 5), noninteger)
def test_exact_matches_numeric(m, t):
    exact = to_complex(cot_derivative_exact(m, t), 50)
    numeric = cot_derivative_numeric(m, t, 50)
    with mpmath.workdps(60):
        oracle = mp_cot_derivative(m, t, 60)
        scale = max(1, abs(oracle))
        assert abs(exact - numeric) < mpmath.mpf(10) ** -40 * scale
        assert abs(exact - oracle) < mpmath.mpf(10) ** -30 * scale
