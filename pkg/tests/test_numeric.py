from fractions import Fraction

import mpmath
import pytest
from hypothesis import given
from hypothesis import strategies as st

from dedekind.errors import NearPole
from dedekind.numeric import PrecisionContext, coth_distribution_check, cot_numeric, pole_distance
from dedekind.sums import CotSumSpec


def test_context_defaults():
    ctx = PrecisionContext(60)
    assert ctx.pole_tolerance == ctx.mp.mpf(10) ** -30
    assert ctx.tolerance < mpmath.mpf(10) ** -50
    with pytest.raises(ValueError):
        PrecisionContext(10, pole_tolerance=0.3)


def test_no_global_state_mutation():
    before = mpmath.mp.dps
    ctx = PrecisionContext(200)
    cot_numeric(Fraction(1, 7), ctx)
    coth_distribution_check(5, "0.3+0.2j", ctx)
    assert mpmath.mp.dps == before


def test_precision_scales():
    exact = 1 / mpmath.sqrt(3)
    for digits in (20, 60, 120):
        with mpmath.workdps(digits + 20):
            got = cot_numeric(Fraction(1, 3), PrecisionContext(digits))
            assert abs(got - 1 / mpmath.sqrt(3)) < mpmath.mpf(10) ** -(digits - 2)
    del exact


def test_cot_examples():
    assert abs(cot_numeric("0.25") - 1) < mpmath.mpf(10) ** -55
    assert abs(cot_numeric("0.5+10j") + 1j) < mpmath.mpf(10) ** -20
    assert abs(cot_numeric("0.5-10j") - 1j) < mpmath.mpf(10) ** -20
    with pytest.raises(NearPole):
        cot_numeric(mpmath.mpf(3) + mpmath.mpf(10) ** -40)


def test_cot_large_imaginary_part():
    # no overflow far from the real axis
    assert abs(cot_numeric("0.3+5000j") + 1j) < mpmath.mpf(10) ** -50


@pytest.mark.parametrize("a,z", [(1, "0.2+0.1j"), (3, "0.4+0.1j"), (7, "1.2-0.3j")])
def test_coth_examples(a, z):
    report = coth_distribution_check(a, z, PrecisionContext(60))
    assert report.passed
    if a == 1:
        assert report.residual == 0


@given(st.integers(1, 10), st.floats(-2, 2), st.floats(-2, 2))
def test_coth_property(a, re, im):
    ctx = PrecisionContext(60)
    try:
        report = coth_distribution_check(a, complex(re, im), ctx)
    except NearPole:
        return
    assert report.passed
    scale = max(1, abs(report.lhs), abs(report.rhs))
    assert abs(report.residual) < mpmath.mpf(10) ** -40 * scale


def test_pole_distance():
    spec = CotSumSpec(2, (1,), 0, (0,), 0, (Fraction(1, 2),))
    assert pole_distance(spec, 1) == 0
    assert abs(pole_distance(spec, 0) - mpmath.mpf("0.5")) < 1e-50
