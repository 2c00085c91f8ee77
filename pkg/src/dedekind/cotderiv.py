"""Cotangent derivatives as polynomials in cot, and their Laurent data at 0."""

import threading
from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .arith import bernoulli_number
from .polynomial import Polynomial


@dataclass(frozen=True)
class CotDerivPoly:
    """cot^(m)(x) = poly(cot x)."""

    order: int
    poly: Polynomial

    def __call__(self, c):
        return self.poly(c)


_polys = [CotDerivPoly(0, Polynomial([0, 1]))]
_polys_lock = threading.Lock()
_ONE_PLUS_C2 = Polynomial([1, 0, 1])


def cot_derivative_polynomial(m):
    """P_m with P_0 = c and P_{m+1} = -(1 + c^2) P_m'."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    if m < len(_polys):
        return _polys[m]
    with _polys_lock:
        while len(_polys) <= m:
            prev = _polys[-1]
            _polys.append(CotDerivPoly(prev.order + 1, -(_ONE_PLUS_C2 * prev.poly.derivative())))
        return _polys[m]


def cot_laurent_coefficients(m, a, order):
    """Laurent coefficients of cot^(m)(pi a z) about z = 0.

    Entry ``i`` of the returned list is the rational r with
    coefficient(z^e) = r * pi^e, where e = i - (m + 1).  The list runs from
    e = -(m + 1) up to e = ``order`` (inclusive).
    """
    if m < 0 or a < 1:
        raise ValueError("need m >= 0 and a >= 1")
    lo = -(m + 1)
    if order < lo:
        return []
    out = [Fraction(0)] * (order - lo + 1)
    out[0] = Fraction((-1) ** m * factorial(m), a ** (m + 1))
    k = (m + 2) // 2
    while 2 * k - 1 - m <= order:
        e = 2 * k - 1 - m
        out[e - lo] = Fraction((-1) ** k * 2 ** (2 * k - 1) * a**e) * bernoulli_number(2 * k) / (
            k * factorial(e)
        )
        k += 1
    return out


def laurent_constant_term(m):
    """Constant term of the Laurent expansion of cot^(m)(pi z) at z = 0.

    Zero for even m; (-1)^k 2^m B_{m+1} / k with k = (m+1)/2 for odd m.
    """
    if m % 2 == 0:
        return Fraction(0)
    k = (m + 1) // 2
    return (-1) ** k * 2**m * bernoulli_number(m + 1) / k


def cot_derivative_numeric(m, w, digits=60):
    """cot^(m)(pi w) at high precision; raises NearPole close to the integers."""
    from .numeric import PrecisionContext, cot_numeric

    ctx = digits if isinstance(digits, PrecisionContext) else PrecisionContext(digits)
    c = cot_numeric(w, ctx)
    total = ctx.mp.mpc(0)
    for coeff in reversed(cot_derivative_polynomial(m).poly.coefficients):
        total = total * c + int(coeff)
    return total
