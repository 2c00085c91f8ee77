"""Dedekind cotangent sums and the classical sums they specialize to."""

import re
from dataclasses import dataclass
from functools import lru_cache
from fractions import Fraction
from math import gcd, lcm
from typing import Union

from .arith import bernoulli_function, mod_inverse, sawtooth
from .cotderiv import cot_derivative_numeric, laurent_constant_term
from .cyclotomic import (
    DEFAULT_CONDUCTOR_CAP,
    CycloElement,
    cot_conductor,
    cot_derivative_exact,
    demote,
)
from .errors import ConductorExceeded, MissingParameters, NotCoprime
from .numeric import as_context, integer_distance

ExactValue = Union[Fraction, CycloElement]

SINGULAR_MODES = ("skip", "laurent")


_RATIONAL_LITERAL = re.compile(r"\s*[+-]?\d+(/\d+)?\s*")


def _shift(value):
    """Rational shifts become Fractions; anything else is left for the numeric path."""
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str) and _RATIONAL_LITERAL.fullmatch(value):
        return Fraction(value)
    return value


@dataclass(frozen=True)
class CotSumSpec:
    """Parameters (a0 | a; m0 | m; z0 | z) of a Dedekind cotangent sum."""

    a0: int
    a: tuple
    m0: int = 0
    m: tuple = None
    z0: object = 0
    z: tuple = None

    def __post_init__(self):
        a = tuple(self.a)
        m = tuple(self.m) if self.m is not None else (0,) * len(a)
        z = tuple(self.z) if self.z is not None else (0,) * len(a)
        if not a:
            raise ValueError("need at least one cotangent factor")
        if len(m) != len(a) or len(z) != len(a):
            raise ValueError("a, m and z must have the same length")
        if self.a0 < 1 or any(x < 1 for x in a):
            raise ValueError("moduli must be positive")
        if self.m0 < 0 or any(x < 0 for x in m):
            raise ValueError("orders must be nonnegative")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "z0", _shift(self.z0))
        object.__setattr__(self, "z", tuple(_shift(x) for x in z))
        if self.is_rational:
            # t_j = (a_j q_j (k q0 + p0) - p_j q0 a0) / (a0 q0 q_j), kept as integers
            q0 = self.z0.denominator
            parts = tuple(
                (aj * x.denominator, x.numerator * q0 * self.a0, self.a0 * q0 * x.denominator)
                for aj, x in zip(a, self.z)
            )
            object.__setattr__(self, "_parts", parts)

    @property
    def d(self):
        return len(self.a)

    @property
    def is_rational(self):
        return all(isinstance(x, Fraction) for x in (self.z0,) + self.z)

    def arguments(self, k):
        """The cotangent arguments t_j with the j-th factor cot^(m_j)(pi t_j)."""
        if self.is_rational:
            return [Fraction(num, den) for num, den in self.argument_parts(k)]
        return [aj * (k + self.z0) / self.a0 - zj for aj, zj in zip(self.a, self.z)]

    def argument_parts(self, k):
        """Unreduced integer pairs (numerator, denominator) of the rational arguments."""
        base = k * self.z0.denominator + self.z0.numerator
        return [(c * base - r, den) for c, r, den in self._parts]

    def to_json(self):
        return {
            "a0": self.a0,
            "a": list(self.a),
            "m0": self.m0,
            "m": list(self.m),
            "z0": str(self.z0),
            "z": [str(x) for x in self.z],
        }


def required_conductor(spec):
    """Conductor of the field holding every nonsingular term of the exact sum."""
    if not spec.is_rational:
        raise TypeError("exact mode requires rational shifts")
    n = 1
    for k in range(spec.a0):
        for num, den in spec.argument_parts(k):
            q = den // gcd(num, den)
            if q > 1:
                n = lcm(n, 4, q)
    return n


def _check_cap(n, cap):
    if cap is not None and n > cap:
        raise ConductorExceeded(n, cap)


def _factor(mj, t, singular):
    if t.denominator == 1:
        if singular == "skip":
            return None
        return laurent_constant_term(mj)
    value = cot_derivative_exact(mj, t)
    return value.to_rational() if value.is_rational() else value


def _canonical(spec):
    """A spec with the same term multiset: shifts mod 1, and a_j mod a0 when z0 is integral."""
    z0 = spec.z0 - (spec.z0.numerator // spec.z0.denominator)
    z = tuple(x - (x.numerator // x.denominator) for x in spec.z)
    a = spec.a if z0 else tuple((aj - 1) % spec.a0 + 1 for aj in spec.a)
    return CotSumSpec(spec.a0, a, 0, spec.m, z0, z)


def dedekind_cotangent_sum(spec, singular="skip", conductor_cap=DEFAULT_CONDUCTOR_CAP):
    """Exact value of the cotangent sum; a Fraction whenever the value is rational.

    ``singular="skip"`` drops every k with an integral argument.  With
    ``singular="laurent"`` such a factor is replaced by the constant term of
    the Laurent expansion of cot^(m) at its pole (0 for even m); this is the
    regularization under which the divisor-sum identities hold for odd orders.
    """
    if singular not in SINGULAR_MODES:
        raise ValueError(f"singular must be one of {SINGULAR_MODES}")
    if not spec.is_rational:
        raise TypeError("exact mode requires rational shifts; use the numeric evaluator")
    key = _canonical(spec)
    _check_cap(_cached_conductor(key), conductor_cap)
    value = _term_sum(key, singular)
    return value * Fraction(1, spec.a0 ** (spec.m0 + 1))


@lru_cache(maxsize=8192)
def _cached_conductor(spec):
    return required_conductor(spec)


@lru_cache(maxsize=8192)
def _term_sum(spec, singular):
    """Sum of the nonsingular terms, without the 1/a0^(m0+1) normalization."""
    rational = Fraction(0)
    terms = []
    for k in range(spec.a0):
        term = Fraction(1)
        for mj, t in zip(spec.m, spec.arguments(k)):
            f = _factor(mj, t, singular)
            if f is None:
                term = None
                break
            term = term * f
            if term == 0:
                break
        if term is None:
            continue
        if isinstance(term, CycloElement):
            if term.is_rational():
                rational += term.to_rational()
            else:
                terms.append(term)
        else:
            rational += term
    if not terms:
        return rational
    return demote(CycloElement.linear_combination([(1, t) for t in terms] + [(1, rational)]))


def dedekind_cotangent_sum_numeric(spec, digits=60, singular="skip", return_skipped=False):
    """High-precision value of the cotangent sum, for real or complex shifts.

    Terms with an argument within the pole tolerance of an integer are treated
    as singular.  With ``return_skipped`` the list of those k is returned too.
    """
    ctx = as_context(digits)
    mp = ctx.mp
    z0 = ctx.convert(spec.z0)
    zs = [ctx.convert(x) for x in spec.z]
    total = mp.mpc(0)
    skipped = []
    for k in range(spec.a0):
        term = mp.mpc(1)
        for aj, mj, zj in zip(spec.a, spec.m, zs):
            w = aj * (k + z0) / spec.a0 - zj
            if integer_distance(w, ctx) < ctx.pole_tolerance:
                if singular == "skip":
                    term = None
                    break
                c = laurent_constant_term(mj)
                term *= mp.mpf(c.numerator) / c.denominator
            else:
                term *= cot_derivative_numeric(mj, w, ctx)
        if term is None:
            skipped.append(k)
            continue
        total += term
    total /= mp.mpf(spec.a0) ** (spec.m0 + 1)
    if return_skipped:
        return total, skipped
    return total


# classical Dedekind sum ----------------------------------------------


def _dedekind_direct(a, b):
    # sum over k of ((ka/b))((k/b)) with everything scaled by 2b
    total = 0
    for k in range(1, b):
        r = k * a % b
        if r:
            total += (2 * r - b) * (2 * k - b)
    return Fraction(total, 4 * b * b)


def _dedekind_cotangent(a, b):
    # (1/4b) sum_k cot(pi k a/b) cot(pi k/b), evaluated through the discrete
    # Fourier expansion cot(pi k/b) = (i/b) sum_u W_u zeta^(ku) with W_0 = b,
    # W_u = 2u; summing over k leaves one diagonal and the k = 0 term
    # (value -b^2) has to be taken out again.
    if b == 1:
        return Fraction(0)
    acc = 0
    for u in range(b):
        v = -u * a % b
        acc += (2 * u if u else b) * (2 * v if v else b)
    return Fraction(-acc + b**3, 4 * b * b)


def _dedekind_fast(a, b):
    if gcd(a, b) != 1:
        raise NotCoprime(f"gcd({a}, {b}) = {gcd(a, b)}")
    total = Fraction(0)
    sign = 1
    a %= b
    while b > 1 and a:
        # s(a,b) = -s(b,a) + (a^2 + b^2 + 1)/(12ab) - 1/4
        total += sign * (Fraction(a * a + b * b + 1, 12 * a * b) - Fraction(1, 4))
        sign = -sign
        a, b = b % a, a
    return total


_CLASSICAL = {"direct": _dedekind_direct, "cotangent": _dedekind_cotangent, "fast": _dedekind_fast}


def classical_dedekind_sum(a, b, method="fast"):
    """s(a, b) by the sawtooth definition, the cotangent form, or reciprocity."""
    if b < 1:
        raise ValueError("b must be positive")
    try:
        fn = _CLASSICAL[method]
    except KeyError:
        raise ValueError(f"unknown method {method!r}") from None
    return fn(a, b)


# Bernoulli-type sums -------------------------------------------------


def dedekind_bernoulli_sum(m, n, a, b, c):
    """sum_{k mod a} B_m({kb/a}) B_n({kc/a}) (periodized, sawtooth for order 1)."""
    return sum(
        (bernoulli_function(m, Fraction(k * b, a)) * bernoulli_function(n, Fraction(k * c, a)) for k in range(a)),
        Fraction(0),
    )


def apostol_sum(n, a, b):
    return sum((Fraction(k, b) * bernoulli_function(n, Fraction(k * a, b)) for k in range(b)), Fraction(0))


def dedekind_rademacher_sum(a, b, x, y):
    x, y = Fraction(x), Fraction(y)
    return sum((sawtooth(a * (k + y) / b - x) * sawtooth((k + y) / b) for k in range(b)), Fraction(0))


def generalized_dr_sum(m, n, a, b, c, x, y, z):
    x, y, z = Fraction(x), Fraction(y), Fraction(z)
    total = Fraction(0)
    for k in range(a):
        u = (k + x) / a
        total += bernoulli_function(m, b * u - y) * bernoulli_function(n, c * u - z)
    return total


def plane_partition_sum(m, a, b):
    return sum(
        (bernoulli_function(m, Fraction(k, a)) * sawtooth(Fraction(k * b, a)) for k in range(1, a)), Fraction(0)
    )


# cotangent-type sums -------------------------------------------------


def dieter_cotangent_sum(a, b, c, x, y, z, conductor_cap=DEFAULT_CONDUCTOR_CAP):
    """(1/c) sum_{k mod c} cot pi(a(k+z)/c - x) cot pi(b(k+z)/c - y), singular k skipped."""
    spec = CotSumSpec(c, (a, b), 0, (0, 0), z, (x, y))
    return dedekind_cotangent_sum(spec, conductor_cap=conductor_cap)


def zagier_sum(a0, a, conductor_cap=DEFAULT_CONDUCTOR_CAP):
    """Higher-dimensional Dedekind sum ((-1)^(d/2)/a0) sum_k prod_j cot(pi k a_j/a0)."""
    a = tuple(a)
    for aj in a:
        if gcd(aj, a0) != 1:
            raise NotCoprime(f"gcd({aj}, {a0}) = {gcd(aj, a0)}")
    d = len(a)
    if d % 2 or a0 == 1:
        return Fraction(0)
    value = dedekind_cotangent_sum(CotSumSpec(a0, a), conductor_cap=conductor_cap)
    return (-1) ** (d // 2) * demote(value)


def _floor_sign(a, k, b):
    return -1 if (a * k // b) % 2 else 1


def berndt_sum(kind, a, b, alpha=None, beta=None):
    """The modified Dedekind sums S, s_1, ..., s_5 and s_{alpha,beta}."""
    if gcd(a, b) != 1:
        raise NotCoprime(f"gcd({a}, {b}) = {gcd(a, b)}")
    if kind == "S":
        return Fraction(sum((-1) ** (k + 1) * _floor_sign(a, k, b) for k in range(1, b)))
    if kind == "s1":
        return sum((_floor_sign(a, k, b) * sawtooth(Fraction(k, b)) for k in range(1, b + 1)), Fraction(0))
    if kind == "s2":
        return sum(
            ((-1) ** k * sawtooth(Fraction(k, b)) * sawtooth(Fraction(k * a, b)) for k in range(1, b + 1)),
            Fraction(0),
        )
    if kind == "s3":
        return sum(((-1) ** k * sawtooth(Fraction(k * a, b)) for k in range(1, b + 1)), Fraction(0))
    if kind == "s4":
        return Fraction(sum(_floor_sign(a, k, b) for k in range(1, b)))
    if kind == "s5":
        return sum(
            ((-1) ** k * _floor_sign(a, k, b) * sawtooth(Fraction(k, b)) for k in range(1, b + 1)), Fraction(0)
        )
    if kind == "s_alpha_beta":
        if alpha is None or beta is None:
            raise MissingParameters("s_alpha_beta needs alpha and beta")
        if alpha < 0 or beta < 0:
            raise ValueError("alpha and beta must be nonnegative")
        return _berndt_alpha_beta(a, b, alpha % a, beta % b)
    raise ValueError(f"unknown kind {kind!r}")


def _berndt_alpha_beta(a, b, alpha, beta):
    # e^(2 pi i k (alpha/a + beta/b)) = zeta_{ab}^(k (alpha b + beta a))
    n = a * b
    ainv = mod_inverse(a, b)
    step = alpha * b + beta * a
    coeffs = [Fraction(0)] * n
    for k in range(1, n):
        w = sawtooth(Fraction(k, n)) * sawtooth(Fraction(k * ainv, b))
        if w:
            coeffs[k * step % n] += w
    return demote(CycloElement.from_coeffs(n, coeffs))


BERNDT_KINDS = ("s_alpha_beta", "S", "s1", "s2", "s3", "s4", "s5")
