"""Exact arithmetic in cyclotomic fields Q(zeta_n).

Internally an element of Q(zeta_n) is an integer vector over the *powerful*
basis (products of power bases of the prime-power subfields) together with a
positive common denominator.  That basis makes lifting between conductors a
relabelling followed by a sparse rewrite, which is what the cotangent sums
spend most of their time doing.  The power-basis coordinates
1, zeta, ..., zeta^(phi(n)-1) modulo Phi_n are available through
:attr:`CycloElement.coeffs` and are what gets serialized.
"""

import threading
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import gcd, lcm

import mpmath

from .arith import divisors, euler_phi, factorize
from .errors import NotRational, PoleError
from .polynomial import Polynomial, inverse_mod

IntPolynomial = Polynomial

#: Largest conductor exact mode will work in unless told otherwise.
DEFAULT_CONDUCTOR_CAP = 5000


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n):
    """Phi_n, by exact division of x^n - 1 by Phi_d for the proper divisors d."""
    if n < 1:
        raise ValueError("n must be positive")
    poly = Polynomial([-1] + [0] * (n - 1) + [1])
    for d in divisors(n)[:-1]:
        poly = _exact_monic_division(poly, cyclotomic_polynomial(d))
    return poly


def _exact_monic_division(num, den):
    rem = list(num.coefficients)
    dd = den.degree
    quot = [0] * (len(rem) - dd)
    for s in range(len(quot) - 1, -1, -1):
        c = rem[s + dd]
        if c:
            quot[s] = c
            for j, y in enumerate(den.coefficients):
                rem[s + j] -= c * y
    if any(rem[:dd]):
        raise ArithmeticError("division was not exact")
    return Polynomial(quot)


class _Basis:
    """Powerful-basis bookkeeping for one conductor.

    ``exponents[i]`` is the exponent r of the i-th basis monomial zeta_n^r and
    ``plus[r]`` / ``minus[r]`` list the basis indices whose signed sum equals
    zeta_n^r.
    """

    def __init__(self, n):
        self.n = n
        comps = []
        for p, e in factorize(n):
            q = p**e
            comps.append((q, p, q // p, q - q // p, n // q, pow(n // q, -1, q)))
        self.phi = euler_phi(n)
        exps = []
        for tup in product(*(range(c[3]) for c in comps)):
            exps.append(sum(e * c[4] for e, c in zip(tup, comps)) % n)
        self.exponents = exps
        self.index = {r: i for i, r in enumerate(exps)}
        plus, minus = [], []
        for r in range(n):
            options = []
            for q, p, step, phi_q, cof, crt in comps:
                e = r * crt % q
                if e < phi_q:
                    options.append(((e * cof, 1),))
                else:
                    options.append(tuple(((e - l * step) * cof, -1) for l in range(1, p)))
            pos, neg = [], []
            for choice in product(*options):
                sign = 1
                exp = 0
                for term, s in choice:
                    exp += term
                    sign *= s
                (pos if sign > 0 else neg).append(self.index[exp % n])
            plus.append(tuple(pos))
            minus.append(tuple(neg))
        self.plus = plus
        self.minus = minus

    def reduce(self, acc):
        """Rewrite a group-ring vector (indexed by exponent mod n) in the basis."""
        out = [0] * self.phi
        plus, minus = self.plus, self.minus
        for r, v in enumerate(acc):
            if v:
                for i in plus[r]:
                    out[i] += v
                for i in minus[r]:
                    out[i] -= v
        return out


_basis_lock = threading.Lock()
_bases = {}


def _basis(n):
    b = _bases.get(n)
    if b is None:
        with _basis_lock:
            b = _bases.get(n)
            if b is None:
                b = _bases[n] = _Basis(n)
    return b


class CycloElement:
    """An element of Q(zeta_n), n = ``conductor``.

    Elements of different conductors combine after lifting both to the least
    common multiple; rational elements never force a lift.
    """

    __slots__ = ("conductor", "_num", "_den", "_coeffs")

    def __init__(self, conductor, num, den=1):
        # num: powerful-basis integer vector of length phi(conductor)
        if den == 0:
            raise ZeroDivisionError("zero denominator")
        if den < 0:
            num = [-v for v in num]
            den = -den
        g = gcd(den, *num)
        if g > 1:
            num = [v // g for v in num]
            den //= g
        self.conductor = conductor
        self._num = tuple(num)
        self._den = den
        self._coeffs = None

    # construction ---------------------------------------------------

    @classmethod
    def from_group_ring(cls, n, acc, den=1):
        """Element sum_r acc[r] * zeta_n^r / den, ``acc`` indexed by exponent."""
        return cls(n, _basis(n).reduce(acc), den)

    @classmethod
    def from_coeffs(cls, n, coeffs):
        """Element sum_j coeffs[j] * zeta_n^j for rational ``coeffs``."""
        coeffs = [Fraction(c) for c in coeffs]
        den = lcm(1, *(c.denominator for c in coeffs))
        acc = [0] * n
        for j, c in enumerate(coeffs):
            acc[j % n] += c.numerator * (den // c.denominator)
        return cls.from_group_ring(n, acc, den)

    @classmethod
    def rational(cls, value, n=1):
        value = Fraction(value)
        num = [0] * euler_phi(n)
        num[0] = value.numerator
        return cls(n, num, value.denominator)

    # inspection -----------------------------------------------------

    @property
    def phi(self):
        return len(self._num)

    def is_zero(self):
        return not any(self._num)

    def is_rational(self):
        return not any(self._num[1:])

    def to_rational(self):
        if not self.is_rational():
            raise NotRational(f"element of Q(zeta_{self.conductor}) is not rational")
        return Fraction(self._num[0], self._den)

    @property
    def coeffs(self):
        """Power-basis coordinates modulo Phi_n, as Fractions of length phi(n)."""
        if self._coeffs is None:
            n = self.conductor
            basis = _basis(n)
            poly = [0] * n
            for i, v in enumerate(self._num):
                if v:
                    poly[basis.exponents[i]] += v
            cyc = cyclotomic_polynomial(n).coefficients
            deg = len(cyc) - 1
            for s in range(n - 1, deg - 1, -1):
                c = poly[s]
                if c:
                    base = s - deg
                    for j, y in enumerate(cyc):
                        if y:
                            poly[base + j] -= c * y
            self._coeffs = tuple(Fraction(v, self._den) for v in poly[:deg])
        return self._coeffs

    def to_complex(self, digits=60):
        """Numeric value with ``digits`` significant decimal digits (plus guard)."""
        ctx = mpmath.MPContext()
        ctx.dps = digits + 10
        n = self.conductor
        exps = _basis(n).exponents
        total = ctx.mpc(0)
        for i, v in enumerate(self._num):
            if v:
                total += v * ctx.expjpi(ctx.mpf(2 * exps[i]) / n)
        return total / self._den

    def __repr__(self):
        if self.is_rational():
            return f"CycloElement({self.conductor}, {self.to_rational()})"
        return f"CycloElement({self.conductor}, coeffs={[str(c) for c in self.coeffs]})"

    # lifting --------------------------------------------------------

    def lift(self, n):
        """The same number viewed in Q(zeta_n); n must be a multiple of the conductor."""
        if n == self.conductor:
            return self
        if n % self.conductor:
            raise ValueError(f"cannot lift conductor {self.conductor} to {n}")
        scale = n // self.conductor
        src = _basis(self.conductor).exponents
        dst = _basis(n)
        out = [0] * dst.phi
        plus, minus = dst.plus, dst.minus
        for i, v in enumerate(self._num):
            if v:
                r = src[i] * scale
                for j in plus[r]:
                    out[j] += v
                for j in minus[r]:
                    out[j] -= v
        return CycloElement(n, out, self._den)

    def _common(self, other):
        if not isinstance(other, CycloElement):
            other = Fraction(other)
            return self, CycloElement.rational(other, self.conductor)
        if other.conductor == self.conductor:
            return self, other
        if other.is_rational():
            return self, CycloElement.rational(other.to_rational(), self.conductor)
        if self.is_rational():
            return CycloElement.rational(self.to_rational(), other.conductor), other
        n = lcm(self.conductor, other.conductor)
        return self.lift(n), other.lift(n)

    # arithmetic -----------------------------------------------------

    def __neg__(self):
        return CycloElement(self.conductor, [-v for v in self._num], self._den)

    def __add__(self, other):
        if not isinstance(other, (CycloElement, int, Fraction)):
            return NotImplemented
        x, y = self._common(other)
        d = lcm(x._den, y._den)
        fx, fy = d // x._den, d // y._den
        return CycloElement(x.conductor, [u * fx + v * fy for u, v in zip(x._num, y._num)], d)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, (CycloElement, int, Fraction)):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def _scale(self, value):
        value = Fraction(value)
        return CycloElement(
            self.conductor, [v * value.numerator for v in self._num], self._den * value.denominator
        )

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self._scale(other)
        if not isinstance(other, CycloElement):
            return NotImplemented
        if other.is_rational():
            return self._scale(other.to_rational())
        if self.is_rational():
            return other._scale(self.to_rational())
        x, y = self._common(other)
        n = x.conductor
        basis = _basis(n)
        exps = basis.exponents
        xs = [(exps[i], v) for i, v in enumerate(x._num) if v]
        ys = [(exps[i], v) for i, v in enumerate(y._num) if v]
        acc = [0] * n
        for rx, vx in xs:
            for ry, vy in ys:
                r = rx + ry
                if r >= n:
                    r -= n
                acc[r] += vx * vy
        return CycloElement(n, basis.reduce(acc), x._den * y._den)

    __rmul__ = __mul__

    def inverse(self):
        """Multiplicative inverse via the extended Euclidean algorithm against Phi_n."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in a cyclotomic field")
        if self.is_rational():
            return CycloElement.rational(1 / self.to_rational(), self.conductor)
        n = self.conductor
        inv = inverse_mod(Polynomial(self.coeffs), cyclotomic_polynomial(n))
        return CycloElement.from_coeffs(n, inv.coefficients)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return self._scale(1 / Fraction(other))
        if not isinstance(other, CycloElement):
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, exponent):
        if exponent < 0:
            return self.inverse() ** -exponent
        result = CycloElement.rational(1, self.conductor)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and Fraction(self._num[0], self._den) == other
        if not isinstance(other, CycloElement):
            return NotImplemented
        x, y = self._common(other)
        return x._den == y._den and x._num == y._num

    __hash__ = None

    def conjugate(self):
        """Complex conjugate (the automorphism zeta -> zeta^-1)."""
        n = self.conductor
        exps = _basis(n).exponents
        acc = [0] * n
        for i, v in enumerate(self._num):
            if v:
                acc[-exps[i] % n] += v
        return CycloElement.from_group_ring(n, acc, self._den)

    @staticmethod
    def linear_combination(pairs, conductor=None):
        """sum(c * x for c, x in pairs) with a single normalization at the end."""
        pairs = [(Fraction(c), x) for c, x in pairs if c]
        if conductor is None:
            conductor = lcm(1, *(x.conductor for _, x in pairs if isinstance(x, CycloElement)
                                 and not x.is_rational()))
        phi = euler_phi(conductor)
        lifted = []
        for c, x in pairs:
            if not isinstance(x, CycloElement):
                x = CycloElement.rational(x, conductor)
            elif x.conductor != conductor:
                x = CycloElement.rational(x.to_rational(), conductor) if x.is_rational() else x.lift(conductor)
            lifted.append((c, x))
        den = lcm(1, *(c.denominator * x._den for c, x in lifted))
        out = [0] * phi
        for c, x in lifted:
            f = c.numerator * (den // (c.denominator * x._den))
            for i, v in enumerate(x._num):
                if v:
                    out[i] += f * v
        return CycloElement(conductor, out, den)


def root_of_unity(n, k=1):
    """zeta_n^k as an element of conductor n."""
    if n < 1:
        raise ValueError("n must be positive")
    acc = [0] * n
    acc[k % n] = 1
    return CycloElement.from_group_ring(n, acc)


def imaginary_unit():
    return root_of_unity(4, 1)


def cot_conductor(t):
    """Conductor in which cot(pi t) is represented: lcm(4, denominator of t)."""
    return lcm(4, Fraction(t).denominator)


def cot_exact(t):
    """cot(pi t) for rational non-integral t, exactly.

    Uses cot(pi t) = i (zeta + 1)/(zeta - 1) with zeta = e^(2 pi i t) of order
    q > 1, together with 1/(zeta - 1) = (1/q) sum_{j<q} j zeta^j.
    """
    t = Fraction(t)
    if t.denominator == 1:
        raise PoleError(f"cot(pi*{t}) is a pole")
    return _cot_exact(t - (t.numerator // t.denominator))


@lru_cache(maxsize=16384)
def _cot_exact(t):
    q = t.denominator
    p = t.numerator
    n = lcm(4, q)
    quarter = n // 4
    step = n // q
    acc = [0] * n
    acc[quarter] += q
    for j in range(1, q):
        acc[(quarter + p * j * step) % n] += 2 * j
    return CycloElement.from_group_ring(n, acc, q)


_powers_lock = threading.Lock()
_cot_powers = {}


def cot_power(t, e):
    """cot(pi t)**e, memoized per point (t already reduced mod 1)."""
    powers = _cot_powers.get(t)
    if powers is None or len(powers) <= e:
        with _powers_lock:
            powers = _cot_powers.get(t)
            if powers is None:
                c = _cot_exact(t)
                powers = [CycloElement.rational(1, c.conductor), c]
            powers = list(powers)
            while len(powers) <= e:
                powers.append(powers[-1] * powers[1])
            _cot_powers[t] = powers
    return powers[e]


def cot_derivative_exact(m, t):
    """The m-th derivative of cot evaluated at pi t, i.e. P_m(cot(pi t))."""
    t = Fraction(t)
    if t.denominator == 1:
        raise PoleError(f"cot^({m})(pi*{t}) is a pole")
    return _cot_derivative_exact(m, t - (t.numerator // t.denominator))


@lru_cache(maxsize=65536)
def _cot_derivative_exact(m, t):
    from .cotderiv import cot_derivative_polynomial

    poly = cot_derivative_polynomial(m).poly
    n = cot_conductor(t)
    return CycloElement.linear_combination(
        ((c, cot_power(t, e)) for e, c in enumerate(poly.coefficients) if c), conductor=n
    )


def to_rational(u):
    if isinstance(u, CycloElement):
        return u.to_rational()
    return Fraction(u)


def to_complex(u, digits=60):
    if isinstance(u, CycloElement):
        return u.to_complex(digits)
    ctx = mpmath.MPContext()
    ctx.dps = digits + 10
    u = Fraction(u)
    return ctx.mpc(ctx.mpf(u.numerator) / u.denominator)


def demote(u):
    """Return a Fraction when ``u`` is rational, else ``u`` unchanged."""
    if isinstance(u, CycloElement) and u.is_rational():
        return u.to_rational()
    return u
