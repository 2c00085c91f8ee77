"""Dense univariate polynomials with exact coefficients.

Coefficients are stored lowest degree first; the zero polynomial has no
coefficients.  Integer and rational coefficients both work; division needs
coefficients from a field (use :class:`fractions.Fraction`).
"""

from fractions import Fraction
from itertools import zip_longest


class Polynomial:
    __slots__ = ("coefficients",)

    def __init__(self, coefficients=()):
        coeffs = list(coefficients)
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self.coefficients = tuple(coeffs)

    @classmethod
    def monomial(cls, degree, coefficient=1):
        return cls([0] * degree + [coefficient])

    @property
    def degree(self):
        """Degree, with -1 for the zero polynomial."""
        return len(self.coefficients) - 1

    @property
    def leading(self):
        return self.coefficients[-1] if self.coefficients else 0

    def __len__(self):
        return len(self.coefficients)

    def __getitem__(self, i):
        if 0 <= i < len(self.coefficients):
            return self.coefficients[i]
        return 0

    def __iter__(self):
        return iter(self.coefficients)

    def __bool__(self):
        return bool(self.coefficients)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.coefficients == other.coefficients
        if isinstance(other, (int, Fraction)):
            return self.coefficients == Polynomial([other]).coefficients
        return NotImplemented

    def __hash__(self):
        return hash(self.coefficients)

    def __repr__(self):
        return f"Polynomial({list(self.coefficients)!r})"

    def __str__(self):
        if not self.coefficients:
            return "0"
        terms = []
        for deg in range(self.degree, -1, -1):
            c = self.coefficients[deg]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = -c if c < 0 else c
            if deg == 0:
                body = str(mag)
            else:
                power = "x" if deg == 1 else f"x^{deg}"
                body = power if mag == 1 else f"{mag}*{power}"
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    def __neg__(self):
        return Polynomial(-c for c in self.coefficients)

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return Polynomial(x + y for x, y in zip_longest(self, other, fillvalue=0))

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return Polynomial(x - y for x, y in zip_longest(self, other, fillvalue=0))

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Polynomial(c * other for c in self.coefficients)
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if not self or not other:
            return Polynomial()
        out = [0] * (len(self) + len(other) - 1)
        for i, x in enumerate(self.coefficients):
            if x:
                for j, y in enumerate(other.coefficients):
                    out[i + j] += x * y
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, exponent):
        result = Polynomial([1])
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc

    def derivative(self):
        return Polynomial(i * c for i, c in enumerate(self.coefficients) if i)

    def __divmod__(self, other):
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        rem = [Fraction(c) for c in self.coefficients]
        lead = Fraction(other.leading)
        shift = len(rem) - len(other)
        quot = [Fraction(0)] * max(shift + 1, 0)
        for s in range(shift, -1, -1):
            c = rem[s + other.degree] / lead
            if c:
                quot[s] = c
                for j, y in enumerate(other.coefficients):
                    rem[s + j] -= c * y
        return Polynomial(quot), Polynomial(rem)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]


def _coerce(value):
    if isinstance(value, Polynomial):
        return value
    if isinstance(value, (int, Fraction)):
        return Polynomial([value])
    return NotImplemented


def extended_gcd(f, g):
    """Return ``(d, s, t)`` with ``s*f + t*g == d`` and ``d`` monic."""
    r0, r1 = f, g
    s0, s1 = Polynomial([1]), Polynomial()
    t0, t1 = Polynomial(), Polynomial([1])
    while r1:
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if not r0:
        return r0, s0, t0
    lead = Fraction(1) / Fraction(r0.leading)
    return r0 * lead, s0 * lead, t0 * lead


def inverse_mod(f, modulus):
    """Inverse of ``f`` in Q[x]/(modulus); raises ZeroDivisionError if none exists."""
    d, s, _ = extended_gcd(f % modulus, modulus)
    if d.degree != 0:
        raise ZeroDivisionError("polynomial is not invertible modulo the given modulus")
    return s % modulus
