"""Exact rational scaffolding: Bernoulli data, sawtooth, divisor sums, Bezout.

Every value here is an exact :class:`fractions.Fraction` (aliased as
``BigRational``) or a Python ``int``.
"""

import threading
from fractions import Fraction
from functools import lru_cache
from math import comb, gcd, isqrt, prod

from .errors import NotCoprime
from .polynomial import Polynomial

BigRational = Fraction
RationalPolynomial = Polynomial

_bernoulli_cache = [Fraction(1)]
_bernoulli_lock = threading.Lock()


def bernoulli_number(k):
    """Return B_k with the convention B_1 = -1/2 (so that B_k = B_k(0)).

    Uses sum_{j<n} C(n, j) B_j = 0 for n >= 2.  The cache only ever grows;
    readers index a list that writers extend under a lock.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    cache = _bernoulli_cache
    if k < len(cache):
        return cache[k]
    with _bernoulli_lock:
        while len(cache) <= k:
            n = len(cache)
            if n > 1 and n % 2:
                cache.append(Fraction(0))
                continue
            total = sum(comb(n + 1, j) * cache[j] for j in range(n))
            cache.append(-total / (n + 1))
        return cache[k]


@lru_cache(maxsize=None)
def bernoulli_polynomial(k):
    """B_k(x) = sum_j C(k, j) B_j x^(k-j)."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    return Polynomial(comb(k, j) * bernoulli_number(k - j) for j in range(k + 1))


def fractional_part(x):
    x = Fraction(x)
    return x - (x.numerator // x.denominator)


def sawtooth(x):
    """((x)): fractional part minus 1/2, and 0 at the integers."""
    x = Fraction(x)
    if x.denominator == 1:
        return Fraction(0)
    return fractional_part(x) - Fraction(1, 2)


def bernoulli_function(k, x):
    """Periodized Bernoulli polynomial B_k({x}).

    For k = 1 the value at integers is 0, i.e. the sawtooth ((x)).
    """
    if k < 1:
        raise ValueError("k must be positive")
    x = Fraction(x)
    if k == 1:
        return sawtooth(x)
    return bernoulli_polynomial(k)(fractional_part(x))


@lru_cache(maxsize=4096)
def factorize(n):
    """Prime factorization as a tuple of ``(p, e)`` pairs, by trial division."""
    if n < 1:
        raise ValueError("n must be positive")
    out = []
    for p in (2, 3):
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        if e:
            out.append((p, e))
    p = 5
    while p * p <= n:
        for q in (p, p + 2):
            e = 0
            while n % q == 0:
                n //= q
                e += 1
            if e:
                out.append((q, e))
        p += 6
    if n > 1:
        out.append((n, 1))
    return tuple(out)


def divisors(n):
    """Positive divisors of n in increasing order."""
    small, large = [], []
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
    return small + large[::-1]


def euler_phi(n):
    return prod((p - 1) * p ** (e - 1) for p, e in factorize(n))


def divisor_sigma(m, n):
    """sigma_m(n) = sum of d**m over positive divisors d of n; exact for m < 0."""
    if n < 1:
        raise ValueError("n must be positive")
    if m >= 0:
        return Fraction(sum(d**m for d in divisors(n)))
    return sum((Fraction(1, d**-m) for d in divisors(n)), Fraction(0))


def moebius(n):
    if n < 1:
        raise ValueError("n must be positive")
    factors = factorize(n)
    if any(e > 1 for _, e in factors):
        return 0
    return -1 if len(factors) % 2 else 1


def extended_gcd(a, b):
    """Return ``(g, x, y)`` with ``a*x + b*y == g == gcd(a, b)``."""
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        return -a, -x0, -y0
    return a, x0, y0


def mod_inverse(a, b):
    """Inverse of a modulo b in [1, b]; b = 1 gives 1 by convention."""
    if b < 1:
        raise ValueError("modulus must be positive")
    if gcd(a, b) != 1:
        raise NotCoprime(f"gcd({a}, {b}) = {gcd(a, b)}")
    if b == 1:
        return 1
    return pow(a, -1, b)


def require_pairwise_coprime(values):
    values = list(values)
    for i, x in enumerate(values):
        for y in values[i + 1:]:
            if gcd(x, y) != 1:
                raise NotCoprime(f"{tuple(values)} are not pairwise coprime (gcd({x}, {y}) = {gcd(x, y)})")


def three_term_bezout(a, b, c):
    """Integers (A, B, C) with A*b*c + B*c*a + C*a*b = 1."""
    require_pairwise_coprime((a, b, c))
    g, u, v = extended_gcd(b * c, c * a)
    one, s, t = extended_gcd(g, a * b)
    assert one == 1
    return s * u, s * v, t
