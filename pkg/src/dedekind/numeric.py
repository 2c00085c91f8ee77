"""High-precision complex evaluation with explicit precision contexts.

Nothing here touches mpmath's global context; every routine works in the
private context carried by a :class:`PrecisionContext`.
"""

from fractions import Fraction

import mpmath

from .errors import NearPole

GUARD_DIGITS = 10


class PrecisionContext:
    """Working precision ``digits`` (+ guard digits) and the pole tolerance."""

    def __init__(self, digits=60, pole_tolerance=None):
        if digits < 1:
            raise ValueError("digits must be positive")
        self.digits = digits
        self.mp = mpmath.MPContext()
        self.mp.dps = digits + GUARD_DIGITS
        if pole_tolerance is None:
            pole_tolerance = self.mp.mpf(10) ** (-(digits / 2))
        pole_tolerance = self.mp.mpf(pole_tolerance)
        if not 0 < pole_tolerance < 0.25:
            raise ValueError("pole tolerance must lie in (0, 1/4)")
        self.pole_tolerance = pole_tolerance

    @property
    def tolerance(self):
        """Agreement threshold for comparisons at this precision."""
        return self.mp.mpf(10) ** (-(self.digits - 5))

    def convert(self, x):
        """Exact or string input to a context number (complex)."""
        if isinstance(x, Fraction):
            return self.mp.mpc(self.mp.mpf(x.numerator) / x.denominator)
        if isinstance(x, int):
            return self.mp.mpc(x)
        if isinstance(x, str):
            return self.mp.mpc(self.mp.mpmathify(x.replace(" ", "")))
        return self.mp.mpc(x)

    def __repr__(self):
        return f"PrecisionContext(digits={self.digits})"


def as_context(ctx):
    if isinstance(ctx, PrecisionContext):
        return ctx
    return PrecisionContext(60 if ctx is None else ctx)


def integer_distance(w, ctx):
    """Distance from the complex number w to the nearest integer."""
    w = ctx.convert(w)
    return abs(w - ctx.mp.nint(w.real))


def cot_numeric(w, ctx=None):
    """cot(pi w) at working precision."""
    ctx = as_context(ctx)
    w = ctx.convert(w)
    if integer_distance(w, ctx) < ctx.pole_tolerance:
        raise NearPole(f"cot(pi*w) evaluated within {mpmath.nstr(ctx.pole_tolerance, 5)} of a pole")
    mp = ctx.mp
    # for large |Im w| cot is +-i up to exponentially small terms; the
    # exponential form avoids overflow in mpmath's cot there
    if abs(w.imag) > 1:
        q = mp.expjpi(2 * w) if w.imag > 0 else mp.expjpi(-2 * w)
        val = mp.mpc(0, 1) * (q + 1) / (q - 1)
        return val if w.imag > 0 else -val
    # mp.cot(pi w) cancels badly near half-integers with tiny Im w
    return mp.cospi(w) / mp.sinpi(w)


def coth_numeric(w, ctx=None):
    """coth(pi w) = i cot(pi i w)."""
    ctx = as_context(ctx)
    w = ctx.convert(w)
    return ctx.mp.mpc(0, 1) * cot_numeric(ctx.mp.mpc(0, 1) * w, ctx)


def coth_distribution_check(a, z, ctx=None):
    """Compare sum_{k mod a} coth pi(ik/a + z) with a coth(pi a z)."""
    from .report import numeric_report

    ctx = as_context(ctx)
    mp = ctx.mp
    z = ctx.convert(z)
    i = mp.mpc(0, 1)
    lhs = mp.fsum(coth_numeric(i * k / a + z, ctx) for k in range(a))
    rhs = a * coth_numeric(a * z, ctx)
    return numeric_report("coth-distribution", {"a": a, "z": z}, lhs, rhs, ctx.tolerance)


def pole_distance(spec, k, ctx=None):
    """min over j of the distance of the j-th cotangent argument (term k) to the integers."""
    ctx = as_context(ctx)
    z0 = ctx.convert(spec.z0)
    best = None
    for aj, zj in zip(spec.a, spec.z):
        arg = aj * (k + z0) / spec.a0 - ctx.convert(zj)
        dist = integer_distance(arg, ctx)
        if best is None or dist < best:
            best = dist
    return best
