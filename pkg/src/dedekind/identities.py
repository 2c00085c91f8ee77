"""Executable checks of the reciprocity, Fourier and Petersson-Knopp identities.

Every verifier evaluates both sides independently and returns a
:class:`VerificationReport`.  Exact mode compares exactly (rationals or
cyclotomic elements); numeric mode is only used where shifts are complex.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import comb, factorial, gcd, lcm, prod
from typing import Callable

from .arith import (
    bernoulli_function,
    bernoulli_number,
    divisor_sigma,
    divisors,
    moebius,
    require_pairwise_coprime,
    sawtooth,
    three_term_bezout,
)
from .cotderiv import laurent_constant_term
from .cyclotomic import (
    DEFAULT_CONDUCTOR_CAP,
    CycloElement,
    cot_derivative_exact,
    cot_exact,
    demote,
    root_of_unity,
)
from .errors import (
    AllIntegerShifts,
    AllZeroOrders,
    ConductorExceeded,
    NotCoprime,
    OddDimension,
    ParityError,
    SingularConfiguration,
    WeightViolation,
)
from .numeric import as_context
from .report import VerificationReport, exact_report, numeric_report
from .sums import (
    CotSumSpec,
    _shift,
    classical_dedekind_sum,
    dedekind_cotangent_sum,
    dedekind_cotangent_sum_numeric,
    dieter_cotangent_sum,
    required_conductor,
    zagier_sum,
)

__all__ = [
    "VerificationReport",
    "WeightFamily",
    "FamilyMember",
    "bernoulli_family",
    "cotangent_family",
    "verify_dedekind_reciprocity",
    "is_admissible",
    "verify_main_reciprocity",
    "phi_term",
    "verify_three_term_reciprocity",
    "verify_dieter_reciprocity",
    "zagier_h",
    "verify_zagier_reciprocity",
    "verify_fourier_lemma",
    "verify_sawtooth_fourier",
    "verify_petersson_knopp_classical",
    "verify_pk_cotangent",
    "verify_pk_generic",
    "verify_distribution_relation",
    "verify_pk_zagier",
    "verify_mobius_sum",
    "verify_mobius_inversion",
]


def _combine(pairs):
    """sum(c * v) over exact values, staying rational when possible."""
    rational = Fraction(0)
    cyclo = []
    for c, v in pairs:
        if isinstance(v, CycloElement):
            cyclo.append((c, v))
        else:
            rational += c * v
    if not cyclo:
        return rational
    return demote(CycloElement.linear_combination(cyclo + [(1, rational)]))


def combined_conductor(specs, cap=DEFAULT_CONDUCTOR_CAP):
    """lcm of the conductors of several exact sums; ConductorExceeded above ``cap``."""
    n = lcm(1, *(required_conductor(s) for s in specs))
    if cap is not None and n > cap:
        raise ConductorExceeded(n, cap)
    return n


def compositions(total, parts):
    """All tuples of ``parts`` nonnegative integers summing to ``total``."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(total + 1):
        for rest in compositions(total - first, parts - 1):
            yield (first,) + rest


# Dedekind reciprocity ------------------------------------------------


def verify_dedekind_reciprocity(a, b):
    """s(a,b) + s(b,a) = -1/4 + (a/b + 1/(ab) + b/a)/12, with s from its definition."""
    if gcd(a, b) != 1:
        raise NotCoprime(f"gcd({a}, {b}) = {gcd(a, b)}")
    lhs = classical_dedekind_sum(a, b, "direct") + classical_dedekind_sum(b, a, "direct")
    rhs = Fraction(-1, 4) + (Fraction(a, b) + Fraction(1, a * b) + Fraction(b, a)) / 12
    return exact_report("dedekind", {"a": a, "b": b}, lhs, rhs)


# main reciprocity ----------------------------------------------------


def _is_integer(x, ctx=None):
    if isinstance(x, Fraction):
        return x.denominator == 1
    w = ctx.convert(x)
    return abs(w - ctx.mp.nint(w.real)) < ctx.pole_tolerance


def is_admissible(a, z, ctx=None):
    """No two pole families (m + z_i)/a_i and (n + z_j)/a_j meet.

    They meet iff a_j z_i - a_i z_j lies in gcd(a_i, a_j) Z.
    """
    if ctx is not None:
        z = [ctx.convert(x) for x in z]
    else:
        z = [Fraction(x) for x in z]
    for i in range(len(a)):
        for j in range(i + 1, len(a)):
            g = gcd(a[i], a[j])
            if _is_integer((a[j] * z[i] - a[i] * z[j]) / g, ctx):
                return False
    return True


def _main_terms(a, m, z):
    """(coefficient, spec) pairs making up the left side of the main reciprocity law."""
    d = len(a) - 1
    for n in range(d + 1):
        rest = [j for j in range(d + 1) if j != n]
        lead = (-1) ** m[n] * factorial(m[n])
        for ls in compositions(m[n], d):
            coeff = Fraction(lead)
            for j, lj in zip(rest, ls):
                coeff *= Fraction(a[j] ** lj, factorial(lj))
            spec = CotSumSpec(
                a[n],
                tuple(a[j] for j in rest),
                m[n],
                tuple(m[j] + lj for j, lj in zip(rest, ls)),
                z[n],
                tuple(z[j] for j in rest),
            )
            yield coeff, spec


def main_reciprocity_rhs(m):
    d = len(m) - 1
    if d % 2 == 0 and not any(m):
        return Fraction((-1) ** (d // 2))
    return Fraction(0)


def verify_main_reciprocity(a, m, z=None, mode="exact", digits=60, conductor_cap=DEFAULT_CONDUCTOR_CAP):
    """Check the cyclic reciprocity law for Dedekind cotangent sums."""
    a = tuple(a)
    m = tuple(m)
    if len(a) < 2 or len(m) != len(a):
        raise ValueError("need a and m of equal length >= 2")
    if z is None:
        z = (0,) * len(a)
    spec_z = tuple(_shift(x) for x in z)
    if len(spec_z) != len(a):
        raise ValueError("z must have the same length as a")
    rational = all(isinstance(x, Fraction) for x in spec_z)
    if mode == "exact" and not rational:
        raise TypeError("exact mode requires rational shifts")
    ctx = as_context(digits)
    if not is_admissible(a, spec_z, None if rational else ctx):
        raise SingularConfiguration(f"shifts {list(map(str, spec_z))} give coinciding poles for a = {list(a)}")
    params = {"a": list(a), "m": list(m), "z": [str(x) for x in spec_z]}
    rhs = main_reciprocity_rhs(m)
    if mode == "exact":
        terms = list(_main_terms(a, m, spec_z))
        combined_conductor([s for _, s in terms], conductor_cap)
        lhs = _combine((c, dedekind_cotangent_sum(s, conductor_cap=conductor_cap)) for c, s in terms)
        return exact_report("main", params, lhs, rhs)
    mp = ctx.mp
    lhs = mp.mpc(0)
    for c, s in _main_terms(a, m, spec_z):
        lhs += mp.mpf(c.numerator) / c.denominator * dedekind_cotangent_sum_numeric(s, ctx)
    return numeric_report("main", params, lhs, mp.mpc(rhs.numerator), ctx.tolerance)


# three-term reciprocity ----------------------------------------------


def _check_orders(m):
    if any(x < 0 for x in m):
        raise ValueError("orders must be nonnegative")
    if not any(m):
        raise AllZeroOrders("the orders must not all be zero")
    if sum(m) % 2:
        raise ParityError("the total order must be even")


def phi_term(a0, a1, a2, m0, m1, m2):
    """Closed form of the three-term Bernoulli-cotangent reciprocity right side."""
    a = (a0, a1, a2)
    m = (m0, m1, m2)
    _check_orders(m)
    total_order = sum(m)
    first = Fraction(0)
    for i, j, l in ((0, 1, 2), (1, 0, 2), (2, 0, 1)):
        inner = Fraction(0)
        # 2 (k_j + k_l - 1) = M with 2 k_j >= m_j + 1 and 2 k_l >= m_l + 1
        half = total_order // 2 + 1
        for kj in range(1, half):
            kl = half - kj
            ej, el = 2 * kj - 1 - m[j], 2 * kl - 1 - m[l]
            if ej < 0 or el < 0:
                continue
            inner += (
                comb(m[i], ej)
                * bernoulli_number(2 * kj)
                * bernoulli_number(2 * kl)
                / (kj * kl)
                * a[j] ** ej
                * a[l] ** el
            )
        first += Fraction((-1) ** m[i], a[i] ** (m[i] + 1)) * inner
    first *= (-4) ** (total_order // 2)
    second = Fraction(0)
    for i, j, l in ((0, 1, 2), (0, 2, 1), (1, 2, 0)):
        sign = -1 if (m[i] + m[j] - m[l]) // 2 % 2 else 1
        second += Fraction(
            sign * factorial(m[i]) * factorial(m[j]) * a[l] ** (m[i] + m[j] + 1),
            factorial(m[i] + m[j] + 1) * a[i] ** (m[i] + 1) * a[j] ** (m[j] + 1),
        )
    big = total_order + 2
    return first + 2**big * bernoulli_number(big) / big * second


def verify_three_term_reciprocity(a0, a1, a2, m0, m1, m2, conductor_cap=DEFAULT_CONDUCTOR_CAP):
    a = (a0, a1, a2)
    m = (m0, m1, m2)
    require_pairwise_coprime(a)
    _check_orders(m)
    z = (Fraction(0),) * 3
    lhs = _combine(
        (c, dedekind_cotangent_sum(s, conductor_cap=conductor_cap)) for c, s in _main_terms(a, m, z)
    )
    rhs = phi_term(*a, *m)
    return exact_report("threeterm", {"a": list(a), "m": list(m)}, lhs, rhs)


# Dieter reciprocity --------------------------------------------------


def verify_dieter_reciprocity(a, b, c, x, y, z, conductor_cap=DEFAULT_CONDUCTOR_CAP):
    """Cyclic sum of three cotangent sums against -1 and the double-pole corrections."""
    require_pairwise_coprime((a, b, c))
    x, y, z = Fraction(x), Fraction(y), Fraction(z)
    if all(t.denominator == 1 for t in (x, y, z)):
        raise AllIntegerShifts("x, y, z must not all be integers")
    A, B, C = three_term_bezout(a, b, c)
    xp, yp, zp = c * y - b * z, a * z - c * x, b * x - a * y
    corrections = []
    if zp.denominator == 1:
        corrections.append((Fraction(-c, a * b), A * c * xp - (B * c + C * b) * yp))
    if xp.denominator == 1:
        corrections.append((Fraction(-a, b * c), B * a * yp - (C * a + A * c) * zp))
    if yp.denominator == 1:
        corrections.append((Fraction(-b, a * c), C * b * zp - (A * b + B * a) * xp))
    for _, t in corrections:
        if t.denominator == 1:
            raise SingularConfiguration("three pole families meet; the correction term is singular")
    cyclic = ((a, b, c, x, y, z), (b, c, a, y, z, x), (c, a, b, z, x, y))
    combined_conductor([CotSumSpec(r, (p, q), 0, (0, 0), w, (u, v)) for p, q, r, u, v, w in cyclic], conductor_cap)
    lhs = _combine(
        (1, dieter_cotangent_sum(p, q, r, u, v, w, conductor_cap=conductor_cap)) for p, q, r, u, v, w in cyclic
    )
    rhs = _combine([(1, Fraction(-1))] + [(coef, cot_derivative_exact(1, t)) for coef, t in corrections])
    params = {
        "a": a, "b": b, "c": c, "x": str(x), "y": str(y), "z": str(z),
        "bezout": [A, B, C], "primed": [str(xp), str(yp), str(zp)],
    }
    return exact_report("dieter", params, lhs, rhs)


# Zagier reciprocity --------------------------------------------------


def zagier_h(a):
    a = tuple(a)
    d = len(a) - 1
    if d % 2:
        raise OddDimension(f"d = {d} is odd")
    total = Fraction(0)
    for ks in compositions(d // 2, d + 1):
        term = Fraction(1)
        for k, aj in zip(ks, a):
            term *= bernoulli_number(2 * k) * aj ** (2 * k) / factorial(2 * k)
        total += term
    return 2**d * total / prod(a)


def verify_zagier_reciprocity(a, conductor_cap=DEFAULT_CONDUCTOR_CAP):
    a = tuple(a)
    require_pairwise_coprime(a)
    h = zagier_h(a)
    lhs = sum(
        (zagier_sum(a[n], a[:n] + a[n + 1:], conductor_cap=conductor_cap) for n in range(len(a))), Fraction(0)
    )
    return exact_report("zagier", {"a": list(a)}, lhs, 1 - h, details=[{"h": h}])


# discrete Fourier series ---------------------------------------------


def _fourier_report(identity, params, lhs_values, rhs_values):
    residuals = [demote(l - r) for l, r in zip(lhs_values, rhs_values)]
    passed = all(r == 0 for r in residuals)
    return VerificationReport(identity, params, lhs_values, rhs_values, residuals, passed, "exact")


def verify_fourier_lemma(m, p):
    """Bernoulli functions at n/p from cotangent derivatives, for every residue n."""
    if m < 2 or p < 1:
        raise ValueError("need m >= 2 and p >= 1")
    cots = [cot_derivative_exact(m - 1, Fraction(k, p)) for k in range(1, p)]
    scale = Fraction(m, (2 * p) ** m)
    i_power = root_of_unity(4, m)
    constant = bernoulli_number(m) / Fraction(-p) ** m
    lhs, rhs = [], []
    for n in range(p):
        inner = _combine((1, cot * root_of_unity(p, k * n)) for k, cot in enumerate(cots, start=1))
        lhs.append(bernoulli_function(m, Fraction(n, p)))
        rhs.append(_combine([(1, constant), (scale, i_power * inner if inner else Fraction(0))]))
    return _fourier_report("fourier", {"m": m, "p": p}, lhs, rhs)


def verify_sawtooth_fourier(p):
    """((n/p)) = (i/2p) sum_k cot(pi k/p) e^(2 pi i k n/p) for every residue n."""
    if p < 1:
        raise ValueError("p must be positive")
    cots = [cot_exact(Fraction(k, p)) for k in range(1, p)]
    i = root_of_unity(4, 1)
    lhs, rhs = [], []
    for n in range(p):
        inner = _combine((1, cot * root_of_unity(p, k * n)) for k, cot in enumerate(cots, start=1))
        lhs.append(sawtooth(Fraction(n, p)))
        rhs.append(_combine([(Fraction(1, 2 * p), i * inner if inner else Fraction(0))]))
    return _fourier_report("sawtooth-fourier", {"p": p}, lhs, rhs)


# weight families -----------------------------------------------------


@dataclass(frozen=True)
class FamilyMember:
    name: str
    weight: int
    function: Callable
    family: "WeightFamily" = None

    def __call__(self, x):
        return self.function(Fraction(x))


@dataclass(frozen=True)
class WeightFamily:
    """Period-1 functions f_1, ..., f_d with distribution weights m_1, ..., m_d."""

    name: str
    weights: tuple
    evaluator: Callable  # (j, x) -> exact value

    @property
    def d(self):
        return len(self.weights)

    def member(self, j):
        return FamilyMember(f"{self.name}[{j}]", self.weights[j], lambda x, j=j: self.evaluator(j, x), self)

    def product_sum(self, a, a_list):
        """S(a; a_1, ..., a_d) = sum_{k mod a} prod_j f_j(k a_j / a)."""
        if len(a_list) != self.d:
            raise ValueError(f"expected {self.d} multipliers")
        pairs = []
        for k in range(a):
            term = Fraction(1)
            for j, aj in enumerate(a_list):
                term = term * self.evaluator(j, Fraction(k * aj, a))
                if term == 0:
                    break
            pairs.append((1, term))
        return _combine(pairs)

    def to_json(self):
        return {"name": self.name, "weights": list(self.weights)}


def bernoulli_family(orders):
    """f_j = periodized B_{m_j}, of weight 1 - m_j."""
    orders = tuple(orders)
    if any(m < 1 for m in orders):
        raise ValueError("Bernoulli orders must be positive")
    return WeightFamily(
        "bernoulli" + ",".join(map(str, orders)),
        tuple(1 - m for m in orders),
        lambda j, x: bernoulli_function(orders[j], x),
    )


def regularized_cot_derivative(m, x):
    """cot^(m)(pi x), with the Laurent constant term at the integers."""
    x = Fraction(x)
    if x.denominator == 1:
        return laurent_constant_term(m)
    return demote(cot_derivative_exact(m, x))


def cotangent_family(orders):
    """f_j = cot^(m_j)(pi x), of weight m_j + 1 (regularized at the poles)."""
    orders = tuple(orders)
    if any(m < 0 for m in orders):
        raise ValueError("orders must be nonnegative")
    return WeightFamily(
        "cotangent" + ",".join(map(str, orders)),
        tuple(m + 1 for m in orders),
        lambda j, x: regularized_cot_derivative(orders[j], x),
    )


def _as_member(member):
    if isinstance(member, WeightFamily):
        if member.d != 1:
            raise ValueError("pass a single family member")
        return member.member(0)
    return member


def verify_distribution_relation(member, a, x, b=None, a_list=None):
    """Check the weight relation, its version with a multiplier b, and S(ab; a b) = b S(a; a).

    ``member`` is a :class:`FamilyMember` (or a one-function family).  The
    product-sum check needs ``a_list`` and uses the member's family.
    """
    member = _as_member(member)
    x = Fraction(x)
    f, w = member, member.weight
    details = []
    lhs = _combine((1, f(x + Fraction(k, a))) for k in range(a))
    rhs = _combine([(Fraction(a) ** w, f(a * x))])
    checks = [exact_report("weight", {"a": a, "x": str(x)}, lhs, rhs)]
    if b is not None:
        g = gcd(a, b)
        lhs1 = _combine((1, f(x + Fraction(k * b, a))) for k in range(a))
        rhs1 = _combine([(Fraction(g) ** (1 - w) * Fraction(a) ** w, f(a * x / g))])
        checks.append(exact_report("one", {"a": a, "b": b, "x": str(x)}, lhs1, rhs1))
    if a_list is not None:
        fam = member.family
        bb = 1 if b is None else b
        lhs2 = fam.product_sum(a * bb, [aj * bb for aj in a_list])
        rhs2 = _combine([(bb, fam.product_sum(a, a_list))])
        checks.append(exact_report("two", {"a": a, "b": bb, "a_list": list(a_list)}, lhs2, rhs2))
    details = [c.to_json() for c in checks]
    params = {"member": member.name, "weight": w, "a": a, "x": str(x), "b": b, "a_list": a_list}
    first = checks[0]
    return VerificationReport(
        "distribution",
        params,
        first.lhs,
        first.rhs,
        first.residual,
        all(c.passed for c in checks),
        "exact",
        details,
    )


_PRECHECK_POINTS = (Fraction(0), Fraction(1, 2), Fraction(1, 3), Fraction(2, 7))


def _precheck_family(family):
    for j in range(family.d):
        member = family.member(j)
        for a in (2, 3):
            for x in _PRECHECK_POINTS:
                if not verify_distribution_relation(member, a, x).passed:
                    raise WeightViolation(f"{member.name} fails the weight-{member.weight} relation at a={a}, x={x}")


# Petersson-Knopp -----------------------------------------------------


def _divisor_rs(n, d):
    for b in divisors(n):
        for rs in product(range(b), repeat=d):
            yield b, rs


def verify_petersson_knopp_classical(n, a, b):
    """sum_{d|n} sum_{k mod d} s((n/d) b + k a, a d) = sigma(n) s(b, a)."""
    if gcd(a, b) != 1:
        raise NotCoprime(f"gcd({a}, {b}) = {gcd(a, b)}")
    lhs = Fraction(0)
    for d in divisors(n):
        for k in range(d):
            lhs += classical_dedekind_sum((n // d) * b + k * a, a * d, "direct")
    rhs = divisor_sigma(1, n) * classical_dedekind_sum(b, a, "fast")
    return exact_report("pk-classical", {"n": n, "a": a, "b": b}, lhs, rhs)


def verify_pk_cotangent(n, a0, a, m0, m, singular="laurent", conductor_cap=DEFAULT_CONDUCTOR_CAP):
    """Divisor-sum identity for Dedekind cotangent sums with zero shifts.

    Singular factors are regularized by default; with ``singular="skip"`` the
    identity can fail when some order m_j is odd.
    """
    a, m = tuple(a), tuple(m)
    d = len(a)
    total_m = sum(m)
    pairs = []
    for b, rs in _divisor_rs(n, d):
        spec = CotSumSpec(a0 * b, tuple((n // b) * aj + r * a0 for aj, r in zip(a, rs)), m0, m)
        pairs.append((Fraction(b) ** (m0 + 1 - total_m - d), dedekind_cotangent_sum(spec, singular, conductor_cap)))
    lhs = _combine(pairs)
    rhs = _combine(
        [(n * divisor_sigma(-total_m - 1, n), dedekind_cotangent_sum(CotSumSpec(a0, a, m0, m), singular, conductor_cap))]
    )
    params = {"n": n, "a0": a0, "a": list(a), "m0": m0, "m": list(m), "singular": singular}
    return exact_report("pk-cotangent", params, lhs, rhs)


def verify_pk_generic(family, n, a, a_list, precheck=True):
    """Divisor-sum identity for an arbitrary family of Dedekind type."""
    a_list = tuple(a_list)
    if precheck:
        _precheck_family(family)
    d = family.d
    total_w = sum(family.weights)
    pairs = []
    for b, rs in _divisor_rs(n, d):
        args = [(n // b) * aj + r * a for aj, r in zip(a_list, rs)]
        pairs.append((Fraction(b) ** -total_w, family.product_sum(a * b, args)))
    lhs = _combine(pairs)
    rhs = _combine([(n * divisor_sigma(d - 1 - total_w, n), family.product_sum(a, a_list))])
    params = {"family": family.to_json(), "n": n, "a": a, "a_list": list(a_list)}
    return exact_report("pk-generic", params, lhs, rhs)


def verify_pk_zagier(n, a, conductor_cap=DEFAULT_CONDUCTOR_CAP):
    """sum_{b|n} b^(1-d) sum_r s(a0 b; (n/b) a_j + r_j a0) = sigma(n) s(a0; a)."""
    a = tuple(a)
    require_pairwise_coprime(a)
    a0, rest = a[0], a[1:]
    d = len(rest)
    if d % 2:
        raise OddDimension(f"d = {d} is odd")
    sign = (-1) ** (d // 2)
    pairs = []
    for b, rs in _divisor_rs(n, d):
        spec = CotSumSpec(a0 * b, tuple((n // b) * aj + r * a0 for aj, r in zip(rest, rs)))
        # inner arguments need not be coprime to a0 b; singular terms are skipped
        pairs.append((sign * Fraction(b) ** (1 - d), dedekind_cotangent_sum(spec, conductor_cap=conductor_cap)))
    lhs = _combine(pairs)
    rhs = divisor_sigma(1, n) * zagier_sum(a0, rest, conductor_cap=conductor_cap)
    return exact_report("pk-zagier", {"n": n, "a": list(a)}, lhs, rhs)


# Moebius identities --------------------------------------------------


def verify_mobius_sum(n):
    """sum_{d|n} mu(d) = [n = 1]."""
    lhs = Fraction(sum(moebius(d) for d in divisors(n)))
    return exact_report("mobius-sum", {"n": n}, lhs, Fraction(int(n == 1)))


def verify_mobius_inversion(f, a, b):
    """sum_{k <= ab, (k,b)=1} f(k) = sum_{t|b} mu(t) sum_{k <= ab/t} f(tk)."""
    lhs = sum(Fraction(f(k)) for k in range(1, a * b + 1) if gcd(k, b) == 1)
    rhs = sum(
        (moebius(t) * sum(Fraction(f(t * k)) for k in range(1, a * b // t + 1)) for t in divisors(b)), Fraction(0)
    )
    return exact_report("mobius-inversion", {"a": a, "b": b}, Fraction(lhs), rhs)
