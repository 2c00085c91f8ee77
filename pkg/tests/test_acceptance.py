"""Acceptance criteria 1-12.

Each test prints exactly one line ``CRITERION n: PASS|FAIL ...`` (shown even
when pytest captures output) and then asserts the same condition.
"""

import itertools
import random
import time
from fractions import Fraction as F
from math import gcd

import mpmath
import pytest

from dedekind.arith import bernoulli_number
from dedekind.cyclotomic import CycloElement, to_complex
from dedekind.identities import (
    bernoulli_family,
    cotangent_family,
    main_reciprocity_rhs,
    verify_dedekind_reciprocity,
    verify_distribution_relation,
    verify_fourier_lemma,
    verify_petersson_knopp_classical,
    verify_pk_cotangent,
    verify_pk_generic,
    verify_pk_zagier,
    verify_sawtooth_fourier,
    verify_zagier_reciprocity,
    zagier_h,
)
from dedekind.numeric import PrecisionContext, coth_distribution_check
from dedekind.sums import (
    CotSumSpec,
    classical_dedekind_sum,
    dedekind_bernoulli_sum,
    dedekind_cotangent_sum,
    dedekind_cotangent_sum_numeric,
)
from dedekind.sweep import sweep
from corpus import CORPUS


@pytest.fixture
def record(capsys):
    def _record(number, ok, summary):
        with capsys.disabled():
            print(f"\nCRITERION {number:>2}: {'PASS' if ok else 'FAIL'} {summary}")
        assert ok, summary

    return _record


def pairwise_coprime(t):
    return all(gcd(x, y) == 1 for x, y in itertools.combinations(t, 2))


def test_criterion_01_classical_methods(record):
    start = time.perf_counter()
    ok = all(classical_dedekind_sum(1, 3, m) == F(1, 18) for m in ("direct", "cotangent", "fast"))
    ok &= all(classical_dedekind_sum(a, 1, m) == 0 for a in range(1, 101) for m in ("direct", "cotangent", "fast"))
    pairs = mismatches = 0
    for b in range(2, 201):
        for a in range(1, b):
            if gcd(a, b) != 1:
                continue
            pairs += 1
            direct = classical_dedekind_sum(a, b, "direct")
            if not (direct == classical_dedekind_sum(a, b, "cotangent") == classical_dedekind_sum(a, b, "fast")):
                mismatches += 1
    elapsed = time.perf_counter() - start
    ok &= mismatches == 0 and elapsed < 10
    record(1, ok, f"s(1,3)=1/18, s(a,1)=0, {pairs} coprime pairs agree across 3 methods, {mismatches} mismatches, {elapsed:.2f}s < 10s")


def test_criterion_02_dedekind_reciprocity(record):
    start = time.perf_counter()
    reports = [verify_dedekind_reciprocity(a, b) for b in range(2, 61) for a in range(1, b) if gcd(a, b) == 1]
    elapsed = time.perf_counter() - start
    failed = sum(not r.passed for r in reports)
    ok = failed == 0 and len(reports) >= 1000 and elapsed < 5
    record(2, ok, f"{len(reports)} coprime pairs, {failed} failures, {elapsed:.2f}s < 5s")


def test_criterion_03_main_reciprocity(record):
    start = time.perf_counter()
    reports = list(sweep("main", seed=2024, count=150))
    elapsed = time.perf_counter() - start
    failed = sum(not r.passed for r in reports)
    rule_ok = all(r.rhs == main_reciprocity_rhs(r.parameters["m"]) for r in reports)
    rule_ok &= all(
        r.rhs == ((-1) ** ((len(r.parameters["m"]) - 1) // 2) if not any(r.parameters["m"]) and len(r.parameters["m"]) % 2 else 0)
        for r in reports
    )
    dims = {len(r.parameters["a"]) - 1 for r in reports}
    nonzero_rhs = sum(r.rhs != 0 for r in reports)
    bounds = all(
        max(r.parameters["a"]) <= 10 and max(r.parameters["m"]) <= 3 and all(F(z).denominator <= 4 for z in r.parameters["z"])
        for r in reports
    )
    ok = failed == 0 and rule_ok and bounds and dims == {1, 2, 3} and nonzero_rhs > 0 and elapsed < 300
    record(3, ok, f"{len(reports)} admissible tuples (d in {sorted(dims)}, {nonzero_rhs} with RHS +-1), {failed} failures, RHS rule {'ok' if rule_ok else 'broken'}, {elapsed:.1f}s < 300s")


def test_criterion_04_apocot(record):
    cases = failed = 0
    for a in range(1, 13):
        for b in range(1, 8):
            for c in range(1, 8):
                if not pairwise_coprime((a, b, c)):
                    continue
                for m, n in itertools.product((2, 3, 4), repeat=2):
                    if (m - n) % 2:
                        continue
                    cases += 1
                    lhs = dedekind_bernoulli_sum(m, n, a, b, c)
                    cot = dedekind_cotangent_sum(CotSumSpec(a, (b, c), m + n - 2, (n - 1, m - 1)))
                    sign = -1 if (m - n) // 2 % 2 else 1
                    rhs = F(m * n * sign, 2 ** (m + n)) * cot + bernoulli_number(m) * bernoulli_number(n) / F(a) ** (m + n - 1)
                    failed += lhs != rhs
    record(4, failed == 0, f"{cases} cases (a<=12, b,c<=7, m,n in 2..4 same parity), {failed} failures")


def test_criterion_05_three_term(record):
    reports = list(sweep("threeterm", seed=5, count=60))
    failed = sum(not r.passed for r in reports)
    valid = all(
        max(r.parameters["a"]) <= 8 and max(r.parameters["m"]) <= 4 and sum(r.parameters["m"]) % 2 == 0 and any(r.parameters["m"])
        for r in reports
    )
    ok = failed == 0 and valid and len(reports) >= 50
    record(5, ok, f"{len(reports)} tuples (a_i<=8, orders<=4, even total, not all zero), {failed} failures")


def test_criterion_06_dieter(record):
    reports = list(sweep("dieter", seed=6, count=60))
    failed = sum(not r.passed for r in reports)
    delta = sum(any(F(p).denominator == 1 for p in r.parameters["primed"]) for r in reports)
    bounded = all(max(r.parameters[k] for k in "abc") <= 12 for r in reports)
    ok = failed == 0 and delta >= 10 and bounded and len(reports) >= 50
    record(6, ok, f"{len(reports)} triples <=12, {delta} with an integral x', y' or z', {failed} failures")


def test_criterion_07_zagier(record):
    triples = [t for t in itertools.product(range(1, 12), repeat=3) if pairwise_coprime(t)]
    failed = sum(not verify_zagier_reciprocity(t).passed for t in triples)
    fives = [t for t in itertools.product(range(1, 8), repeat=5) if pairwise_coprime(t) and len(set(t) - {1}) >= 3]
    sample = random.Random(7).sample(fives, 15)
    failed4 = sum(not verify_zagier_reciprocity(t).passed for t in sample)
    special = zagier_h((1, 1, 1)) == 1 and verify_zagier_reciprocity((3, 1, 1)).lhs == F(-2, 9)
    ok = failed == 0 and failed4 == 0 and special
    record(7, ok, f"{len(triples)} d=2 tuples and {len(sample)} d=4 tuples, {failed + failed4} failures, h(1,1,1)=1 and s(3;1,1)=-2/9 {'ok' if special else 'wrong'}")


def test_criterion_08_fast_classical(record):
    rng = random.Random(8)
    times = []
    reciprocity_ok = True
    while len(times) < 10:
        a, b = rng.getrandbits(256) | 1, rng.getrandbits(256) | 1
        if gcd(a, b) != 1:
            continue
        start = time.perf_counter()
        s_ab = classical_dedekind_sum(a, b, "fast")
        times.append(time.perf_counter() - start)
        s_ba = classical_dedekind_sum(b, a, "fast")
        reciprocity_ok &= s_ab + s_ba == F(a * a + b * b + 1, 12 * a * b) - F(1, 4)
    pairs = mismatches = 0
    for b in range(1, 501):
        for a in range(1, 501):
            if gcd(a, b) == 1:
                pairs += 1
                mismatches += classical_dedekind_sum(a, b, "fast") != classical_dedekind_sum(a, b, "direct")
    ok = max(times) < 0.1 and mismatches == 0 and reciprocity_ok
    record(8, ok, f"10 random 256-bit pairs, slowest {1000 * max(times):.2f} ms < 100 ms; {pairs} coprime pairs <=500 agree with direct, {mismatches} mismatches")


def test_criterion_09_fourier(record):
    lemma = [verify_fourier_lemma(m, p) for m in range(2, 7) for p in range(2, 11)]
    saw = [verify_sawtooth_fourier(p) for p in range(1, 13)]
    failed = sum(not r.passed for r in lemma + saw)
    residues = sum(len(r.lhs) for r in lemma)
    record(9, failed == 0, f"Bernoulli finite Fourier expansion for 2<=m<=6, 2<=p<=10 ({residues} residues) and sawtooth series for p<=12, {failed} failures")


def test_criterion_10_petersson_knopp(record):
    start = time.perf_counter()
    counts, failures = {}, {}

    def tally(name, report):
        counts[name] = counts.get(name, 0) + 1
        failures[name] = failures.get(name, 0) + (not report.passed)

    for n in range(1, 13):
        for a in range(1, 9):
            for b in range(1, 9):
                if gcd(a, b) == 1:
                    tally("classical", verify_petersson_knopp_classical(n, a, b))
    for n in range(1, 7):
        for a0 in range(1, 6):
            for d in (1, 2):
                for a in itertools.product(range(1, 6), repeat=d):
                    for m in itertools.product(range(3), repeat=d):
                        for m0 in range(3):
                            tally("cotangent", verify_pk_cotangent(n, a0, list(a), m0, list(m)))
    rng = random.Random(10)
    for n in range(1, 7):
        for orders in ([1], [2], [3], [1, 1], [2, 2], [1, 3], [2, 4]):
            for _ in range(3):
                a = rng.randint(1, 6)
                tally("generic-bernoulli", verify_pk_generic(bernoulli_family(orders), n, a, [rng.randint(1, 6) for _ in orders]))
        for orders in ([0], [1], [2], [0, 0], [1, 1], [0, 2], [1, 2]):
            for _ in range(3):
                a = rng.randint(1, 6)
                tally("generic-cotangent", verify_pk_generic(cotangent_family(orders), n, a, [rng.randint(1, 6) for _ in orders]))
    for n in range(1, 5):
        for t in itertools.product(range(1, 6), repeat=3):
            if pairwise_coprime(t):
                tally("zagier", verify_pk_zagier(n, t))
    elapsed = time.perf_counter() - start
    ok = sum(failures.values()) == 0 and elapsed < 600
    summary = ", ".join(f"{k} {counts[k] - failures[k]}/{counts[k]}" for k in counts)
    record(10, ok, f"{summary}, {elapsed:.1f}s < 600s")


def test_criterion_11_distribution(record):
    rng = random.Random(11)
    members = [bernoulli_family([m]).member(0) for m in range(1, 7)] + [cotangent_family([m]).member(0) for m in range(0, 5)]
    cases = failed = 0
    for member in members:
        for a in range(1, 9):
            for b in range(1, 9):
                x = F(rng.randint(-30, 30), rng.randint(1, 12))
                report = verify_distribution_relation(member, a, x, b=b, a_list=[rng.randint(1, 8)])
                cases += 1
                failed += not report.passed
    record(11, failed == 0, f"{cases} checks of the weight relation and both distribution identities (Bernoulli m<=6, cotangent m<=4, a,b<=8), {failed} failures")


def test_criterion_12_numeric(record):
    rng = random.Random(12)
    ctx = PrecisionContext(60)
    worst = mpmath.mpf(0)
    for _ in range(100):
        a = rng.randint(1, 10)
        z = complex(rng.uniform(-2, 2), rng.uniform(-2, 2))
        report = coth_distribution_check(a, z, ctx)
        worst = max(worst, abs(report.residual))
    worst_spec = mpmath.mpf(0)
    for spec in CORPUS:
        exact = dedekind_cotangent_sum(spec)
        numeric = dedekind_cotangent_sum_numeric(spec, 60)
        value = to_complex(exact, 60) if isinstance(exact, CycloElement) else ctx.convert(exact)
        worst_spec = max(worst_spec, abs(value - numeric))
    ok = worst < mpmath.mpf(10) ** -40 and worst_spec < mpmath.mpf(10) ** -50
    record(12, ok, f"coth residual max {mpmath.nstr(worst, 3)} < 1e-40 over 100 z; exact/numeric gap max {mpmath.nstr(worst_spec, 3)} < 1e-50 over {len(CORPUS)} specs")
