"""Seeded random parameter sweeps over the identity verifiers.

Each sampler draws keyword arguments for one verifier from a
``random.Random``; tuples the verifier rejects as singular or too large for
exact arithmetic are redrawn, so a seed fixes the whole sequence.
"""

import random
from fractions import Fraction
from math import gcd

from . import identities as ids
from .errors import AllIntegerShifts, ConductorExceeded, SingularConfiguration
from .numeric import coth_distribution_check


def _coprime_tuple(rng, size, max_a, lo=1):
    while True:
        t = tuple(rng.randint(lo, max_a) for _ in range(size))
        if all(gcd(t[i], t[j]) == 1 for i in range(size) for j in range(i + 1, size)):
            return t


def _rational(rng, max_den):
    q = rng.randint(1, max_den)
    return Fraction(rng.randrange(q), q)


def sample_dedekind(rng, max_a=60):
    while True:
        a, b = rng.randint(1, max_a), rng.randint(1, max_a)
        if gcd(a, b) == 1:
            return {"a": a, "b": b}


def sample_main(rng, max_a=10, max_m=3, max_den=4):
    d = rng.choice((1, 2, 3))
    a = [rng.randint(1, max_a) for _ in range(d + 1)]
    if rng.random() < 1 / 3:
        m = [0] * (d + 1)
    else:
        m = [rng.randint(0, max_m) for _ in range(d + 1)]
    z = [_rational(rng, max_den) for _ in range(d + 1)]
    return {"a": a, "m": m, "z": z}


def sample_threeterm(rng, max_a=8, max_m=4):
    a = _coprime_tuple(rng, 3, max_a)
    while True:
        m = [rng.randint(0, max_m) for _ in range(3)]
        if any(m) and sum(m) % 2 == 0:
            break
    return dict(zip(("a0", "a1", "a2"), a)) | dict(zip(("m0", "m1", "m2"), m))


def sample_dieter(rng, max_a=12, max_den=4):
    a, b, c = _coprime_tuple(rng, 3, max_a)
    if rng.random() < 0.5:
        # force one of x', y', z' to be an integer
        which = rng.randrange(3)
        target = rng.randint(-3, 3)
        u, v = _rational(rng, max_den), _rational(rng, max_den)
        if which == 0:  # z' = b x - a y
            x, y, z = (target + a * u) / b, u, v
        elif which == 1:  # x' = c y - b z
            x, y, z = v, (target + b * u) / c, u
        else:  # y' = a z - c x
            x, y, z = u, v, (target + c * u) / a
    else:
        x, y, z = (_rational(rng, max_den) for _ in range(3))
    return {"a": a, "b": b, "c": c, "x": x % 1, "y": y % 1, "z": z % 1}


def sample_zagier(rng, max_a=11, d=None):
    d = d if d is not None else rng.choice((2, 4))
    if d == 4:
        max_a = min(max_a, 7)
    return {"a": list(_coprime_tuple(rng, d + 1, max_a))}


def sample_fourier(rng, max_a=10):
    return {"m": rng.randint(2, 6), "p": rng.randint(2, max_a)}


def sample_sawtooth_fourier(rng, max_a=12):
    return {"p": rng.randint(1, max_a)}


def sample_pk_classical(rng, max_a=8):
    a, b = _coprime_tuple(rng, 2, max_a)
    return {"n": rng.randint(1, 12), "a": a, "b": b}


def sample_pk_cotangent(rng, max_a=5):
    d = rng.choice((1, 2))
    return {
        "n": rng.randint(1, 6),
        "a0": rng.randint(1, max_a),
        "a": [rng.randint(1, max_a) for _ in range(d)],
        "m0": rng.randint(0, 2),
        "m": [rng.randint(0, 2) for _ in range(d)],
    }


def _random_family(rng):
    d = rng.choice((1, 2))
    if rng.random() < 0.5:
        return ids.bernoulli_family([rng.randint(1, 4) for _ in range(d)])
    return ids.cotangent_family([rng.randint(0, 2) for _ in range(d)])


def sample_pk_generic(rng, max_a=5):
    family = _random_family(rng)
    return {
        "family": family,
        "n": rng.randint(1, 6),
        "a": rng.randint(1, max_a),
        "a_list": [rng.randint(1, max_a) for _ in range(family.d)],
    }


def sample_pk_zagier(rng, max_a=5):
    return {"n": rng.randint(1, 4), "a": list(_coprime_tuple(rng, 3, max_a))}


def sample_distribution(rng, max_a=8):
    if rng.random() < 0.5:
        family = ids.bernoulli_family([rng.randint(1, 6)])
    else:
        family = ids.cotangent_family([rng.randint(0, 4)])
    return {
        "member": family.member(0),
        "a": rng.randint(1, max_a),
        "x": _rational(rng, 12) + rng.randint(-2, 2),
        "b": rng.randint(1, 8),
        "a_list": [rng.randint(1, 8)],
    }


def sample_coth(rng, max_a=10):
    re = Fraction(rng.randint(-2000, 2000), 1000)
    im = Fraction(rng.randint(-2000, 2000), 1000)
    return {"a": rng.randint(1, max_a), "z": complex(re, im)}


SWEEPS = {
    "dedekind": (sample_dedekind, ids.verify_dedekind_reciprocity),
    "main": (sample_main, ids.verify_main_reciprocity),
    "threeterm": (sample_threeterm, ids.verify_three_term_reciprocity),
    "dieter": (sample_dieter, ids.verify_dieter_reciprocity),
    "zagier": (sample_zagier, ids.verify_zagier_reciprocity),
    "fourier": (sample_fourier, ids.verify_fourier_lemma),
    "sawtooth-fourier": (sample_sawtooth_fourier, ids.verify_sawtooth_fourier),
    "pk-classical": (sample_pk_classical, ids.verify_petersson_knopp_classical),
    "pk-cotangent": (sample_pk_cotangent, ids.verify_pk_cotangent),
    "pk-generic": (sample_pk_generic, ids.verify_pk_generic),
    "pk-zagier": (sample_pk_zagier, ids.verify_pk_zagier),
    "distribution": (sample_distribution, ids.verify_distribution_relation),
    "coth": (sample_coth, coth_distribution_check),
}

_REJECT = (SingularConfiguration, ConductorExceeded, AllIntegerShifts)
MAX_REDRAWS = 1000


def sweep(identity, seed=0, count=100, max_a=None, conductor_cap=None):
    """Yield ``count`` reports for random admissible parameters of ``identity``."""
    sampler, verifier = SWEEPS[identity]
    rng = random.Random(seed)
    produced = 0
    redraws = 0
    while produced < count:
        params = sampler(rng) if max_a is None else sampler(rng, max_a=max_a)
        kwargs = dict(params)
        if conductor_cap is not None and "conductor_cap" in verifier.__code__.co_varnames:
            kwargs["conductor_cap"] = conductor_cap
        try:
            report = verifier(**kwargs)
        except _REJECT:
            redraws += 1
            if redraws > MAX_REDRAWS:
                raise RuntimeError(f"could not draw admissible parameters for {identity}") from None
            continue
        produced += 1
        yield report
