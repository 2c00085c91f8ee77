"""Verification reports and the JSON encoding shared by library and CLI."""

from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm
from typing import Any

import mpmath

from .cyclotomic import CycloElement


@dataclass
class VerificationReport:
    identity: str
    parameters: dict
    lhs: Any
    rhs: Any
    residual: Any
    passed: bool
    mode: str = "exact"
    details: list = field(default_factory=list)

    def __bool__(self):
        return self.passed

    def to_json(self, digits=60):
        out = {
            "identity": self.identity,
            "parameters": encode(self.parameters, digits),
            "lhs": encode(self.lhs, digits),
            "rhs": encode(self.rhs, digits),
            "residual": encode(self.residual, digits),
            "pass": self.passed,
            "mode": self.mode,
        }
        if self.details:
            out["details"] = encode(self.details, digits)
        return out


def exact_report(identity, parameters, lhs, rhs, details=()):
    """Report for an exact comparison; passes iff lhs - rhs is exactly zero."""
    from .cyclotomic import demote

    lhs, rhs = demote(lhs), demote(rhs)
    if isinstance(lhs, CycloElement) and isinstance(rhs, CycloElement) and lhs.conductor != rhs.conductor:
        n = lcm(lhs.conductor, rhs.conductor)
        lhs, rhs = lhs.lift(n), rhs.lift(n)
    residual = demote(lhs - rhs)
    passed = residual == 0
    return VerificationReport(identity, parameters, lhs, rhs, residual, passed, "exact", list(details))


def numeric_report(identity, parameters, lhs, rhs, tolerance, details=()):
    """Report for a floating comparison; the tolerance is relative once |lhs| or |rhs| exceeds 1."""
    residual = lhs - rhs
    passed = bool(abs(residual) < tolerance * max(1, abs(lhs), abs(rhs)))
    return VerificationReport(identity, parameters, lhs, rhs, residual, passed, "numeric", list(details))


def _is_mp(value):
    return type(value).__name__ in ("mpf", "mpc") and hasattr(value, "context")


def _mp_parts(value):
    """Real and imaginary parts of an mpmath number (any context) or a Python complex/float."""
    if _is_mp(value):
        ctx = value.context
        z = ctx.mpc(value)
        return ctx, z.real, z.imag
    z = complex(value)
    return mpmath.mp, mpmath.mpf(z.real), mpmath.mpf(z.imag)


def _mp_string(ctx, x, digits):
    if not x:
        return "0"
    return ctx.nstr(x, digits)


def encode(value, digits=60):
    """JSON-ready form: rationals as "p/q", cyclotomic values as dicts, complex as re/im strings."""
    if isinstance(value, bool) or value is None or isinstance(value, str):
        return value
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, CycloElement):
        if value.is_rational():
            return str(value.to_rational())
        return {"conductor": value.conductor, "coeffs": [str(c) for c in value.coeffs]}
    if isinstance(value, VerificationReport):
        return value.to_json(digits)
    if _is_mp(value) or isinstance(value, (complex, float)):
        ctx, re, im = _mp_parts(value)
        return {"re": _mp_string(ctx, re, digits), "im": _mp_string(ctx, im, digits), "digits": digits}
    if isinstance(value, dict):
        return {str(k): encode(v, digits) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [encode(v, digits) for v in value]
    if hasattr(value, "to_json"):
        return value.to_json()
    return str(value)
