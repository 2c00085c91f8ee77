"""Command line interface: ``dedekind sum|verify|sweep|table ...``.

Exit status is 0 on success, 1 when a verification fails and 2 on usage or
parameter errors.
"""

import argparse
import json
import sys
from fractions import Fraction

from . import __version__
from . import identities as ids
from .arith import bernoulli_number, bernoulli_polynomial
from .cyclotomic import DEFAULT_CONDUCTOR_CAP, CycloElement
from .errors import DedekindError
from .numeric import PrecisionContext, coth_distribution_check
from .report import VerificationReport, encode
from .sums import (
    BERNDT_KINDS,
    CotSumSpec,
    _RATIONAL_LITERAL,
    apostol_sum,
    berndt_sum,
    classical_dedekind_sum,
    dedekind_bernoulli_sum,
    dedekind_cotangent_sum,
    dedekind_cotangent_sum_numeric,
    dedekind_rademacher_sum,
    dieter_cotangent_sum,
    generalized_dr_sum,
    plane_partition_sum,
    zagier_sum,
)
from .sweep import SWEEPS, sweep

EXIT_OK, EXIT_FAILED, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


# argument types ------------------------------------------------------


def rational(text):
    if not _RATIONAL_LITERAL.fullmatch(text):
        raise argparse.ArgumentTypeError(f"not a rational literal: {text!r} (use p/q or an integer)")
    return Fraction(text)


def shift(text):
    """A rational literal, or a decimal/complex literal kept as text for numeric mode."""
    if _RATIONAL_LITERAL.fullmatch(text):
        return Fraction(text)
    try:
        complex(text.replace(" ", "").replace("i", "j"))
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    return text.replace(" ", "").replace("i", "j")


def positive(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def nonneg(text):
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {text}")
    return value


def list_of(item):
    def parse(text):
        return [item(part) for part in text.split(",") if part.strip()]

    parse.__name__ = f"list of {item.__name__}"
    return parse


# output --------------------------------------------------------------


def format_text(value):
    if isinstance(value, VerificationReport):
        status = "PASS" if value.passed else "FAIL"
        return f"{status} {value.identity} {encode(value.parameters)}: lhs = {format_text(value.lhs)}, rhs = {format_text(value.rhs)}"
    if isinstance(value, CycloElement):
        if value.is_rational():
            return str(value.to_rational())
        return f"Q(zeta_{value.conductor}) [{', '.join(str(c) for c in value.coeffs)}]"
    if isinstance(value, list):
        return "[" + ", ".join(format_text(v) for v in value) + "]"
    enc = encode(value)
    if isinstance(enc, dict) and "re" in enc:
        return f"{enc['re']} + {enc['im']}*i"
    return str(enc)


def render(args, command, inputs, result, mode="exact"):
    if args.format == "json":
        doc = {
            "command": command,
            "inputs": encode(inputs, args.digits),
            "result": encode(result, args.digits),
            "mode": mode,
            "version": __version__,
        }
        return dump_json(doc)
    if command == "table bernoulli":
        return "\n".join(f"{r['k']:>3}  {str(r['B_k']):>14}  {r['B_k(x)']}" for r in result)
    if isinstance(result, list) and result and isinstance(result[0], VerificationReport):
        return "\n".join(format_text(r) for r in result)
    return format_text(result)


def dump_json(doc):
    return json.dumps(doc, indent=2, sort_keys=False, ensure_ascii=False)


def _emit(args, text):
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        sys.stdout.write(text + "\n")


def _status(result):
    reports = result if isinstance(result, list) else [result]
    if any(isinstance(r, VerificationReport) and not r.passed for r in reports):
        return EXIT_FAILED
    return EXIT_OK


# sum commands --------------------------------------------------------


def _require_exact(values):
    for v in values:
        if not isinstance(v, Fraction):
            raise UsageError(f"shift {v} is not rational; pass --numeric for decimal or complex shifts")


def cmd_sum(args):
    kind = args.sum_kind
    cap = args.conductor_cap
    mode = "exact"
    if kind == "classical":
        inputs = {"a": args.a, "b": args.b, "method": args.method}
        result = classical_dedekind_sum(args.a, args.b, args.method)
    elif kind == "cotangent":
        d = len(args.a)
        m = args.m if args.m is not None else [0] * d
        z = args.z if args.z is not None else [Fraction(0)] * d
        spec = CotSumSpec(args.a0, args.a, args.m0, m, args.z0, z)
        inputs = spec.to_json() | {"singular": args.singular}
        if args.numeric or not spec.is_rational:
            if not args.numeric:
                _require_exact((spec.z0,) + spec.z)
            mode = "numeric"
            result = dedekind_cotangent_sum_numeric(spec, PrecisionContext(args.digits), args.singular)
        else:
            result = dedekind_cotangent_sum(spec, args.singular, cap)
    elif kind == "zagier":
        inputs = {"a0": args.a0, "a": args.a}
        result = zagier_sum(args.a0, args.a, conductor_cap=cap)
    elif kind == "bernoulli":
        inputs = {"m": args.m, "n": args.n, "a": args.a, "b": args.b, "c": args.c}
        result = dedekind_bernoulli_sum(args.m, args.n, args.a, args.b, args.c)
    elif kind == "apostol":
        inputs = {"n": args.n, "a": args.a, "b": args.b}
        result = apostol_sum(args.n, args.a, args.b)
    elif kind == "rademacher":
        inputs = {"a": args.a, "b": args.b, "x": args.x, "y": args.y}
        result = dedekind_rademacher_sum(args.a, args.b, args.x, args.y)
    elif kind == "generalized-rademacher":
        inputs = {k: getattr(args, k) for k in ("m", "n", "a", "b", "c", "x", "y", "z")}
        result = generalized_dr_sum(args.m, args.n, args.a, args.b, args.c, args.x, args.y, args.z)
    elif kind == "dieter":
        inputs = {k: getattr(args, k) for k in ("a", "b", "c", "x", "y", "z")}
        result = dieter_cotangent_sum(args.a, args.b, args.c, args.x, args.y, args.z, conductor_cap=cap)
    elif kind == "berndt":
        inputs = {"kind": args.kind, "a": args.a, "b": args.b, "alpha": args.alpha, "beta": args.beta}
        result = berndt_sum(args.kind, args.a, args.b, args.alpha, args.beta)
    elif kind == "planepartition":
        inputs = {"m": args.m, "a": args.a, "b": args.b}
        result = plane_partition_sum(args.m, args.a, args.b)
    else:  # pragma: no cover - argparse restricts the choices
        raise UsageError(f"unknown sum {kind}")
    return f"sum {kind}", inputs, result, mode


# verify commands -----------------------------------------------------


def _family(name, orders):
    if name == "bernoulli":
        return ids.bernoulli_family(orders)
    return ids.cotangent_family(orders)


def cmd_verify(args):
    which = args.identity
    cap = args.conductor_cap
    mode = "exact"
    if which == "dedekind":
        inputs = {"a": args.a, "b": args.b}
        result = ids.verify_dedekind_reciprocity(args.a, args.b)
    elif which == "main":
        d1 = len(args.a)
        m = args.m if args.m is not None else [0] * d1
        z = args.z if args.z is not None else [Fraction(0)] * d1
        mode = "numeric" if args.numeric else "exact"
        if mode == "exact":
            _require_exact(z)
        inputs = {"a": args.a, "m": m, "z": [str(v) for v in z]}
        result = ids.verify_main_reciprocity(args.a, m, z, mode=mode, digits=args.digits, conductor_cap=cap)
    elif which == "threeterm":
        if len(args.a) != 3 or len(args.m) != 3:
            raise UsageError("threeterm needs exactly three moduli and three orders")
        inputs = {"a": args.a, "m": args.m}
        result = ids.verify_three_term_reciprocity(*args.a, *args.m, conductor_cap=cap)
    elif which == "dieter":
        inputs = {k: getattr(args, k) for k in ("a", "b", "c", "x", "y", "z")}
        result = ids.verify_dieter_reciprocity(args.a, args.b, args.c, args.x, args.y, args.z, conductor_cap=cap)
    elif which == "zagier":
        inputs = {"a": args.a}
        result = ids.verify_zagier_reciprocity(args.a, conductor_cap=cap)
    elif which == "fourier":
        inputs = {"m": args.m, "p": args.p}
        result = ids.verify_fourier_lemma(args.m, args.p)
    elif which == "sawtooth-fourier":
        inputs = {"p": args.p}
        result = ids.verify_sawtooth_fourier(args.p)
    elif which == "pk-classical":
        inputs = {"n": args.n, "a": args.a, "b": args.b}
        result = ids.verify_petersson_knopp_classical(args.n, args.a, args.b)
    elif which == "pk-cotangent":
        m = args.m if args.m is not None else [0] * len(args.a)
        inputs = {"n": args.n, "a0": args.a0, "a": args.a, "m0": args.m0, "m": m, "singular": args.singular}
        result = ids.verify_pk_cotangent(args.n, args.a0, args.a, args.m0, m, args.singular, cap)
    elif which == "pk-generic":
        family = _family(args.family, args.orders)
        inputs = {"family": args.family, "orders": args.orders, "n": args.n, "a": args.a, "a_list": args.a_list}
        result = ids.verify_pk_generic(family, args.n, args.a, args.a_list)
    elif which == "pk-zagier":
        inputs = {"n": args.n, "a": args.a}
        result = ids.verify_pk_zagier(args.n, args.a, conductor_cap=cap)
    elif which == "distribution":
        member = _family(args.family, [args.order]).member(0)
        inputs = {"family": args.family, "order": args.order, "a": args.a, "x": args.x, "b": args.b,
                  "a_list": args.a_list}
        result = ids.verify_distribution_relation(member, args.a, args.x, args.b, args.a_list)
    elif which == "coth":
        mode = "numeric"
        inputs = {"a": args.a, "z": args.z}
        result = coth_distribution_check(args.a, args.z, PrecisionContext(args.digits))
    else:  # pragma: no cover
        raise UsageError(f"unknown identity {which}")
    return f"verify {which}", inputs, result, mode


def cmd_sweep(args):
    reports = list(
        sweep(args.identity, seed=args.seed, count=args.count, max_a=args.max_a, conductor_cap=args.conductor_cap)
    )
    inputs = {"identity": args.identity, "seed": args.seed, "count": args.count, "max_a": args.max_a}
    mode = "numeric" if args.identity == "coth" else "exact"
    return f"sweep verify {args.identity}", inputs, reports, mode


def cmd_table(args):
    rows = [
        {"k": k, "B_k": bernoulli_number(k), "B_k(x)": str(bernoulli_polynomial(k))} for k in range(args.max_k + 1)
    ]
    return "table bernoulli", {"max_k": args.max_k}, rows, "exact"


# parser --------------------------------------------------------------


def _global_options(parser, suppress):
    default = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    parser.add_argument("--format", choices=("text", "json"), default=default("text"), help="output format")
    parser.add_argument("--digits", type=positive, default=default(60), help="decimal digits for numeric mode")
    parser.add_argument(
        "--conductor-cap", type=positive, default=default(DEFAULT_CONDUCTOR_CAP),
        help="largest cyclotomic conductor allowed in exact mode",
    )
    parser.add_argument("--out", default=default(None), help="write the output to this file instead of stdout")


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    _global_options(common, suppress=True)
    parser = argparse.ArgumentParser(prog="dedekind", description=__doc__.splitlines()[0])
    _global_options(parser, suppress=False)
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    top = parser.add_subparsers(dest="command", required=True)

    def leaf(subs, name, help_text):
        return subs.add_parser(name, parents=[common], help=help_text)

    # sum
    sum_p = top.add_parser("sum", help="evaluate a sum exactly (or numerically)")
    sums = sum_p.add_subparsers(dest="sum_kind", required=True)
    p = leaf(sums, "classical", "classical Dedekind sum s(a,b)")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=positive, required=True)
    p.add_argument("--method", choices=("direct", "cotangent", "fast"), default="fast")
    p = leaf(sums, "cotangent", "Dedekind cotangent sum c(a0|a; m0|m; z0|z)")
    p.add_argument("--a0", type=positive, required=True)
    p.add_argument("--a", type=list_of(positive), required=True)
    p.add_argument("--m0", type=nonneg, default=0)
    p.add_argument("--m", type=list_of(nonneg))
    p.add_argument("--z0", type=shift, default=Fraction(0))
    p.add_argument("--z", type=list_of(shift))
    p.add_argument("--numeric", action="store_true", help="evaluate in high-precision floating point")
    p.add_argument("--singular", choices=("skip", "laurent"), default="skip")
    p = leaf(sums, "zagier", "higher-dimensional Dedekind sum s(a0; a)")
    p.add_argument("--a0", type=positive, required=True)
    p.add_argument("--a", type=list_of(positive), required=True)
    p = leaf(sums, "bernoulli", "Dedekind Bernoulli sum s_{m,n}(a; b, c)")
    for name in ("m", "n", "a", "b", "c"):
        p.add_argument(f"--{name}", type=positive, required=True)
    p = leaf(sums, "apostol", "Apostol sum")
    for name in ("n", "a", "b"):
        p.add_argument(f"--{name}", type=positive, required=True)
    p = leaf(sums, "rademacher", "Dedekind-Rademacher sum s(a,b;x,y)")
    p.add_argument("--a", type=positive, required=True)
    p.add_argument("--b", type=positive, required=True)
    p.add_argument("--x", type=rational, default=Fraction(0))
    p.add_argument("--y", type=rational, default=Fraction(0))
    p = leaf(sums, "generalized-rademacher", "generalized Dedekind-Rademacher sum")
    for name in ("m", "n", "a", "b", "c"):
        p.add_argument(f"--{name}", type=positive, required=True)
    for name in ("x", "y", "z"):
        p.add_argument(f"--{name}", type=rational, default=Fraction(0))
    p = leaf(sums, "dieter", "cotangent sum c(a,b,c;x,y,z)")
    for name in ("a", "b", "c"):
        p.add_argument(f"--{name}", type=positive, required=True)
    for name in ("x", "y", "z"):
        p.add_argument(f"--{name}", type=rational, default=Fraction(0))
    p = leaf(sums, "berndt", "Berndt's modified Dedekind sums")
    p.add_argument("--kind", choices=BERNDT_KINDS, required=True)
    p.add_argument("--a", type=positive, required=True)
    p.add_argument("--b", type=positive, required=True)
    p.add_argument("--alpha", type=nonneg)
    p.add_argument("--beta", type=nonneg)
    p = leaf(sums, "planepartition", "sum of B_m(k/a) ((kb/a)) over 0 < k < a")
    for name in ("m", "a", "b"):
        p.add_argument(f"--{name}", type=positive, required=True)

    # verify
    ver_p = top.add_parser("verify", help="check one identity")
    ver = ver_p.add_subparsers(dest="identity", required=True)
    p = leaf(ver, "dedekind", "Dedekind reciprocity")
    p.add_argument("--a", type=positive, required=True)
    p.add_argument("--b", type=positive, required=True)
    p = leaf(ver, "main", "reciprocity law for Dedekind cotangent sums")
    p.add_argument("--a", type=list_of(positive), required=True)
    p.add_argument("--m", type=list_of(nonneg))
    p.add_argument("--z", type=list_of(shift))
    p.add_argument("--numeric", action="store_true")
    p = leaf(ver, "threeterm", "three-term Bernoulli-cotangent reciprocity")
    p.add_argument("--a", type=list_of(positive), required=True)
    p.add_argument("--m", type=list_of(nonneg), required=True)
    p = leaf(ver, "dieter", "Dieter's cotangent-sum reciprocity")
    for name in ("a", "b", "c"):
        p.add_argument(f"--{name}", type=positive, required=True)
    for name in ("x", "y", "z"):
        p.add_argument(f"--{name}", type=rational, default=Fraction(0))
    p = leaf(ver, "zagier", "Zagier reciprocity")
    p.add_argument("--a", type=list_of(positive), required=True)
    p = leaf(ver, "fourier", "discrete Fourier series of Bernoulli functions")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--p", type=positive, required=True)
    p = leaf(ver, "sawtooth-fourier", "discrete Fourier series of the sawtooth")
    p.add_argument("--p", type=positive, required=True)
    p = leaf(ver, "pk-classical", "Petersson-Knopp identity for s(a,b)")
    for name in ("n", "a", "b"):
        p.add_argument(f"--{name}", type=positive, required=True)
    p = leaf(ver, "pk-cotangent", "Petersson-Knopp identity for cotangent sums")
    p.add_argument("--n", type=positive, required=True)
    p.add_argument("--a0", type=positive, required=True)
    p.add_argument("--a", type=list_of(positive), required=True)
    p.add_argument("--m0", type=nonneg, default=0)
    p.add_argument("--m", type=list_of(nonneg))
    p.add_argument("--singular", choices=("skip", "laurent"), default="laurent")
    p = leaf(ver, "pk-generic", "Petersson-Knopp identity for a weight family")
    p.add_argument("--family", choices=("bernoulli", "cotangent"), required=True)
    p.add_argument("--orders", type=list_of(nonneg), required=True)
    p.add_argument("--n", type=positive, required=True)
    p.add_argument("--a", type=positive, required=True)
    p.add_argument("--a-list", type=list_of(positive), required=True)
    p = leaf(ver, "pk-zagier", "Petersson-Knopp identity for higher-dimensional sums")
    p.add_argument("--n", type=positive, required=True)
    p.add_argument("--a", type=list_of(positive), required=True)
    p = leaf(ver, "distribution", "distribution relations of a weight-family member")
    p.add_argument("--family", choices=("bernoulli", "cotangent"), required=True)
    p.add_argument("--order", type=nonneg, required=True)
    p.add_argument("--a", type=positive, required=True)
    p.add_argument("--x", type=rational, default=Fraction(0))
    p.add_argument("--b", type=positive)
    p.add_argument("--a-list", type=list_of(positive))
    p = leaf(ver, "coth", "coth distribution identity (numeric)")
    p.add_argument("--a", type=positive, required=True)
    p.add_argument("--z", type=shift, required=True)

    # sweep
    sw_p = top.add_parser("sweep", help="randomized identity sweeps")
    sw = sw_p.add_subparsers(dest="sweep_kind", required=True)
    p = leaf(sw, "verify", "check an identity on seeded random parameters")
    p.add_argument("identity", choices=sorted(SWEEPS))
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=positive, default=100)
    p.add_argument("--max-a", type=positive)

    # table
    tab_p = top.add_parser("table", help="tables of constants")
    tab = tab_p.add_subparsers(dest="table_kind", required=True)
    p = leaf(tab, "bernoulli", "Bernoulli numbers and polynomials")
    p.add_argument("--max-k", type=nonneg, default=10)
    return parser


HANDLERS = {"sum": cmd_sum, "verify": cmd_verify, "sweep": cmd_sweep, "table": cmd_table}


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        command, inputs, result, mode = HANDLERS[args.command](args)
        text = render(args, command, inputs, result, mode)
    except (UsageError, DedekindError, ValueError, TypeError) as exc:
        print(f"dedekind: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    _emit(args, text)
    return _status(result)


def entry_point():
    sys.exit(main())


if __name__ == "__main__":
    entry_point()
