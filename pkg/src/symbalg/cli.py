"""JSON command line front end.

Every verb prints one envelope {"status": "ok"|"error", "result": ...} on
stdout with sorted keys and exact integers only; exit codes are 0 for ok,
1 for a violated precondition and 2 for a parse error.  The ``demo`` verb
composes the headline computations into a single deterministic document.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import local as local_mod
from . import symbol as symbol_mod
from .eisenstein import (
    EisensteinInt,
    cubic_residue_symbol,
    cyclotomic_splitting,
    factor_rational_prime,
    format_eisenstein,
    parse_eisenstein,
    parse_eisenstein_fraction,
    splitting_in_kummer,
    valuation,
)
from .fields import QEPS, QQ, FieldDescriptor, ParseError, parse_element, parse_rational, sqrt_field
from .quaternion import (
    QuaternionAlgebra,
    classify_minus1_p,
    conic_point_sqrt3,
    gauss_representation,
    norm_form_zero_search,
    on_conic,
)

SEARCH_BOUND_ENV = "SYMBALG_SEARCH_BOUND"
DEFAULT_SEARCH_BOUND = 50


def _field_descriptor(spec: str) -> FieldDescriptor:
    if spec == "q":
        return QQ
    if spec == "qeps":
        return QEPS
    if spec.startswith("qsqrt:"):
        try:
            d = int(spec.split(":", 1)[1])
        except ValueError as exc:
            raise ParseError(f"bad field spec {spec!r}") from exc
        return sqrt_field(d)
    raise ParseError(f"unknown field {spec!r} (use q, qeps or qsqrt:D)")


def _parse_coords(desc: FieldDescriptor, text: str):
    parts = text.split(",")
    if len(parts) != 4:
        raise ParseError("quaternion coordinates must be x0,x1,x2,x3")
    return [parse_element(desc, part) for part in parts]


def _search_bound(value) -> int:
    if value is not None:
        return value
    env = os.environ.get(SEARCH_BOUND_ENV)
    if env is None:
        return DEFAULT_SEARCH_BOUND
    try:
        return int(env)
    except ValueError as exc:
        raise ParseError(f"{SEARCH_BOUND_ENV} must be an integer") from exc


def _point_json(point) -> dict:
    return {"x": str(point.x), "y": str(point.y), "z": str(point.z)}


def _prime_json(prime) -> dict:
    out = {
        "kind": prime.kind,
        "pi": format_eisenstein(prime.pi),
        "abs_norm": prime.abs_norm,
        "p": prime.p,
        "display": str(prime),
    }
    if prime.conjugate is not None:
        out["conjugate"] = format_eisenstein(prime.conjugate)
    return out


def _load_json(text: str) -> dict:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"malformed JSON: {exc}") from exc


def _symbol_algebra(args) -> symbol_mod.SymbolAlgebra:
    desc = _field_descriptor(args.field)
    if args.zeta is not None:
        zeta = parse_element(desc, args.zeta)
    elif args.n == 2:
        zeta = desc.lift(-1)
    elif args.n == 3 and desc == QEPS:
        zeta = desc.gen()
    else:
        raise ParseError("provide --zeta for this field/degree combination")
    return symbol_mod.SymbolAlgebra(
        desc, args.n, zeta, parse_element(desc, args.alpha), parse_element(desc, args.beta)
    )


# ---------------------------------------------------------------- handlers


def _handle_eisenstein(args):
    if args.verb == "factor":
        return _prime_json(factor_rational_prime(args.p)), None
    if args.verb == "symbol":
        prime = factor_rational_prime(args.p)
        value = cubic_residue_symbol(parse_eisenstein(args.alpha), prime)
        return {"symbol": str(value), "prime": str(prime)}, None
    if args.verb == "valuation":
        prime = factor_rational_prime(args.p)
        num, den = parse_eisenstein_fraction(args.x)
        return {"valuation": valuation(num, prime, den), "prime": str(prime)}, None
    if args.verb == "splitting":
        prime = factor_rational_prime(args.p)
        alpha = parse_eisenstein(args.alpha)
        data = splitting_in_kummer(alpha, prime)
        trace = [{"step": "cubic_symbol", "value": str(cubic_residue_symbol(alpha, prime))}]
        return {"efg": [data.e, data.f, data.g], "prime": str(prime)}, trace
    if args.verb == "cyclotomic":
        f, r = cyclotomic_splitting(args.p, args.l)
        return {"f": f, "r": r}, None
    raise ParseError(f"unknown eisenstein verb {args.verb!r}")


def _quaternion_algebra(args) -> QuaternionAlgebra:
    desc = _field_descriptor(args.field)
    return QuaternionAlgebra(desc, parse_element(desc, args.alpha), parse_element(desc, args.beta))


def _handle_quaternion(args):
    if args.verb == "mul":
        alg = _quaternion_algebra(args)
        a = alg.element(*_parse_coords(alg.desc, args.a))
        b = alg.element(*_parse_coords(alg.desc, args.b))
        return {"product": [str(c) for c in (a * b).coords]}, None
    if args.verb == "norm":
        alg = _quaternion_algebra(args)
        a = alg.element(*_parse_coords(alg.desc, args.a))
        return {
            "norm": str(a.norm()),
            "trace": str(a.trace()),
            "conjugate": [str(c) for c in a.conjugate().coords],
        }, None
    if args.verb == "classify":
        verdict = classify_minus1_p(args.p)
        out = {"algebra": {"alpha": "-1", "beta": str(args.p)}, "verdict": verdict.kind}
        if verdict.point is not None:
            out["point"] = _point_json(verdict.point)
        return out, None
    if args.verb == "conic-point":
        point = conic_point_sqrt3(args.p)
        return {"p": args.p, "point": _point_json(point), "verified": True}, None
    if args.verb == "gauss":
        a, b = gauss_representation(args.p)
        return {"a": a, "b": b}, None
    if args.verb == "search-zero":
        alg = QuaternionAlgebra(QQ, QQ.lift(parse_rational(args.alpha)), QQ.lift(parse_rational(args.beta)))
        bound = _search_bound(args.bound)
        witness = norm_form_zero_search(alg, bound)
        return {
            "bound": bound,
            "witness": None if witness is None else [str(c) for c in witness.coords],
        }, None
    raise ParseError(f"unknown quaternion verb {args.verb!r}")


def _handle_symbol(args):
    if args.verb == "mul":
        alg = _symbol_algebra(args)
        u = symbol_mod.element_from_json(alg, _load_json(args.u))
        v = symbol_mod.element_from_json(alg, _load_json(args.v))
        return {"product": symbol_mod.element_to_json(u * v)}, None
    if args.verb == "relations":
        alg = _symbol_algebra(args)
        return {"holds": symbol_mod.verify_relations(alg)}, None
    if args.verb == "rep":
        alg = _cubic_eps_algebra(args.alpha, args.beta)
        rep = symbol_mod.matrix_generators(alg)
        element = symbol_mod.element_from_json(alg, _load_json(args.element))
        matrix = rep.apply(element)
        return {"matrix": [[str(entry) for entry in row] for row in matrix]}, None
    if args.verb == "zero-divisor":
        alg = _cubic_eps_algebra(args.alpha, args.beta)
        u, v = symbol_mod.find_zero_divisor(alg)
        return {
            "u": symbol_mod.element_to_json(u),
            "v": symbol_mod.element_to_json(v),
            "product_zero": (u * v).is_zero(),
        }, None
    if args.verb == "crosscheck":
        alg = symbol_mod.SymbolAlgebra(
            QQ, 2, QQ.lift(-1), QQ.lift(parse_rational(args.alpha)), QQ.lift(parse_rational(args.beta))
        )
        return {"n": 2, "agrees": symbol_mod.quaternion_crosscheck(alg)}, None
    raise ParseError(f"unknown symbol verb {args.verb!r}")


def _cubic_eps_algebra(alpha_text: str, beta_text: str) -> symbol_mod.SymbolAlgebra:
    return symbol_mod.SymbolAlgebra(
        QEPS,
        3,
        QEPS.gen(),
        parse_element(QEPS, alpha_text),
        parse_element(QEPS, beta_text),
    )


def _local_spec(args) -> local_mod.LocalAlgebraSpec:
    num, den = parse_eisenstein_fraction(args.beta)
    return local_mod.LocalAlgebraSpec(
        parse_eisenstein(args.alpha), num, den, factor_rational_prime(args.p)
    )


def _handle_local(args):
    if args.verb == "classify":
        spec = _local_spec(args)
        report = local_mod.classify_report(spec)
        trace = [
            {"step": "cubic_symbol", "value": report["symbol"]},
            {"step": "valuation", "value": report["m"]},
            {"step": "residual_degree", "value": report["f"]},
        ]
        return report, trace
    if args.verb == "artin":
        spec = _local_spec(args)
        result = local_mod.artin_symbol(spec)
        return {"f": result.f, "exponent": result.exponent, "identity": result.exponent == 0}, None
    if args.verb == "prop32":
        return local_mod.report_inert_prime_power(args.alpha, args.p, args.l), None
    if args.verb == "prop33":
        return local_mod.report_split_prime_power(parse_eisenstein(args.alpha), args.p, args.l), None
    raise ParseError(f"unknown local verb {args.verb!r}")


def demo_report(bound: int = DEFAULT_SEARCH_BOUND) -> dict:
    """Fixed composition of the headline computations, fully deterministic."""
    division_alg = QuaternionAlgebra(QQ, QQ.lift(-1), QQ.lift(7))
    witness = norm_form_zero_search(division_alg, bound)
    h_part = {
        "alpha": "-1",
        "beta": "7",
        "bound": bound,
        "witness": None if witness is None else [str(c) for c in witness.coords],
        "division_consistent": witness is None,
    }

    conic_part = []
    for p in (7, 13, 31):
        a, b = gauss_representation(p)
        point = conic_point_sqrt3(p)
        from .fields import QSQRT3

        conic_part.append(
            {
                "p": p,
                "gauss": {"a": a, "b": b},
                "point": _point_json(point),
                "verified": on_conic(QSQRT3.lift(-1), QSQRT3.lift(p), point),
            }
        )

    divisor_part = []
    for alpha in (-1, 1):
        for beta in (-1, 1):
            alg = _cubic_eps_algebra(str(alpha), str(beta))
            u, v = symbol_mod.find_zero_divisor(alg)
            divisor_part.append(
                {
                    "alpha": str(alpha),
                    "beta": str(beta),
                    "u": symbol_mod.element_to_json(u),
                    "v": symbol_mod.element_to_json(v),
                    "product_zero": (u * v).is_zero(),
                }
            )

    sweep_part = []
    for p in (5, 7, 11, 13):
        for l in (1, 2):
            spec = local_mod.power_spec(EisensteinInt(2), p, l)
            report = local_mod.classify_report(spec)
            report.update({"p": p, "l": l, "alpha": "2"})
            sweep_part.append(report)

    return {
        "h_minus1_7": h_part,
        "conic_points": conic_part,
        "zero_divisors": divisor_part,
        "local_sweep": sweep_part,
    }


# ------------------------------------------------------------------ parser


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="symbalg", description="exact symbol/quaternion algebra toolkit")
    ap.add_argument("--pretty", action="store_true", help="indent the JSON envelope")
    ap.add_argument("--trace", action="store_true", help="include intermediate values where available")
    top = ap.add_subparsers(dest="group", required=True)

    eis = top.add_parser("eisenstein").add_subparsers(dest="verb", required=True)
    sub = eis.add_parser("factor")
    sub.add_argument("--p", type=int, required=True)
    sub = eis.add_parser("symbol")
    sub.add_argument("--alpha", required=True)
    sub.add_argument("--p", type=int, required=True)
    sub = eis.add_parser("valuation")
    sub.add_argument("--x", required=True)
    sub.add_argument("--p", type=int, required=True)
    sub = eis.add_parser("splitting")
    sub.add_argument("--alpha", required=True)
    sub.add_argument("--p", type=int, required=True)
    sub = eis.add_parser("cyclotomic")
    sub.add_argument("--p", type=int, required=True)
    sub.add_argument("--l", type=int, required=True)

    quat = top.add_parser("quaternion").add_subparsers(dest="verb", required=True)
    for verb in ("mul", "norm"):
        sub = quat.add_parser(verb)
        sub.add_argument("--field", default="q")
        sub.add_argument("--alpha", required=True)
        sub.add_argument("--beta", required=True)
        sub.add_argument("--a", required=True)
        if verb == "mul":
            sub.add_argument("--b", required=True)
    for verb in ("classify", "conic-point", "gauss"):
        sub = quat.add_parser(verb)
        sub.add_argument("--p", type=int, required=True)
    sub = quat.add_parser("search-zero")
    sub.add_argument("--alpha", required=True)
    sub.add_argument("--beta", required=True)
    sub.add_argument("--bound", type=int, default=None)

    sym = top.add_parser("symbol").add_subparsers(dest="verb", required=True)
    sub = sym.add_parser("mul")
    sub.add_argument("--field", default="qeps")
    sub.add_argument("--n", type=int, default=3)
    sub.add_argument("--zeta", default=None)
    sub.add_argument("--alpha", required=True)
    sub.add_argument("--beta", required=True)
    sub.add_argument("--u", required=True)
    sub.add_argument("--v", required=True)
    sub = sym.add_parser("relations")
    sub.add_argument("--field", default="qeps")
    sub.add_argument("--n", type=int, default=3)
    sub.add_argument("--zeta", default=None)
    sub.add_argument("--alpha", required=True)
    sub.add_argument("--beta", required=True)
    sub = sym.add_parser("rep")
    sub.add_argument("--alpha", required=True)
    sub.add_argument("--beta", required=True)
    sub.add_argument("--element", required=True)
    sub = sym.add_parser("zero-divisor")
    sub.add_argument("--alpha", required=True)
    sub.add_argument("--beta", required=True)
    sub = sym.add_parser("crosscheck")
    sub.add_argument("--alpha", required=True)
    sub.add_argument("--beta", required=True)

    loc = top.add_parser("local").add_subparsers(dest="verb", required=True)
    for verb in ("classify", "artin"):
        sub = loc.add_parser(verb)
        sub.add_argument("--alpha", required=True)
        sub.add_argument("--beta", required=True)
        sub.add_argument("--p", type=int, required=True)
    sub = loc.add_parser("prop32")
    sub.add_argument("--alpha", type=int, required=True)
    sub.add_argument("--p", type=int, required=True)
    sub.add_argument("--l", type=int, default=1)
    sub = loc.add_parser("prop33")
    sub.add_argument("--alpha", required=True)
    sub.add_argument("--p", type=int, required=True)
    sub.add_argument("--l", type=int, default=1)

    top.add_parser("demo")
    return ap


_HANDLERS = {
    "eisenstein": _handle_eisenstein,
    "quaternion": _handle_quaternion,
    "symbol": _handle_symbol,
    "local": _handle_local,
}


def _emit(envelope: dict, pretty: bool):
    if pretty:
        text = json.dumps(envelope, sort_keys=True, indent=2)
    else:
        text = json.dumps(envelope, sort_keys=True, separators=(",", ":"))
    print(text)


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.group == "demo":
            result, trace = demo_report(_search_bound(None)), None
        else:
            result, trace = _HANDLERS[args.group](args)
    except ParseError as exc:
        _emit({"status": "error", "result": {"code": "parse_error", "detail": str(exc)}}, args.pretty)
        return 2
    except (ValueError, ZeroDivisionError) as exc:
        _emit({"status": "error", "result": {"code": "domain_error", "precondition": str(exc)}}, args.pretty)
        return 1
    envelope = {"status": "ok", "result": result}
    if args.trace and trace is not None:
        envelope["trace"] = trace
    _emit(envelope, args.pretty)
    return 0


if __name__ == "__main__":
    sys.exit(main())
