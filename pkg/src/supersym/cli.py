"""Command-line front end: ``supersym <verb> [options]``.

Exit status 0 on success, 1 on a domain error, 2 on a usage or input error.
Errors are reported as ``{"error": code, "detail": ...}`` on stdout.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import core, groupoid, laurent, osp
from .core import NotSupersymmetric
from .partitions import Partition
from .poly import NotDivisible, Polynomial, evaluate, poly_from_json, poly_to_json


class UsageError(Exception):
    pass


class DomainError(Exception):
    def __init__(self, code, detail):
        super().__init__(detail)
        self.code = code
        self.detail = detail


def _load_json(text, what):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"malformed JSON for {what}: {exc}") from exc


def _read_input(args):
    source = getattr(args, "input", None)
    if source in (None, "-"):
        text = sys.stdin.read()
    else:
        try:
            with open(source) as fh:
                text = fh.read()
        except OSError as exc:
            raise UsageError(f"cannot read {source}: {exc}") from exc
    return _load_json(text, "input")


def _read_poly(args):
    data = _load_json(args.poly, "--poly") if getattr(args, "poly", None) else _read_input(args)
    try:
        return poly_from_json(data)
    except (ValueError, TypeError) as exc:
        raise UsageError(str(exc)) from exc


def _parse_point(text):
    try:
        return groupoid.Point.from_json(_load_json(text, "--point"))
    except (ValueError, TypeError, AttributeError) as exc:
        raise UsageError(f"bad point: {exc}") from exc


def _parse_ints(text, what):
    text = text.strip()
    try:
        if text.startswith("["):
            values = json.loads(text)
        elif text == "":
            values = []
        else:
            values = [int(v) for v in text.split(",")]
        if any(not isinstance(v, int) for v in values):
            raise ValueError
        return values
    except ValueError as exc:
        raise UsageError(f"{what} must be comma-separated integers or a JSON array") from exc


def _poly_out(p, args, names=None):
    if args.pretty:
        return p.to_str(names)
    return poly_to_json(p, names)


def cmd_superschur(args):
    lam = Partition(_parse_ints(args.partition, "--partition"))
    if args.factored:
        try:
            return _poly_out(core.super_schur_factored(lam, args.m, args.n), args)
        except ValueError as exc:
            raise DomainError("not_in_h0", str(exc)) from exc
    return _poly_out(core.super_schur(lam, args.m, args.n), args)


def cmd_check(args):
    p = _read_poly(args)
    return {"supersymmetric": core.is_supersymmetric(p)}


def cmd_decompose(args):
    p = _read_poly(args)
    dec = core.decompose(p, degree_cap=args.degree_cap)
    if args.pretty:
        return " + ".join(f"({c})*F{tuple(lam)}" for lam, c in dec.coeffs.items()) or "0"
    return dec.to_json()


def cmd_phi(args):
    p = _read_poly(args)
    if args.witness:
        if p.spec.laurent:
            raise UsageError("--witness is only available for polynomial (case S) input")
        try:
            return _poly_out(core.kernel_witness(p), args)
        except core.KernelWitnessError as exc:
            raise DomainError("no_kernel_witness", str(exc)) from exc
    if p.spec.laurent:
        try:
            return _poly_out(laurent.phi_l(p), args)
        except laurent.NotLaurentSupersymmetric as exc:
            raise DomainError("not_laurent_supersymmetric", str(exc)) from exc
    return _poly_out(core.phi_s(p), args)


def cmd_laurent_check(args):
    p = _read_poly(args)
    if not p.spec.laurent:
        raise UsageError("laurent-check needs a laurent polynomial")
    out = {"laurent_supersymmetric": laurent.is_laurent_supersymmetric(p)}
    if p.spec.m >= 1 and p.spec.n >= 1:
        out["conditions"] = laurent.cod_check(p, seed=args.seed)._asdict()
        try:
            r, s = laurent.decompose_r_sz(p)
            out["r"], out["s"] = poly_to_json(r), poly_to_json(s)
        except laurent.NotMember:
            pass
    return out


def cmd_k_element(args):
    sig = laurent.SignaturePair(_parse_ints(args.lam, "--lambda"), _parse_ints(args.mu, "--mu"))
    return _poly_out(laurent.k_element(sig), args)


def cmd_orbit(args):
    p = _parse_point(args.point)
    if args.weyl:
        points, truncated = groupoid.weyl_orbit(p), False
    else:
        points, truncated = groupoid.groupoid_orbit(p, args.depth_cap)
    if args.pretty:
        return "\n".join(str(q) for q in sorted(points, key=lambda q: (q.x, q.y))) + (
            "\n(truncated)" if truncated else ""
        )
    return {"points": groupoid.pointset_to_json(points), "truncated": truncated}


def cmd_atypicality(args):
    p = _parse_point(args.point)
    return {"r": groupoid.atypicality(p), "pairs": [[i + 1, j + 1] for i, j in groupoid.maximum_pairing(p)]}


def cmd_separate(args):
    p = _parse_point(args.point)
    data = _load_json(args.set, "--set") if args.set else _read_input(args)
    try:
        points = groupoid.pointset_from_json(data)
    except (ValueError, TypeError, AttributeError) as exc:
        raise UsageError(f"bad point set: {exc}") from exc
    try:
        f = groupoid.separating_polynomial(points, p, seed=args.seed)
    except groupoid.SeparationError as exc:
        raise DomainError("no_separator", str(exc)) from exc
    except ValueError as exc:
        raise DomainError("not_invariant", str(exc)) from exc
    return _poly_out(f, args)


def cmd_osp_check(args):
    f = _read_poly(args)
    spec = osp.OspSpec(args.kind, f.spec.m, f.spec.n)
    try:
        member = osp.ih_membership(f, spec)
    except osp.NotWInvariant as exc:
        raise DomainError("not_w_invariant", str(exc)) from exc
    out = {"kind": spec.kind.value, "member": member}
    if spec.kind is osp.OspKind.OSPEVEN:
        f1, fs = osp.sigma_decompose(f)
        names = f.spec.names("h", "h'")
        out["f1"], out["fsigma"] = poly_to_json(f1, names), poly_to_json(fs, names)
    return out


def cmd_eval(args):
    p = _read_poly(args)
    pt = _parse_point(args.point)
    try:
        return {"value": str(evaluate(p, pt))}
    except ZeroDivisionError as exc:
        raise DomainError("zero_coordinate", str(exc)) from exc
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def cmd_selftest(args):
    from .selftest import run_all

    results = run_all(seed=args.seed)
    if args.pretty:
        text = "\n".join(r.line() for r in results)
    else:
        text = {"suites": [r.__dict__ for r in results], "passed": all(r.passed for r in results)}
    return text, 0 if all(r.passed for r in results) else 1


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--degree-cap", type=int, default=core.DEFAULT_DEGREE_CAP)
    common.add_argument("--depth-cap", type=int, default=groupoid.DEFAULT_DEPTH_CAP)
    common.add_argument("--pretty", action="store_true", help="human-readable output")

    poly_in = argparse.ArgumentParser(add_help=False)
    poly_in.add_argument("--in", dest="input", help="JSON file ('-' or omitted: stdin)")
    poly_in.add_argument("--poly", help="inline polynomial JSON")

    parser = argparse.ArgumentParser(prog="supersym", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("superschur", parents=[common], help="super Schur polynomial F_lambda")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--partition", required=True, help="e.g. 2,1 or [2,1]")
    p.add_argument("--factored", action="store_true", help="use T*S_mu*S_nu (lambda in H0)")
    p.set_defaults(func=cmd_superschur)

    p = sub.add_parser("check", parents=[common, poly_in], help="supersymmetry test")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("decompose", parents=[common, poly_in], help="coefficients in the F_lambda basis")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("phi", parents=[common, poly_in], help="evaluation map to (m-1, n-1)")
    p.add_argument("--witness", action="store_true", help="return b with p = T*b instead")
    p.set_defaults(func=cmd_phi)

    p = sub.add_parser("laurent-check", parents=[common, poly_in], help="laurent supersymmetry conditions")
    p.set_defaults(func=cmd_laurent_check)

    p = sub.add_parser("k-element", parents=[common], help="kernel basis element K_{lambda,mu}")
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--mu", required=True)
    p.set_defaults(func=cmd_k_element)

    p = sub.add_parser("orbit", parents=[common], help="Weyl groupoid orbit of a point")
    p.add_argument("--point", required=True)
    p.add_argument("--weyl", action="store_true", help="block permutations only")
    p.set_defaults(func=cmd_orbit)

    p = sub.add_parser("atypicality", parents=[common], help="degree of atypicality of a point")
    p.add_argument("--point", required=True)
    p.set_defaults(func=cmd_atypicality)

    p = sub.add_parser("separate", parents=[common], help="separating supersymmetric polynomial")
    p.add_argument("--point", required=True)
    p.add_argument("--set", help="inline point-set JSON")
    p.add_argument("--in", dest="input", help="point-set JSON file ('-' or omitted: stdin)")
    p.set_defaults(func=cmd_separate)

    p = sub.add_parser("osp-check", parents=[common, poly_in], help="membership in I(h)")
    p.add_argument("--kind", required=True, choices=[k.value for k in osp.OspKind])
    p.set_defaults(func=cmd_osp_check)

    p = sub.add_parser("eval", parents=[common, poly_in], help="evaluate at a point")
    p.add_argument("--point", required=True)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("selftest", parents=[common], help="run the acceptance suites")
    p.set_defaults(func=cmd_selftest)
    return parser


def _emit(payload, pretty):
    if isinstance(payload, str):
        print(payload)
    else:
        print(json.dumps(payload, indent=2 if pretty else None))


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    status = 0
    try:
        result = args.func(args)
        if isinstance(result, tuple):
            result, status = result
    except UsageError as exc:
        _emit({"error": "usage", "detail": str(exc)}, False)
        return 2
    except DomainError as exc:
        _emit({"error": exc.code, "detail": exc.detail}, False)
        return 1
    except NotSupersymmetric as exc:
        _emit({"error": "not_supersymmetric", "detail": str(exc)}, False)
        return 1
    except NotDivisible as exc:
        _emit({"error": "not_divisible", "detail": str(exc)}, False)
        return 1
    except (ValueError, ArithmeticError) as exc:
        _emit({"error": "domain_error", "detail": str(exc)}, False)
        return 1
    _emit(result, args.pretty)
    return status


if __name__ == "__main__":
    sys.exit(main())
