"""Command-line frontend: exact curve invariants as JSON or aligned text.

Exit codes: 0 on success, 1 on domain errors (e.g. Picard computation in
positive genus), 2 on argument/parse errors.  JSON mode (--json) is the
stable machine contract; rationals appear as "numerator/denominator"
strings, never floats.  Text mode is for humans and may change.
"""

from __future__ import annotations

import argparse
import json
import sys
from contextlib import redirect_stderr, redirect_stdout
from fractions import Fraction
from typing import Sequence, TextIO

from . import picdiv, sheafclass
from .abgroup import AbelianPresentation, adjoin_fractions, invariants
from .classify import classify
from .weightedk import WeightedCurveSpec, WeightedLattice, build
from .zlinalg import IntMatrix


def _weights_arg(text: str) -> tuple[int, ...]:
    if not text.strip():
        return ()
    try:
        return tuple(int(token.strip()) for token in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"weights must be comma-separated integers, got {text!r}")


def _vector_arg(text: str) -> tuple[int, ...]:
    try:
        parts = tuple(int(token.strip()) for token in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"vectors must be comma-separated integers, got {text!r}")
    if not parts:
        raise argparse.ArgumentTypeError("vectors must be nonempty")
    return parts


def _divisor_arg(text: str) -> sheafclass.Divisor:
    coefficients: dict[str, int] = {}
    if text.strip():
        for token in text.split(","):
            name, sep, mult = token.strip().partition(":")
            if not sep or not name:
                raise argparse.ArgumentTypeError(
                    f"divisor entries must look like name:multiplicity, got {token!r}"
                )
            try:
                coefficients[name] = coefficients.get(name, 0) + int(mult)
            except ValueError:
                raise argparse.ArgumentTypeError(f"multiplicity must be an integer in {token!r}")
    return sheafclass.Divisor(coefficients)


def _rational_arg(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"expected a rational like -1/42, got {text!r}")


def _rat(value: Fraction) -> str:
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


def _spec(args: argparse.Namespace) -> WeightedCurveSpec:
    return WeightedCurveSpec.from_weights(args.genus, args.weights)


def _lattice(args: argparse.Namespace) -> WeightedLattice:
    return build(_spec(args))


def _matrix_lines(matrix: IntMatrix) -> list[str]:
    return str(matrix).splitlines()


def _cmd_invariants(args):
    spec = _spec(args)
    result = classify(spec)
    payload = {
        "chi": _rat(result.chi),
        "pbar": spec.pbar,
        "delta": _rat(-result.chi),
        "rank": 2 + sum(p - 1 for p in spec.weights),
        "rep_type": result.rep_type.value,
        "geometry": result.geometry.value,
        "exclusion_flag": result.exclusion_flag,
    }
    text = [f"{key}: {json.dumps(value) if isinstance(value, bool) else value}" for key, value in payload.items()]
    return payload, text


def _cmd_matrix(args):
    lattice = _lattice(args)
    matrix = lattice.gram if args.command == "gram" else lattice.tau
    payload = {
        "matrix": [list(row) for row in matrix],
        "basis": list(lattice.basis_labels),
    }
    text = ["basis: " + " ".join(lattice.basis_labels)] + _matrix_lines(matrix)
    return payload, text


def _cmd_coxeter_poly(args):
    lattice = _lattice(args)
    poly = lattice.coxeter_polynomial()
    factored = " * ".join(["(x-1)^2"] + [f"v{p}" for p in lattice.spec.weights])
    payload = {"coefficients": list(poly.coefficients), "factored": factored}
    text = [f"coxeter polynomial: {poly}", f"coefficients: {list(poly.coefficients)}", f"factored: {factored}"]
    return payload, text


def _cmd_euler(args):
    lattice = _lattice(args)
    if args.averaged:
        value = lattice.averaged_euler_form(args.u, args.v)
        rendered = _rat(value)
    else:
        rendered = lattice.euler_form(args.u, args.v)
    payload = {"value": rendered}
    return payload, [f"value: {rendered}"]


def _cmd_rr(args):
    lattice = _lattice(args)
    averaged = lattice.averaged_euler_form(args.u, args.v)
    riemann_roch = lattice.riemann_roch(args.u, args.v)
    payload = {
        "averaged": _rat(averaged),
        "riemann_roch": _rat(riemann_roch),
        "match": averaged == riemann_roch,
    }
    text = [
        f"averaged euler form: {_rat(averaged)}",
        f"riemann-roch value:  {_rat(riemann_roch)}",
        f"match: {json.dumps(averaged == riemann_roch)}",
    ]
    return payload, text


def _cmd_class(args):
    lattice = _lattice(args)
    cls = sheafclass.line_bundle_class(lattice, args.divisor)
    rank, degree = sheafclass.rank_degree(lattice, cls)
    payload = {"coordinates": list(cls.coordinates), "rank": rank, "degree": degree}
    text = [
        "basis: " + " ".join(lattice.basis_labels),
        f"coordinates: {list(cls.coordinates)}",
        f"rank: {rank}",
        f"degree: {degree}",
    ]
    return payload, text


def _cmd_shift(args):
    lattice = _lattice(args)
    shifted = sheafclass.point_shift(lattice, args.u, args.point)
    payload = {"coordinates": list(shifted.coordinates)}
    return payload, [f"coordinates: {list(shifted.coordinates)}"]


def _cmd_picard(args):
    spec = _spec(args)
    if spec.genus != 0:
        raise ValueError("picard requires genus 0 (higher genus class groups are not finitely generated)")
    weights = spec.weights
    from_lgroup = invariants(picdiv.lgroup(weights))
    from_fractions = invariants(
        adjoin_fractions(AbelianPresentation.free(1), [(1,)] * len(weights), list(weights))
    )
    from_k0 = invariants(picdiv.cl_from_k0(spec))
    agree = from_lgroup == from_fractions == from_k0
    payload = {"rank": from_lgroup.free_rank, "torsion": list(from_lgroup.torsion), "agree": agree}
    text = [
        f"rank: {from_lgroup.free_rank}",
        f"torsion: {list(from_lgroup.torsion)}",
        f"agree: {json.dumps(agree)}",
    ]
    return payload, text


def _cmd_equiv(args):
    spec = _spec(args)
    equivalent = picdiv.linearly_equivalent(spec, args.d1, args.d2)
    return {"equivalent": equivalent}, [f"equivalent: {json.dumps(equivalent)}"]


def _cmd_hurwitz(args):
    value = picdiv.riemann_hurwitz(args.chi, args.order)
    return {"value": _rat(value)}, [f"value: {_rat(value)}"]


def _add_spec_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--genus", type=int, required=True, help="genus of the underlying curve")
    parser.add_argument(
        "--weights",
        type=_weights_arg,
        default=(),
        help="comma-separated weights, e.g. 2,3,5 (empty for an unweighted curve)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wpcurve",
        description="Exact K-theoretic invariants of weighted smooth projective curves.",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    def subcommand(name: str, handler, help_text: str, spec_options: bool = True):
        sub = subparsers.add_parser(name, help=help_text)
        if spec_options:
            _add_spec_options(sub)
        sub.add_argument("--json", action="store_true", help="emit stable JSON instead of text")
        sub.set_defaults(handler=handler)
        return sub

    subcommand("invariants", _cmd_invariants, "Euler characteristic, type and geometry labels")
    subcommand("gram", _cmd_matrix, "Gram matrix of the Euler form with basis labels")
    subcommand("coxeter", _cmd_matrix, "Coxeter matrix with basis labels")
    subcommand("coxeter-poly", _cmd_coxeter_poly, "Coxeter polynomial and its tube factorization")

    euler = subcommand("euler", _cmd_euler, "Euler pairing of two coordinate vectors")
    euler.add_argument("--u", type=_vector_arg, required=True)
    euler.add_argument("--v", type=_vector_arg, required=True)
    euler.add_argument("--averaged", action="store_true", help="tau-averaged pairing")

    rr = subcommand("rr", _cmd_rr, "Both sides of weighted Riemann-Roch for two vectors")
    rr.add_argument("--u", type=_vector_arg, required=True)
    rr.add_argument("--v", type=_vector_arg, required=True)

    cls = subcommand("class", _cmd_class, "K-class, rank and degree of a divisor's line bundle")
    cls.add_argument("--divisor", type=_divisor_arg, required=True, help="e.g. x1:2,y:-1")

    shift = subcommand("shift", _cmd_shift, "Point-shift a coordinate vector")
    shift.add_argument("--point", required=True)
    shift.add_argument("--u", type=_vector_arg, required=True)

    subcommand("picard", _cmd_picard, "Picard group invariants via three constructions")

    equiv = subcommand("equiv", _cmd_equiv, "Linear equivalence of two divisors")
    equiv.add_argument("--d1", type=_divisor_arg, required=True)
    equiv.add_argument("--d2", type=_divisor_arg, required=True)

    hurwitz = subcommand("hurwitz", _cmd_hurwitz, "Euler characteristic of an orbifold quotient", spec_options=False)
    hurwitz.add_argument("--chi", type=_rational_arg, required=True)
    hurwitz.add_argument("--order", type=int, required=True)

    return parser


def run(argv: Sequence[str] | None = None, stdout: TextIO | None = None, stderr: TextIO | None = None) -> int:
    """Parse arguments, execute one subcommand, and return the exit code."""
    out = stdout if stdout is not None else sys.stdout
    err = stderr if stderr is not None else sys.stderr
    parser = build_parser()
    try:
        with redirect_stdout(out), redirect_stderr(err):
            args = parser.parse_args(argv)
    except SystemExit as exit_request:
        code = exit_request.code
        return code if isinstance(code, int) else 2
    try:
        payload, text = args.handler(args)
    except ValueError as domain_error:
        print(f"error: {domain_error}", file=err)
        return 1
    if args.json:
        print(json.dumps(payload), file=out)
    else:
        print("\n".join(text), file=out)
    return 0


def main() -> None:
    sys.exit(run())
