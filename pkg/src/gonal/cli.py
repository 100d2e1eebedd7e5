"""Command-line front end.

Subcommands:
  report  full invariant dossier for one (g, n), text or JSON
  verify  property sweep over a (g, n) grid; exit 1 on any failure
  twist   rescale a hyperelliptic model to pass through a rational point

Exit codes: 0 success, 1 verification failure, 2 usage or domain error.
"""

import argparse
import json
import sys
from fractions import Fraction

from .errors import DomainError, UnsupportedError
from .hyperelliptic import BinaryForm, HyperellipticModel, twist_with_point
from .report import (
    emit_json,
    generate_report,
    render_sweep_text,
    render_text,
    sweep_verify,
)


def _cmd_report(args) -> int:
    k_max = args.kmax if args.kmax is not None else 2 * args.genus
    report = generate_report(args.genus, args.gonality, k_max)
    if args.format == "json":
        sys.stdout.write(emit_json(report))
    else:
        sys.stdout.write(render_text(report))
    return 0


def _cmd_verify(args) -> int:
    summary = sweep_verify(
        range(args.genus_min, args.genus_max + 1),
        range(args.gonality_min, args.gonality_max + 1),
        k_max=args.kmax,
        jobs=args.jobs,
    )
    if args.format == "json":
        sys.stdout.write(json.dumps(summary.to_dict(), indent=2) + "\n")
    else:
        sys.stdout.write(render_sweep_text(summary))
    return 0 if summary.ok else 1


def _cmd_twist(args) -> int:
    try:
        coeffs = [Fraction(c) for c in args.coeffs.split(",")]
        a = Fraction(args.a)
        x0 = Fraction(args.x0)
    except (ValueError, ZeroDivisionError) as exc:
        raise DomainError(f"could not parse rational input: {exc}") from exc
    form = BinaryForm(len(coeffs) - 1, tuple(coeffs))
    model = HyperellipticModel(a, form)
    twisted, point = twist_with_point(model, x0)
    payload = {
        "genus": form.genus,
        "original_a": str(model.a),
        "twisted_a": str(twisted.a),
        "point": [str(point[0]), str(point[1])],
        "form_unchanged": twisted.form == model.form,
        "residual_at_point": str(twisted.residual(*point)),
    }
    if args.format == "json":
        sys.stdout.write(json.dumps(payload, indent=2) + "\n")
    else:
        sys.stdout.write(
            f"genus {payload['genus']} model: a = {payload['original_a']} "
            f"-> a' = {payload['twisted_a']}\n"
            f"rational point ({payload['point'][0]}, {payload['point'][1]}), "
            f"residual {payload['residual_at_point']}\n"
        )
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gonal",
        description="Exact invariants of n-gonal curve families: scroll "
        "intersection theory, section counts, modular-degree divisibility.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    rep = sub.add_parser("report", help="invariant dossier for one (g, n)")
    rep.add_argument("--genus", type=int, required=True)
    rep.add_argument("--gonality", type=int, required=True)
    rep.add_argument("--kmax", type=int, default=None, help="section table cutoff (default 2g)")
    rep.add_argument("--format", choices=("text", "json"), default="text")
    rep.set_defaults(func=_cmd_report)

    ver = sub.add_parser("verify", help="property sweep over a (g, n) grid")
    ver.add_argument("--genus-min", type=int, required=True)
    ver.add_argument("--genus-max", type=int, required=True)
    ver.add_argument("--gonality-min", type=int, required=True)
    ver.add_argument("--gonality-max", type=int, required=True)
    ver.add_argument("--kmax", type=int, default=None, help="section scan cutoff (default 2g per point)")
    ver.add_argument("--jobs", type=int, default=1)
    ver.add_argument("--format", choices=("text", "json"), default="text")
    ver.set_defaults(func=_cmd_verify)

    twi = sub.add_parser("twist", help="twist a hyperelliptic model to gain a point")
    twi.add_argument(
        "--coeffs",
        required=True,
        help="comma-separated rational coefficients c_0,...,c_{2g+2} of the form",
    )
    twi.add_argument("--a", required=True, help="nonzero scalar of the model a*y^2 = f(x)")
    twi.add_argument("--x0", required=True, help="x-coordinate to twist through")
    twi.add_argument("--format", choices=("text", "json"), default="text")
    twi.set_defaults(func=_cmd_twist)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (DomainError, UnsupportedError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
