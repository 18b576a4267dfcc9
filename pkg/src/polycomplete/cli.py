"""Command-line interface.

Subcommands: check (completeness decision), certify (produce an
incompleteness certificate), verify (check a certificate), extract
(incidence matrix from exact-rational geometry), gen (fixture files).

Exit codes are a contract for shell pipelines: 0 = yes/accept/success,
1 = no/reject, 2 = invalid input.  All output is deterministic.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional

from . import fixtures
from .crosscut import SIDE_AUTO, SIDE_DUAL, SIDE_PRIMAL, analyze
from .geometry import (
    GeometryFormatError,
    extract_incidence,
    parse_geometry,
    serialize_geometry,
    validate_instance,
)
from .incidence import IncidenceFormatError, parse_incidence, serialize_incidence
from .pulling import (
    CertificateFormatError,
    find_certificate,
    parse_certificate,
    serialize_certificate,
    verify_certificate,
)

EXIT_YES = 0
EXIT_NO = 1
EXIT_INVALID = 2


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise IncidenceFormatError(f"cannot read {path}: {exc.strerror}") from None


def _write_output(path: Optional[str], text: str):
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def _fail(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return EXIT_INVALID


def cmd_check(args: argparse.Namespace) -> int:
    try:
        J = parse_incidence(_read_input(args.file))
        report = analyze(J.d, J, side=args.side)
    except (IncidenceFormatError, ValueError) as exc:
        return _fail(str(exc))
    answer = "yes" if report.complete else "no"
    dr, dc = report.boundary_d_shape
    lr, lc = report.boundary_d1_shape
    if args.machine:
        print(
            f"answer={answer} d={report.d} side={report.side} "
            f"boundary_d={dr}x{dc} rank_d={report.boundary_d_rank} "
            f"boundary_d1={lr}x{lc} kernel_d1={report.boundary_d1_kernel} "
            f"homology={report.homology_dim}"
        )
    else:
        print(answer)
        print(f"side: {report.side} (max row {report.stats.s}, max column {report.stats.s_col})")
        print(f"boundary matrix d: {dr}x{dc}, rank {report.boundary_d_rank}")
        print(f"boundary matrix d-1: {lr}x{lc}, kernel dimension {report.boundary_d1_kernel}")
    return EXIT_YES if report.complete else EXIT_NO


def cmd_certify(args: argparse.Namespace) -> int:
    try:
        J = parse_incidence(_read_input(args.file))
        if J.d < 1:
            return _fail("certificates are defined for d >= 1 only")
        cert = find_certificate(J.d, J)
    except (IncidenceFormatError, ValueError) as exc:
        return _fail(str(exc))
    if cert is None:
        print("COMPLETE")
        return EXIT_YES
    print(serialize_certificate(cert), end="")
    return EXIT_NO


def cmd_verify(args: argparse.Namespace) -> int:
    try:
        J = parse_incidence(_read_input(args.file))
        if J.d < 1:
            return _fail("certificates are defined for d >= 1 only")
        cert = parse_certificate(_read_input(args.certificate))
        accepted = verify_certificate(J.d, J, cert)
    except (IncidenceFormatError, CertificateFormatError, ValueError) as exc:
        return _fail(str(exc))
    print("accept" if accepted else "reject")
    return EXIT_YES if accepted else EXIT_NO


def cmd_extract(args: argparse.Namespace) -> int:
    try:
        inst = parse_geometry(_read_input(args.file))
    except (GeometryFormatError, ValueError) as exc:
        return _fail(str(exc))
    report = validate_instance(inst)
    if report.ok:
        print("validation: all checks passed", file=sys.stderr)
    else:
        for issue in report.issues:
            print(f"validation: check={issue.check} {issue.subject}: {issue.detail}", file=sys.stderr)
        if not args.force:
            print("error: validation failed (use --force to extract anyway)", file=sys.stderr)
            return EXIT_INVALID
    _write_output(args.output, serialize_incidence(extract_incidence(inst)))
    return EXIT_YES


def _parse_fixture_tokens(tokens: list[str]) -> fixtures.FixtureSpec:
    if not tokens:
        raise ValueError("missing fixture family")
    family = tokens[0].lower().replace("_", "-")
    rest = tokens[1:]

    def int_params(count: int) -> list[int]:
        if len(rest) != count:
            raise ValueError(f"family {family!r} takes {count} integer parameter(s)")
        try:
            return [int(t) for t in rest]
        except ValueError:
            raise ValueError(f"parameters for {family!r} must be integers") from None

    if family == fixtures.FAMILY_CUBE_KM:
        int_params(0)
        return fixtures.FixtureSpec(fixtures.FAMILY_CUBE_KM)
    if family == fixtures.FAMILY_SIMPLEX:
        (d,) = int_params(1)
        return fixtures.FixtureSpec(fixtures.FAMILY_SIMPLEX, d=d)
    if family == fixtures.FAMILY_CROSSPOLYTOPE:
        (d,) = int_params(1)
        return fixtures.FixtureSpec(fixtures.FAMILY_CROSSPOLYTOPE, d=d)
    if family == fixtures.FAMILY_CYCLIC:
        d, n = int_params(2)
        return fixtures.FixtureSpec(fixtures.FAMILY_CYCLIC, d=d, n=n)
    if family == fixtures.FAMILY_PRISM:
        return fixtures.FixtureSpec(fixtures.FAMILY_PRISM, inner=_parse_fixture_tokens(rest))
    raise ValueError(f"unknown fixture family {family!r}")


def cmd_gen(args: argparse.Namespace) -> int:
    try:
        spec = _parse_fixture_tokens(args.family)
        if args.geometry:
            text = serialize_geometry(fixtures.geometric_fixture(spec))
        else:
            text = serialize_incidence(fixtures.incidence_fixture(spec))
    except ValueError as exc:
        return _fail(str(exc))
    _write_output(args.output, text)
    return EXIT_YES


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="polycomplete",
        description="Decide completeness of partial vertex-facet incidence matrices "
        "of polytopes, and produce/verify incompleteness certificates.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="decide completeness of an incidence file")
    p.add_argument("file", help="incidence file, or - for stdin")
    p.add_argument(
        "--side",
        choices=[SIDE_AUTO, SIDE_PRIMAL, SIDE_DUAL],
        default=SIDE_AUTO,
        help="run the homology on the matrix, its transpose, or whichever is smaller",
    )
    p.add_argument("--machine", action="store_true", help="single machine-readable line")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("certify", help="produce an incompleteness certificate or COMPLETE")
    p.add_argument("file", help="incidence file, or - for stdin")
    p.add_argument("--machine", action="store_true", help="(output is already line-oriented)")
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("verify", help="verify an incompleteness certificate")
    p.add_argument("file", help="incidence file, or - for stdin")
    p.add_argument("certificate", help="certificate file")
    p.add_argument("--machine", action="store_true", help="(output is already line-oriented)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("extract", help="extract an incidence matrix from rational geometry")
    p.add_argument("file", help="geometry file, or - for stdin")
    p.add_argument("--force", action="store_true", help="extract even when validation fails")
    p.add_argument("-o", "--output", help="write the incidence file here instead of stdout")
    p.set_defaults(func=cmd_extract)

    p = sub.add_parser("gen", help="emit fixture files (incidence or geometry format)")
    p.add_argument(
        "family",
        nargs="+",
        help="cube-km | simplex D | crosspolytope D | cyclic D N | prism FAMILY ...",
    )
    p.add_argument("--geometry", action="store_true", help="emit the geometry format")
    p.add_argument("-o", "--output", help="write here instead of stdout")
    p.set_defaults(func=cmd_gen)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


def run():  # console-script entry point
    raise SystemExit(main())
