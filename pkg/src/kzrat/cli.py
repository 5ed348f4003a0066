"""Command-line front end.

Commands: basis, series, verify, audit, independence.
Exit codes: 0 success, 1 usage or parse error, 2 verification failure,
3 unsolvable resonance, 4 degenerate pole configuration.
"""

from __future__ import annotations

import argparse
import sys as _sys
from fractions import Fraction
from typing import List, Optional, Tuple

from . import serialize
from .audit import run_audit
from .errors import (
    DegenerateConfiguration,
    InvalidSeed,
    KzratError,
    ScalarSyntaxError,
    UnsolvableResonance,
)
from .scalars import ParamScalar, parse_scalar
from .series import CoefficientTable, SeedSpec, generate, validate_seed
from .solutions import SOLUTION_NAMES, build_basis
from .system import KZSystem, build_s3_system, symbolic_system
from .verify import independence, residual


class _ArgumentParser(argparse.ArgumentParser):
    # Usage problems exit 1, not argparse's default 2.
    def error(self, message):
        self.print_usage(_sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _add_common_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--symbolic",
        action="store_true",
        help="keep z1, z2 symbolic (default unless --z1/--z2 are given)",
    )
    parser.add_argument("--z1", metavar="RAT", help="rational value for z1 (p or p/q)")
    parser.add_argument("--z2", metavar="RAT", help="rational value for z2 (p or p/q)")
    parser.add_argument(
        "--kmax", type=int, default=12, metavar="INT", help="highest series index"
    )
    parser.add_argument(
        "--format",
        choices=("json", "latex", "text"),
        default="json",
        help="output format",
    )
    parser.add_argument("--out", metavar="PATH", help="write output to a file")


def _build_system(parser: argparse.ArgumentParser, args) -> KZSystem:
    numeric = args.z1 is not None or args.z2 is not None
    if numeric and args.symbolic:
        parser.error("--symbolic cannot be combined with --z1/--z2")
    if not numeric:
        return symbolic_system()
    if args.z1 is None or args.z2 is None:
        parser.error("numeric mode needs both --z1 and --z2")
    try:
        v1 = serialize.parse_rational_text(args.z1)
        v2 = serialize.parse_rational_text(args.z2)
    except ValueError as exc:
        parser.error(str(exc))
    return build_s3_system(
        ParamScalar.from_rational(v1), ParamScalar.from_rational(v2)
    )


def _emit(args, payload: str) -> None:
    if args.out:
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(payload)
    else:
        _sys.stdout.write(payload)


def _selected_names(args) -> Tuple[str, ...]:
    if args.seed == "all":
        return SOLUTION_NAMES
    return (args.seed,)


def _cmd_basis(parser, args) -> int:
    if args.kmax < 5:
        parser.error("--kmax must be at least 5")
    sys = _build_system(parser, args)
    basis = build_basis(sys, names=_selected_names(args), k_max=args.kmax)
    named = []
    for name, built in basis.items():
        report = residual(sys, built.solution)
        if not report.is_zero:
            _sys.stderr.write(
                f"verification failed: residual of {name} is nonzero; refusing to emit\n"
            )
            return 2
        named.append((name, built.solution))
    if args.format == "json":
        payload = serialize.solutions_to_json(sys, named)
    elif args.format == "latex":
        payload = serialize.solutions_to_latex(sys, named)
    else:
        payload = serialize.solutions_to_text(sys, named)
    _emit(args, payload)
    return 0


def _parse_explicit_seed(parser, args) -> Optional[SeedSpec]:
    if args.seed_order is None and args.seed_vector is None:
        return None
    if args.seed_order is None or args.seed_vector is None:
        parser.error("an explicit seed needs both --seed-order and --seed-vector")
    parts = args.seed_vector.split(",")
    if len(parts) != 3:
        parser.error("--seed-vector must be three comma-separated scalars")
    try:
        vector = tuple(parse_scalar(p) for p in parts)
    except ScalarSyntaxError as exc:
        parser.error(f"bad --seed-vector: {exc}")
    return SeedSpec(order=args.seed_order, vector=vector)


def _cmd_series(parser, args) -> int:
    sys = _build_system(parser, args)
    explicit = _parse_explicit_seed(parser, args)
    if explicit is not None:
        seed = explicit
        name = f"explicit({seed.order})"
    else:
        from .series import canonical_seeds

        seed = canonical_seeds()[args.seed]
        name = args.seed
    validate_seed(seed)
    if args.kmax >= seed.order:
        table = generate(sys, seed, args.kmax)
    else:
        # Truncation below the seed order: every displayed coefficient is zero.
        table = CoefficientTable(seed_order=seed.order, k_max=args.kmax, coeffs={})
    if args.format == "json":
        payload = serialize.series_to_json(sys, name, table)
    elif args.format == "latex":
        payload = serialize.series_to_latex(sys, name, table)
    else:
        payload = serialize.series_to_text(sys, name, table)
    _emit(args, payload)
    return 0


def _cmd_verify(parser, args) -> int:
    try:
        with open(args.file, "r", encoding="utf-8") as handle:
            text = handle.read()
    except OSError as exc:
        _sys.stderr.write(f"cannot read {args.file}: {exc}\n")
        return 1
    try:
        sys, solutions = serialize.load_solutions(text)
    except (ValueError, ScalarSyntaxError) as exc:
        _sys.stderr.write(f"malformed solution file: {exc}\n")
        return 1
    failures = []
    for name, solution in solutions:
        report = residual(sys, solution)
        if not report.is_zero:
            failures.append(name)
    if failures:
        _sys.stderr.write(
            "nonzero residual for: " + ", ".join(failures) + "\n"
        )
        return 2
    _emit(args, f"verified: {len(solutions)} solution(s), all residuals zero\n")
    return 0


def _cmd_audit(parser, args) -> int:
    report = run_audit(k_max=args.kmax)
    if args.format == "json":
        payload = serialize.audit_to_json(report)
    elif args.format == "latex":
        payload = serialize.audit_to_latex(report)
    else:
        payload = serialize.audit_to_text(report)
    _emit(args, payload)
    return 0


def _cmd_independence(parser, args) -> int:
    gathered = []
    shared_sys = None
    for path in args.files:
        try:
            with open(path, "r", encoding="utf-8") as handle:
                text = handle.read()
        except OSError as exc:
            _sys.stderr.write(f"cannot read {path}: {exc}\n")
            return 1
        try:
            sys, solutions = serialize.load_solutions(text)
        except (ValueError, ScalarSyntaxError) as exc:
            _sys.stderr.write(f"malformed solution file {path}: {exc}\n")
            return 1
        if shared_sys is None:
            shared_sys = sys
        elif (shared_sys.z1, shared_sys.z2) != (sys.z1, sys.z2):
            _sys.stderr.write("solution files use different pole locations\n")
            return 1
        gathered.extend(solution for _, solution in solutions)
    if len(gathered) != 3:
        _sys.stderr.write(
            f"independence needs exactly 3 solutions, found {len(gathered)}\n"
        )
        return 1
    independent, det = independence(gathered)
    if args.format == "json":
        payload = serialize.independence_to_json(independent, det)
    else:
        payload = serialize.independence_to_text(independent, det)
    _emit(args, payload)
    return 0


def build_parser() -> _ArgumentParser:
    parser = _ArgumentParser(
        prog="kzrat",
        description=(
            "Exact rational basis solutions of the 3x3 two-pole "
            "Knizhnik-Zamolodchikov system: construct, verify, audit."
        ),
    )
    commands = parser.add_subparsers(dest="command", required=True)

    basis = commands.add_parser("basis", help="emit the verified basis solutions")
    _add_common_flags(basis)
    basis.add_argument(
        "--seed",
        choices=SOLUTION_NAMES + ("all",),
        default="all",
        help="which basis solution(s) to build",
    )
    basis.set_defaults(func=_cmd_basis)

    series = commands.add_parser("series", help="emit a coefficient chain")
    _add_common_flags(series)
    series.add_argument(
        "--seed",
        choices=SOLUTION_NAMES,
        default="w1",
        help="canonical seed to expand",
    )
    series.add_argument(
        "--seed-order", type=int, metavar="INT", help="explicit seed order"
    )
    series.add_argument(
        "--seed-vector",
        metavar="S,S,S",
        help="explicit seed vector, three comma-separated scalars",
    )
    series.set_defaults(func=_cmd_series)

    verify = commands.add_parser("verify", help="check a solutions file exactly")
    verify.add_argument("file", help="JSON file produced by 'basis'")
    verify.add_argument("--out", metavar="PATH", help="write output to a file")
    verify.set_defaults(func=_cmd_verify)

    audit = commands.add_parser(
        "audit", help="compare computed values against the reference displays"
    )
    _add_common_flags(audit)
    audit.set_defaults(func=_cmd_audit)

    independence_cmd = commands.add_parser(
        "independence", help="exact independence of three solutions"
    )
    independence_cmd.add_argument("files", nargs="+", help="solution JSON files")
    independence_cmd.add_argument(
        "--format", choices=("json", "text"), default="json", help="output format"
    )
    independence_cmd.add_argument("--out", metavar="PATH", help="write output to a file")
    independence_cmd.set_defaults(func=_cmd_independence)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(parser, args)
    except DegenerateConfiguration as exc:
        _sys.stderr.write(f"degenerate configuration: {exc}\n")
        return 4
    except UnsolvableResonance as exc:
        _sys.stderr.write(f"unsolvable resonance: {exc}\n")
        return 3
    except InvalidSeed as exc:
        _sys.stderr.write(f"invalid seed: {exc}\n")
        return 1
    except ScalarSyntaxError as exc:
        _sys.stderr.write(f"parse error: {exc}\n")
        return 1
    except KzratError as exc:
        _sys.stderr.write(f"error: {exc}\n")
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
