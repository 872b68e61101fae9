"""Batch command-line surface over the library.

Subcommands: ``coverings``, ``laws``, ``expand``, ``classify``,
``stream``, ``map``, ``trace``. Output is deterministic and
byte-identical across runs. Exit codes: 0 success, 1 usage error,
2 domain error (one ``Name: message`` line on stderr, no traceback).

Stream literals contain parentheses, so quote them in a shell:
``continuum map forward "1(0)"``.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass

from . import bijection, binary_streams, dyadic, finite_sets
from .errors import (
    BudgetExceeded,
    DisjointnessViolation,
    DomainViolation,
    OutOfRange,
    ParseError,
)

_DOMAIN_ERRORS = (
    OutOfRange,
    DisjointnessViolation,
    DomainViolation,
    ParseError,
    BudgetExceeded,
)


@dataclass(frozen=True)
class CommandResult:
    exit_code: int
    output: str = ""
    diagnostics: str = ""


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # Usage problems must exit 1 (argparse's default is 2, reserved here
    # for domain errors).
    def error(self, message):
        raise _UsageError(f"{self.format_usage()}{self.prog}: error: {message}")


def _split_labels(text: str) -> list[str]:
    if text == "":
        return []
    labels = text.split(",")
    if any(label == "" for label in labels):
        raise _UsageError("empty label in list")
    return labels


def _cmd_coverings(args) -> str:
    domain = finite_sets.make_set(_split_labels(args.exp))
    codomain = finite_sets.make_set(_split_labels(args.base))
    coverings = finite_sets.covering_set(domain, codomain)
    return "\n".join(cov.word() for cov in coverings)


def _cmd_laws(args) -> str:
    laws = finite_sets.LAW_IDS if args.check == "all" else (args.check,)
    lines = []
    for law in laws:
        witness = finite_sets.verify_exponent_law(law, args.a, args.b, args.c, args.budget)
        status = "valid" if witness.is_bijection() else "INVALID"
        lines.append(
            f"{law} a={args.a} b={args.b} c={args.c}: "
            f"|left|={len(witness.left_set)} |right|={len(witness.right_set)} "
            f"bijection={status}"
        )
    return "\n".join(lines)


def _cmd_expand(args) -> str:
    expansions = binary_streams.expansions_of(dyadic.parse_rational(args.rational))
    return "\n".join(str(e) for e in expansions)


def _cmd_classify(args) -> str:
    point = dyadic.classify(dyadic.parse_rational(args.rational))
    if isinstance(point, dyadic.DualDyadic):
        return f"DualDyadic nu={point.point.odd_index} mu={point.point.exponent}"
    if isinstance(point, dyadic.Endpoint):
        return f"Endpoint {point.value}"
    return "OtherRational"


def _cmd_stream(args) -> str:
    stream = binary_streams.parse_stream(args.literal)
    if args.what == "value":
        return str(binary_streams.value(stream))
    if args.what == "canon":
        return str(binary_streams.canonicalize(stream))
    if args.what == "member":
        return binary_streams.classify_stream(stream).value
    dual = binary_streams.dual_of(stream)
    return str(dual) if dual is not None else "none"


def _cmd_map(args) -> str:
    stream = binary_streams.parse_stream(args.literal)
    mapped = bijection.forward(stream) if args.direction == "forward" else bijection.inverse(stream)
    return str(mapped)


def _cmd_trace(args) -> str:
    trace = bijection.derivation_trace(args.mu_max)
    if args.format == "json":
        return trace.to_json()
    lines = [
        f"{step.step:>2}  {step.justification:<21} {step.result:<14} {step.statement}"
        for step in trace.steps
    ]
    lines.append(f"verdict: {trace.verdict}")
    return "\n".join(lines)


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return value


def _nonnegative_int(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be >= 0")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="continuum", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    coverings = sub.add_parser("coverings", help="enumerate the covering-set of one set with another")
    coverings.add_argument("--exp", required=True, help="comma-separated exponent-side (domain) labels")
    coverings.add_argument("--base", required=True, help="comma-separated base-side (codomain) labels")
    coverings.set_defaults(handler=_cmd_coverings)

    laws = sub.add_parser("laws", help="verify exponent laws by explicit bijection")
    laws.add_argument("--check", required=True, choices=finite_sets.LAW_IDS + ("all",))
    laws.add_argument("--a", type=_nonnegative_int, required=True)
    laws.add_argument("--b", type=_nonnegative_int, required=True)
    laws.add_argument("--c", type=_nonnegative_int, required=True)
    laws.add_argument("--budget", type=_positive_int, default=finite_sets.DEFAULT_BUDGET)
    laws.set_defaults(handler=_cmd_laws)

    expand = sub.add_parser("expand", help="binary expansion(s) of a rational in [0,1]")
    expand.add_argument("rational", help='rational literal, e.g. "3/8"')
    expand.set_defaults(handler=_cmd_expand)

    classify = sub.add_parser("classify", help="classify a rational point of [0,1]")
    classify.add_argument("rational")
    classify.set_defaults(handler=_cmd_classify)

    stream = sub.add_parser("stream", help="operate on one stream literal")
    stream.add_argument("what", choices=("value", "canon", "member", "dual"))
    stream.add_argument("literal", help='stream literal, e.g. "011(0)" (quote it)')
    stream.set_defaults(handler=_cmd_stream)

    map_cmd = sub.add_parser("map", help="apply the stream bijection or its inverse")
    map_cmd.add_argument("direction", choices=("forward", "inverse"))
    map_cmd.add_argument("literal")
    map_cmd.set_defaults(handler=_cmd_map)

    trace = sub.add_parser("trace", help="replay the derivation with bounded checks")
    trace.add_argument("--mu-max", type=_positive_int, required=True)
    trace.add_argument("--format", choices=("json", "text"), default="text")
    trace.set_defaults(handler=_cmd_trace)

    return parser


def run(argv: list[str]) -> CommandResult:
    """Dispatch one command line; never raises for user-level errors."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as err:
        return CommandResult(1, diagnostics=str(err))
    except SystemExit as err:  # --help prints and exits 0
        return CommandResult(int(err.code or 0))
    try:
        return CommandResult(0, output=args.handler(args))
    except _UsageError as err:
        return CommandResult(1, diagnostics=str(err))
    except _DOMAIN_ERRORS as err:
        return CommandResult(2, diagnostics=f"{type(err).__name__}: {err}")


def main() -> int:
    result = run(sys.argv[1:])
    if result.output:
        print(result.output)
    if result.diagnostics:
        print(result.diagnostics, file=sys.stderr)
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
