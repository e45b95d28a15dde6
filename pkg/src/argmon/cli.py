"""Command-line interface.

Subcommands: ``solve`` (extensions as JSON), ``degrees`` (JSON map of
argument to degree), ``remove`` (attack-removal what-ifs, graph out), and
``verify`` (the sweep harness).  Graphs are read from a file or standard
input (``-``); the input format is inferred from the file extension and
falls back to tgf.

Exit codes: 0 success (for ``verify``: no violations), 1 verification
found violations, 2 malformed input or flags.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence

from .core import ARGUMENT_TOKEN, Attack, GraphError
from .degrees import DegreeConvention, degree_table
from .io import GraphFormat, format_for_path, parse_graph, serialize_graph
from .semantics import SemanticsId, extensions
from .verify import ALL_SEMANTICS, BOTH_CONVENTIONS, SweepConfig, sweep

_SEMANTICS_CHOICES = [s.value for s in SemanticsId]
_CONVENTION_CHOICES = [c.value for c in DegreeConvention]
_FORMAT_CHOICES = [f.value for f in GraphFormat]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="argmon",
        description=(
            "Solve argumentation graphs, grade argument acceptability, and "
            "verify degree monotonicity under attack removal."
        ),
    )
    commands = parser.add_subparsers(dest="command", required=True)

    solve = commands.add_parser(
        "solve", help="compute all extensions under one semantics"
    )
    _add_input_arguments(solve)
    solve.add_argument(
        "--semantics", required=True, choices=_SEMANTICS_CHOICES
    )
    solve.set_defaults(handler=_cmd_solve)

    degrees = commands.add_parser(
        "degrees", help="compute the acceptability degree of every argument"
    )
    _add_input_arguments(degrees)
    degrees.add_argument(
        "--semantics", required=True, choices=_SEMANTICS_CHOICES
    )
    degrees.add_argument(
        "--convention",
        choices=_CONVENTION_CHOICES,
        default=DegreeConvention.STANDARD.value,
    )
    degrees.set_defaults(handler=_cmd_degrees)

    remove = commands.add_parser(
        "remove", help="delete attacks and print the resulting graph"
    )
    _add_input_arguments(remove)
    remove.add_argument(
        "--attacks",
        required=True,
        metavar="LIST",
        help="attacks to delete, e.g. \"b>a;c>a\"",
    )
    remove.add_argument(
        "--format-out",
        choices=_FORMAT_CHOICES,
        help="output format (default: same as input)",
    )
    remove.set_defaults(handler=_cmd_remove)

    verify = commands.add_parser(
        "verify", help="sweep graph populations through every check"
    )
    verify.add_argument("--max-n", type=int, default=4, metavar="K")
    verify.add_argument("--random-n", type=int, metavar="M")
    verify.add_argument("--samples", type=int, metavar="C")
    verify.add_argument("--seed", type=int, default=0, metavar="S")
    verify.add_argument(
        "--semantics",
        metavar="LIST",
        help="comma-separated semantics (default: all four)",
    )
    verify.add_argument(
        "--conventions",
        metavar="LIST",
        help="comma-separated conventions (default: both)",
    )
    verify.add_argument(
        "--json", action="store_true", help="emit the report as JSON"
    )
    verify.set_defaults(handler=_cmd_verify)

    return parser


def _add_input_arguments(command: argparse.ArgumentParser) -> None:
    command.add_argument(
        "file", metavar="FILE", help="graph file, or - for standard input"
    )
    command.add_argument(
        "--format",
        choices=_FORMAT_CHOICES,
        help="input format (default: by file extension, falling back to tgf)",
    )


def _load_graph(path: str, format_flag: str | None):
    if path == "-":
        text = sys.stdin.read()
        fmt = GraphFormat(format_flag) if format_flag else GraphFormat.TGF
    else:
        text = Path(path).read_text(encoding="utf-8")
        fmt = GraphFormat(format_flag) if format_flag else format_for_path(path)
    return parse_graph(text, fmt), fmt


def _print_json(payload) -> None:
    print(json.dumps(payload, separators=(",", ":")))


def _cmd_solve(args: argparse.Namespace) -> int:
    graph, _ = _load_graph(args.file, args.format)
    semantics = SemanticsId(args.semantics)
    found = extensions(graph, semantics)
    _print_json(
        {
            "semantics": semantics.value,
            "extensions": [sorted(ext) for ext in found],
        }
    )
    return 0


def _cmd_degrees(args: argparse.Namespace) -> int:
    graph, _ = _load_graph(args.file, args.format)
    table = degree_table(
        graph, SemanticsId(args.semantics), DegreeConvention(args.convention)
    )
    _print_json({name: deg.json_value for name, deg in table.items()})
    return 0


def _parse_attack_list(text: str) -> list[Attack]:
    attacks = []
    for piece in text.split(";"):
        piece = piece.strip()
        if not piece:
            continue
        source, sep, target = piece.partition(">")
        source = source.strip()
        target = target.strip()
        if not sep or not ARGUMENT_TOKEN.match(source) or not ARGUMENT_TOKEN.match(target):
            raise GraphError(
                f"bad attack {piece!r}: expected 'source>target' with "
                "identifier tokens"
            )
        attacks.append(Attack(source, target))
    if not attacks:
        raise GraphError("no attacks listed")
    return attacks


def _cmd_remove(args: argparse.Namespace) -> int:
    graph, input_format = _load_graph(args.file, args.format)
    reduced = graph.remove_attacks(_parse_attack_list(args.attacks))
    out_format = GraphFormat(args.format_out) if args.format_out else input_format
    sys.stdout.write(serialize_graph(reduced, out_format))
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    config = SweepConfig(
        max_n=args.max_n,
        random_n=args.random_n,
        samples=args.samples,
        seed=args.seed,
        semantics=_parse_selection(args.semantics, SemanticsId, ALL_SEMANTICS),
        conventions=_parse_selection(
            args.conventions, DegreeConvention, BOTH_CONVENTIONS
        ),
    )
    report = sweep(config)
    if args.json:
        _print_json(report.to_json())
    else:
        print(report.render_text())
    return 1 if report.violations else 0


def _parse_selection(text: str | None, enum_type, default: tuple):
    if text is None:
        return default
    values = []
    for piece in text.split(","):
        piece = piece.strip()
        if not piece:
            continue
        try:
            values.append(enum_type(piece))
        except ValueError:
            allowed = ", ".join(member.value for member in enum_type)
            raise ValueError(
                f"unknown value {piece!r}: expected one of {allowed}"
            ) from None
    return tuple(values)


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.handler(args)
    except (GraphError, ValueError, OSError) as exc:
        print(f"argmon: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())