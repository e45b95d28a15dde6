"""Reading and writing argumentation graphs in the tgf and apx text formats.

tgf: one argument id per line, a separator line containing exactly ``#``,
then one ``source target`` pair per line.

apx: ``arg(<id>).`` and ``att(<source>,<target>).`` facts, one per line,
with ``%`` starting a comment line and whitespace outside tokens ignored.

Serialization is canonical: arguments sorted, then attacks sorted by
(source, target).  Parsing a serialized graph always round-trips.
"""

from __future__ import annotations

import re
from enum import Enum
from pathlib import PurePath

from .core import ArgumentationGraph, Attack, GraphError

__all__ = [
    "GraphFormat",
    "ParseError",
    "format_for_path",
    "parse_graph",
    "serialize_graph",
]


class GraphFormat(str, Enum):
    TGF = "tgf"
    APX = "apx"


class ParseError(GraphError):
    """Malformed graph text.  ``line`` is the 1-based offending line."""

    def __init__(self, message: str, line: int | None = None) -> None:
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


_TGF_ID = re.compile(r"[A-Za-z0-9_]+\Z")
_APX_ARG = re.compile(r"arg\s*\(\s*([A-Za-z0-9_]+)\s*\)\s*\.\Z")
_APX_ATT = re.compile(
    r"att\s*\(\s*([A-Za-z0-9_]+)\s*,\s*([A-Za-z0-9_]+)\s*\)\s*\.\Z"
)


def format_for_path(path: str | PurePath) -> GraphFormat:
    """Format implied by a file extension; anything but .apx means tgf."""
    if PurePath(path).suffix.lower() == ".apx":
        return GraphFormat.APX
    return GraphFormat.TGF


def parse_graph(
    text: str | bytes, fmt: GraphFormat | str = GraphFormat.TGF
) -> ArgumentationGraph:
    """Parse ``text`` (str or utf-8 bytes) in the given format.

    Raises :class:`ParseError` (with a line number) for anything malformed:
    bad tokens, undeclared attack endpoints, duplicate declarations, or a
    missing tgf separator.
    """
    if isinstance(text, (bytes, bytearray)):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError(f"input is not valid utf-8: {exc}") from None
    fmt = GraphFormat(fmt)
    if fmt is GraphFormat.TGF:
        return _parse_tgf(text)
    return _parse_apx(text)


def _parse_tgf(text: str) -> ArgumentationGraph:
    arguments: list[str] = []
    declared: set[str] = set()
    attacks: list[Attack] = []
    in_edges = False
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line:
            continue
        if not in_edges:
            if line == "#":
                in_edges = True
                continue
            if not _TGF_ID.match(line):
                raise ParseError(
                    f"invalid argument id {line!r}: expected a token of "
                    "letters, digits, or underscores",
                    lineno,
                )
            if line in declared:
                raise ParseError(f"duplicate argument id {line!r}", lineno)
            declared.add(line)
            arguments.append(line)
        else:
            parts = line.split()
            if len(parts) != 2:
                raise ParseError(
                    f"expected 'source target', got {line!r}", lineno
                )
            source, target = parts
            for token in (source, target):
                if not _TGF_ID.match(token):
                    raise ParseError(
                        f"invalid argument id {token!r} in attack", lineno
                    )
                if token not in declared:
                    raise ParseError(
                        f"attack references undeclared argument {token!r}",
                        lineno,
                    )
            attacks.append(Attack(source, target))
    if not in_edges:
        raise ParseError("missing '#' separator line")
    return ArgumentationGraph(arguments, attacks)


def _parse_apx(text: str) -> ArgumentationGraph:
    arguments: list[str] = []
    declared: set[str] = set()
    pending: list[tuple[int, Attack]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("%"):
            continue
        arg_match = _APX_ARG.match(line)
        if arg_match:
            name = arg_match.group(1)
            if name in declared:
                raise ParseError(f"duplicate argument id {name!r}", lineno)
            declared.add(name)
            arguments.append(name)
            continue
        att_match = _APX_ATT.match(line)
        if att_match:
            pending.append((lineno, Attack(*att_match.groups())))
            continue
        raise ParseError(
            f"expected 'arg(<id>).' or 'att(<src>,<dst>).', got {line!r}",
            lineno,
        )
    attacks = []
    for lineno, attack in pending:
        for token in attack:
            if token not in declared:
                raise ParseError(
                    f"attack references undeclared argument {token!r}", lineno
                )
        attacks.append(attack)
    return ArgumentationGraph(arguments, attacks)


def serialize_graph(
    graph: ArgumentationGraph, fmt: GraphFormat | str = GraphFormat.TGF
) -> str:
    """Canonical text for ``graph`` in the given format."""
    fmt = GraphFormat(fmt)
    attacks = sorted(graph.attacks)
    if fmt is GraphFormat.TGF:
        lines = list(graph.arguments)
        lines.append("#")
        lines.extend(f"{source} {target}" for source, target in attacks)
    else:
        lines = [f"arg({name})." for name in graph.arguments]
        lines.extend(f"att({source},{target})." for source, target in attacks)
    return "\n".join(lines) + "\n"