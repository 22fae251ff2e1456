"""Readers and writers for APX, TGF and DOT, plus extension formatting."""

from __future__ import annotations

import logging
import re
from pathlib import Path
from typing import Literal

from afverify.core import ArgumentationFramework, ExtensionSet, build_af
from afverify.errors import AFInputError, AFParseError
from afverify.models import ParseDiagnostic, ParseResult

Format = Literal["apx", "tgf"]

_APX_STATEMENT = re.compile(
    r"(?P<pred>arg|att)\s*\(\s*(?P<first>[A-Za-z0-9_]+)\s*"
    r"(?:,\s*(?P<second>[A-Za-z0-9_]+)\s*)?\)\s*\."
)
_NAME = re.compile(r"[A-Za-z0-9_]+\Z")
_SUFFIXES: dict[str, Format] = {".apx": "apx", ".tgf": "tgf"}


class _Collector:
    def __init__(self, logger: logging.Logger | None) -> None:
        self.items: list[ParseDiagnostic] = []
        self._logger = logger

    def add(self, line: int, column: int, message: str, severity: str = "error") -> None:
        diagnostic = ParseDiagnostic(line=line, column=column, message=message, severity=severity)
        self.items.append(diagnostic)
        if self._logger:
            self._logger.debug(
                "afverify.parse %s line=%d column=%d message=%s", severity, line, column, message
            )

    def result(self, names: list[str], pairs: list[tuple[str, str]]) -> ParseResult:
        if any(d.severity == "error" for d in self.items):
            raise AFParseError(tuple(self.items))
        return ParseResult(af=build_af(names, pairs), diagnostics=tuple(self.items))


def _strip_comment(line: str) -> str:
    cut = line.find("%")
    return line if cut < 0 else line[:cut]


def parse_apx(
    text: str, *, strict: bool = False, logger: logging.Logger | None = None
) -> ParseResult:
    """Parse ``arg(x).`` / ``att(x,y).`` statements, several per line allowed.

    Attacks on undeclared arguments declare them with a warning, or fail in
    ``strict`` mode. Raises :class:`AFParseError` if any error was found.
    """
    diagnostics = _Collector(logger)
    names: list[str] = []
    pairs: list[tuple[str, str]] = []
    seen_pairs: set[tuple[str, str]] = set()
    first_use: dict[str, tuple[int, int]] = {}

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip_comment(raw)
        pos = 0
        while True:
            while pos < len(line) and line[pos].isspace():
                pos += 1
            if pos >= len(line):
                break
            match = _APX_STATEMENT.match(line, pos)
            if match is None:
                diagnostics.add(lineno, pos + 1, f"malformed statement: {line[pos:].strip()!r}")
                stop = line.find(".", pos)
                pos = len(line) if stop < 0 else stop + 1
                continue
            column = pos + 1
            pos = match.end()
            first, second = match.group("first"), match.group("second")
            if match.group("pred") == "arg":
                if second is not None:
                    diagnostics.add(lineno, column, "arg takes exactly one name")
                elif first in names:
                    diagnostics.add(lineno, column, f"duplicate argument {first}", "warning")
                else:
                    names.append(first)
                continue
            if second is None:
                diagnostics.add(lineno, column, "att takes exactly two names")
                continue
            pair = (first, second)
            if pair in seen_pairs:
                diagnostics.add(lineno, column, f"duplicate attack {first}->{second}", "warning")
                continue
            seen_pairs.add(pair)
            pairs.append(pair)
            for name in pair:
                first_use.setdefault(name, (lineno, column))

    declared = set(names)
    for name, (lineno, column) in first_use.items():
        if name in declared:
            continue
        declared.add(name)
        names.append(name)
        diagnostics.add(
            lineno,
            column,
            f"attack references undeclared argument {name}",
            "error" if strict else "warning",
        )
    return diagnostics.result(names, pairs)


def parse_tgf(
    text: str, *, strict: bool = False, logger: logging.Logger | None = None
) -> ParseResult:
    """Node ids one per line, a ``#`` line, then ``source target`` edges.

    Edges must use declared nodes. ``strict`` is accepted for symmetry with
    :func:`parse_apx`; TGF is always strict about nodes.
    """
    del strict
    diagnostics = _Collector(logger)
    names: list[str] = []
    pairs: list[tuple[str, str]] = []
    in_edges = False
    lines = text.splitlines()

    for lineno, raw in enumerate(lines, start=1):
        stripped = raw.strip()
        if not stripped:
            continue
        column = len(raw) - len(raw.lstrip()) + 1
        if stripped == "#":
            if in_edges:
                diagnostics.add(lineno, column, "second '#' separator")
            in_edges = True
            continue
        tokens = stripped.split()
        if not in_edges:
            node = tokens[0]
            if not _NAME.match(node):
                diagnostics.add(lineno, column, f"invalid node id {node!r}")
            elif node in names:
                diagnostics.add(lineno, column, f"duplicate node {node}", "warning")
            else:
                names.append(node)
            continue
        if len(tokens) < 2:
            diagnostics.add(lineno, column, "edge needs a source and a target")
            continue
        source, target = tokens[0], tokens[1]
        source_at = raw.find(source)
        target_at = raw.find(target, source_at + len(source))
        ends = ((source, source_at), (target, target_at))
        unknown = [(node, at) for node, at in ends if node not in names]
        if unknown:
            node, at = unknown[0]
            diagnostics.add(lineno, at + 1, f"edge uses undeclared node {node}")
            continue
        if (source, target) in pairs:
            diagnostics.add(lineno, column, f"duplicate edge {source}->{target}", "warning")
            continue
        pairs.append((source, target))

    if not in_edges:
        diagnostics.add(max(len(lines), 1), 1, "missing '#' separator between nodes and edges")
    return diagnostics.result(names, pairs)


def parse_text(
    text: str,
    fmt: Format = "apx",
    *,
    strict: bool = False,
    logger: logging.Logger | None = None,
) -> ParseResult:
    if fmt == "apx":
        return parse_apx(text, strict=strict, logger=logger)
    if fmt == "tgf":
        return parse_tgf(text, strict=strict, logger=logger)
    raise AFInputError("unknown input format", fmt)


def format_for(path: str | Path) -> Format:
    try:
        return _SUFFIXES[Path(path).suffix.lower()]
    except KeyError:
        return "apx"


def load_af(
    path: str | Path,
    fmt: Format | None = None,
    *,
    strict: bool = False,
    logger: logging.Logger | None = None,
) -> ParseResult:
    """Read ``path``; the format defaults to its suffix (``.tgf``) or APX."""
    text = Path(path).read_text(encoding="utf-8")
    return parse_text(text, fmt or format_for(path), strict=strict, logger=logger)


def write_apx(af: ArgumentationFramework) -> str:
    lines = [f"arg({name})." for name in sorted(af.names)]
    lines.extend(f"att({a},{b})." for a, b in sorted(af.attack_pairs()))
    return "".join(line + "\n" for line in lines)


def write_dot(af: ArgumentationFramework) -> str:
    if not af.names:
        return "digraph af {}\n"
    body = [f'  "{name}";' for name in sorted(af.names)]
    body.extend(f'  "{a}" -> "{b}";' for a, b in sorted(af.attack_pairs()))
    return "digraph af {\n" + "\n".join(body) + "\n}\n"


def format_extensions(ext: ExtensionSet, *, iccma: bool = False) -> str:
    """One ``[a,c]`` line per extension, ordered by size then names.

    With ``iccma`` the whole family is a single nested line, ``[[a,c],[a,d]]``.
    """
    rows = ["[" + ",".join(row) + "]" for row in ext.sorted_names()]
    if iccma:
        return "[" + ",".join(rows) + "]\n"
    return "".join(row + "\n" for row in rows)
