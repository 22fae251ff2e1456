from __future__ import annotations

import logging
from pathlib import Path

import pytest

from afverify.core import build_af, default_names
from afverify.enumeration import enumerate_afs
from afverify.errors import AFInputError, AFParseError
from afverify.formats import (
    format_extensions,
    format_for,
    load_af,
    parse_apx,
    parse_text,
    parse_tgf,
    write_apx,
    write_dot,
)
from afverify.semantics import SemanticsKind, extensions


def _parse_error(fn, text: str, **kwargs) -> AFParseError:
    try:
        fn(text, **kwargs)
    except AFParseError as e:
        return e
    raise AssertionError("Expected AFParseError")


def test_parse_apx_basic() -> None:
    result = parse_apx("arg(a). arg(b). att(a,b).")
    assert result.af == build_af(["a", "b"], [("a", "b")])
    assert result.diagnostics == ()


def test_parse_apx_naive_example(naive_f) -> None:
    text = "arg(b). att(b,b). arg(d). arg(c). att(d,c). arg(a)."
    assert parse_apx(text).af == naive_f


def test_parse_apx_comments_and_whitespace() -> None:
    text = "% header\n  arg( a ) .\narg(b_2).   % trailing\n\natt(a , b_2).\n"
    result = parse_apx(text)
    assert result.af.attack_pairs() == {("a", "b_2")}


def test_parse_apx_undeclared_endpoints_warn() -> None:
    result = parse_apx("att(x,y).")
    assert result.af == build_af(["x", "y"], [("x", "y")])
    assert len(result.warnings) == 2
    assert all(w.line == 1 and w.column == 1 for w in result.warnings)
    assert "undeclared argument x" in result.warnings[0].message


def test_parse_apx_strict_rejects_undeclared_endpoints() -> None:
    error = _parse_error(parse_apx, "arg(x).\natt(x,y).", strict=True)
    assert [(d.line, d.column) for d in error.diagnostics] == [(2, 1)]
    assert str(error) == "2:1: attack references undeclared argument y"


def test_parse_apx_duplicates_warn() -> None:
    result = parse_apx("arg(a). arg(a). att(a,a).\natt(a,a).")
    assert result.af.attack_pairs() == {("a", "a")}
    assert [(w.line, w.column) for w in result.warnings] == [(1, 9), (2, 1)]


def test_parse_apx_malformed_statement_is_located() -> None:
    error = _parse_error(parse_apx, "arg(a).\n  foo.\narg(b).")
    assert len(error.diagnostics) == 1
    diagnostic = error.diagnostics[0]
    assert (diagnostic.line, diagnostic.column, diagnostic.severity) == (2, 3, "error")


def test_parse_apx_reports_every_error() -> None:
    error = _parse_error(parse_apx, "arg(a,b).\natt(a).\narg(a-b).")
    assert [d.line for d in error.diagnostics] == [1, 2, 3]
    assert str(error).endswith("(+2 more)")


def test_parse_apx_logs_diagnostics(caplog: pytest.LogCaptureFixture) -> None:
    logger = logging.getLogger("afverify.test")
    with caplog.at_level(logging.DEBUG, logger="afverify.test"):
        parse_apx("att(x,x).", logger=logger)
    assert "afverify.parse warning line=1 column=1" in caplog.text


def test_parse_tgf_examples() -> None:
    assert parse_tgf("a\nb\n#\na b").af == build_af(["a", "b"], [("a", "b")])
    assert parse_tgf("a\n#\n").af == build_af(["a"], [])
    assert parse_tgf("a label\nb\n#\nb a\n").af.attack_pairs() == {("b", "a")}


def test_parse_tgf_unknown_node_is_located() -> None:
    error = _parse_error(parse_tgf, "a\nb\n#\nc b")
    assert [(d.line, d.column) for d in error.diagnostics] == [(4, 1)]
    assert str(error) == "4:1: edge uses undeclared node c"

    error = _parse_error(parse_tgf, "a\n#\na  z")
    assert [(d.line, d.column) for d in error.diagnostics] == [(3, 4)]


def test_parse_tgf_missing_separator() -> None:
    error = _parse_error(parse_tgf, "a\nb\n")
    assert [(d.line, d.column) for d in error.diagnostics] == [(2, 1)]
    assert "missing '#'" in error.diagnostics[0].message
    assert _parse_error(parse_tgf, "").diagnostics[0].line == 1


def test_parse_tgf_structural_errors() -> None:
    error = _parse_error(parse_tgf, "a\n#\na\n#\n")
    assert [d.line for d in error.diagnostics] == [3, 4]


def test_parse_tgf_duplicates_warn() -> None:
    result = parse_tgf("a\na\n#\na a\na a\n")
    assert result.af == build_af(["a"], [("a", "a")])
    assert len(result.warnings) == 2


def test_parse_text_dispatch() -> None:
    assert parse_text("a\n#\n", "tgf").af.names == ("a",)
    assert parse_text("arg(a).").af.names == ("a",)
    try:
        parse_text("", "json")  # type: ignore[arg-type]
    except AFInputError:
        return
    raise AssertionError("Expected AFInputError")


def test_load_af_uses_suffix(tmp_path: Path) -> None:
    tgf = tmp_path / "graph.TGF"
    tgf.write_text("a\nb\n#\na b\n", encoding="utf-8")
    apx = tmp_path / "graph.txt"
    apx.write_text("arg(a). arg(b). att(a,b).\n", encoding="utf-8")
    assert format_for(tgf) == "tgf"
    assert format_for(apx) == "apx"
    assert load_af(tgf).af == load_af(apx).af
    assert load_af(apx, "apx").af.attack_pairs() == {("a", "b")}


def test_write_apx_is_sorted(naive_f) -> None:
    text = write_apx(naive_f)
    assert text == "arg(a).\narg(b).\narg(c).\narg(d).\natt(b,b).\natt(d,c).\n"
    assert parse_apx(text).af == naive_f
    assert write_apx(build_af([], [])) == ""


def test_write_dot() -> None:
    assert write_dot(build_af([], [])) == "digraph af {}\n"
    loop = build_af(["a"], [("a", "a")])
    assert write_dot(loop) == 'digraph af {\n  "a";\n  "a" -> "a";\n}\n'


def test_format_extensions(naive_f, sta_af) -> None:
    naive = extensions(naive_f, SemanticsKind.NA)
    assert format_extensions(naive) == "[a,c]\n[a,d]\n"
    assert format_extensions(naive, iccma=True) == "[[a,c],[a,d]]\n"

    stable = extensions(sta_af, SemanticsKind.STB)
    assert format_extensions(stable) == ""
    assert format_extensions(stable, iccma=True) == "[]\n"

    empty = extensions(build_af([], []), SemanticsKind.GR)
    assert format_extensions(empty) == "[]\n"


def _round_trips(n: int) -> None:
    for af in enumerate_afs(default_names(n)):
        assert parse_apx(write_apx(af)).af == af
        assert parse_tgf(_as_tgf(af)).af == af


def _as_tgf(af) -> str:
    nodes = "".join(f"{name}\n" for name in af.names)
    edges = "".join(f"{a} {b}\n" for a, b in sorted(af.attack_pairs()))
    return nodes + "#\n" + edges


def test_round_trip_small_afs() -> None:
    for n in range(4):
        _round_trips(n)


@pytest.mark.slow
def test_round_trip_four_arguments() -> None:
    _round_trips(4)
