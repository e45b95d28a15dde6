"""tgf/apx parsing, canonical serialization, and round-trips."""

from __future__ import annotations

import pytest

from argmon import (
    GraphFormat,
    ParseError,
    build_graph,
    enumerate_graphs,
    format_for_path,
    parse_graph,
    serialize_graph,
)

# -- canonical serialization ---------------------------------------------------


def test_tgf_serialization_is_canonical():
    graph = build_graph(["b", "a"], [("b", "a")])
    assert serialize_graph(graph, GraphFormat.TGF) == "a\nb\n#\nb a\n"


def test_apx_serialization_is_canonical():
    assert serialize_graph(build_graph(["a"]), GraphFormat.APX) == "arg(a).\n"
    graph = build_graph(["b", "a"], [("b", "a"), ("a", "b")])
    assert (
        serialize_graph(graph, GraphFormat.APX)
        == "arg(a).\narg(b).\natt(a,b).\natt(b,a).\n"
    )


def test_empty_graph_serializes_to_bare_separator():
    assert serialize_graph(build_graph([]), GraphFormat.TGF) == "#\n"
    assert serialize_graph(build_graph([]), GraphFormat.APX) == "\n"


def test_serialize_accepts_format_strings(mutual):
    assert serialize_graph(mutual, "tgf") == serialize_graph(mutual, GraphFormat.TGF)


# -- round-trips -----------------------------------------------------------------


@pytest.mark.parametrize("fmt", [GraphFormat.TGF, GraphFormat.APX])
def test_round_trip_on_every_small_graph(fmt, graphs_n3):
    for graph in graphs_n3:
        assert parse_graph(serialize_graph(graph, fmt), fmt) == graph


@pytest.mark.parametrize("fmt", [GraphFormat.TGF, GraphFormat.APX])
def test_round_trip_with_underscore_and_digit_names(fmt):
    graph = build_graph(["x_1", "Y2", "_"], [("x_1", "Y2"), ("_", "_")])
    assert parse_graph(serialize_graph(graph, fmt), fmt) == graph


def test_parse_accepts_utf8_bytes(mutual):
    text = serialize_graph(mutual, GraphFormat.TGF)
    assert parse_graph(text.encode("utf-8"), GraphFormat.TGF) == mutual


def test_parse_rejects_non_utf8_bytes():
    with pytest.raises(ParseError, match="utf-8"):
        parse_graph(b"\xff\xfe", GraphFormat.TGF)


# -- tgf parsing -------------------------------------------------------------------


def test_tgf_tolerates_blank_lines_and_padding():
    graph = parse_graph("\n  a  \n\nb\n#\n\n  b   a  \n\n", GraphFormat.TGF)
    assert graph == build_graph(["a", "b"], [("b", "a")])


def test_tgf_edge_section_may_be_empty():
    assert parse_graph("a\n#\n", GraphFormat.TGF) == build_graph(["a"])


def test_tgf_requires_the_separator():
    with pytest.raises(ParseError, match="missing '#' separator"):
        parse_graph("a\nb\n", GraphFormat.TGF)


def test_tgf_errors_carry_line_numbers():
    with pytest.raises(ParseError, match="line 2: duplicate argument id 'a'"):
        parse_graph("a\na\n#\n", GraphFormat.TGF)
    with pytest.raises(ParseError, match="line 1: invalid argument id"):
        parse_graph("a-b\n#\n", GraphFormat.TGF)
    with pytest.raises(ParseError, match="line 3: expected 'source target'"):
        parse_graph("a\n#\na a a\n", GraphFormat.TGF)
    with pytest.raises(ParseError, match="line 3: .*undeclared argument 'b'"):
        parse_graph("a\n#\nb a\n", GraphFormat.TGF)


def test_parse_error_exposes_the_line_attribute():
    with pytest.raises(ParseError) as info:
        parse_graph("a\na\n#\n", GraphFormat.TGF)
    assert info.value.line == 2
    with pytest.raises(ParseError) as info:
        parse_graph("a\nb\n", GraphFormat.TGF)
    assert info.value.line is None


# -- apx parsing --------------------------------------------------------------------


def test_apx_tolerates_comments_and_whitespace():
    text = "% header\narg( a ).\n\narg(b).\natt( b , a ).\n% done\n"
    assert parse_graph(text, GraphFormat.APX) == build_graph(
        ["a", "b"], [("b", "a")]
    )


def test_apx_rejects_junk_lines():
    with pytest.raises(ParseError, match="line 2: expected 'arg"):
        parse_graph("arg(a).\nargument(b).\n", GraphFormat.APX)


def test_apx_rejects_duplicates_and_undeclared_endpoints():
    with pytest.raises(ParseError, match="line 2: duplicate argument id 'a'"):
        parse_graph("arg(a).\narg(a).\n", GraphFormat.APX)
    # undeclared endpoints are reported with the attack's own line number,
    # even when the declaration appears later in the file
    with pytest.raises(ParseError, match="line 1: .*undeclared argument 'b'"):
        parse_graph("att(b,a).\narg(a).\n", GraphFormat.APX)


def test_apx_attacks_may_precede_declarations():
    text = "att(b,a).\narg(a).\narg(b).\n"
    assert parse_graph(text, GraphFormat.APX) == build_graph(
        ["a", "b"], [("b", "a")]
    )


def test_empty_apx_text_is_the_empty_graph():
    assert parse_graph("", GraphFormat.APX) == build_graph([])


# -- format plumbing ------------------------------------------------------------------


def test_format_for_path_only_apx_is_special():
    assert format_for_path("graph.apx") is GraphFormat.APX
    assert format_for_path("graph.APX") is GraphFormat.APX
    assert format_for_path("graph.tgf") is GraphFormat.TGF
    assert format_for_path("graph.txt") is GraphFormat.TGF
    assert format_for_path("graph") is GraphFormat.TGF


def test_parse_accepts_format_strings():
    assert parse_graph("a\n#\n", "tgf") == build_graph(["a"])
    with pytest.raises(ValueError):
        parse_graph("a\n#\n", "dot")


def test_four_hundred_graph_round_trip_is_exact(graphs_n2):
    # serialization is injective on distinct graphs
    texts = {serialize_graph(g, GraphFormat.TGF) for g in graphs_n2}
    assert len(texts) == len(graphs_n2)
