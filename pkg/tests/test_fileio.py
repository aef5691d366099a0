import json

import pytest

from srdual import (
    build,
    build_dual_graph,
    dual_graph_from_json,
    export_graph,
    parse_facet_file,
    serialize_facet_file,
)
from srdual.errors import ParseError
from srdual.families import FamilyId, corpus


def test_parse_letters_mode_fig_a1():
    cx = parse_facet_file("AB\nBC\nCD\nDE", letters=True)
    a1 = build(FamilyId("fig_a1"), check=False)
    assert cx == a1


def test_parse_whitespace_tokens():
    cx = parse_facet_file("x1 x2\nx1 x3")
    assert cx.n == 3 and cx.d == 2 and len(cx.facets) == 2
    assert cx.vertex_name(0) == "x1"


def test_parse_antichain_reduction_warns():
    with pytest.warns(UserWarning):
        cx = parse_facet_file("A B C\nA B")
    assert len(cx.facets) == 1


def test_parse_comments_and_header():
    text = "# a comment\nvertices: A B C D\nAB CD # trailing\n".replace(
        "AB CD", "A B\nC D")
    cx = parse_facet_file(text)
    assert cx.n == 4 and len(cx.facets) == 2


def test_parse_errors_carry_line_numbers():
    with pytest.raises(ParseError):
        parse_facet_file("")
    with pytest.raises(ParseError) as ei:
        parse_facet_file("vertices: A B\nA C")
    assert ei.value.line == 2
    with pytest.raises(ParseError):
        parse_facet_file("vertices: A A\nA")
    with pytest.raises(ParseError):
        parse_facet_file("vertices: A B\nvertices: C D\nA B")


def test_round_trip_over_corpus():
    for fam, cx, _, _ in corpus():
        again = parse_facet_file(serialize_facet_file(cx))
        assert again == cx, str(fam)
        assert tuple(again.vertex_name(v) for v in range(again.n)) == \
               tuple(cx.vertex_name(v) for v in range(cx.n))


def test_round_trip_letters():
    a2 = build(FamilyId("fig_a2"), check=False)
    text = serialize_facet_file(a2, letters=True)
    assert parse_facet_file(text, letters=True) == a2


def test_export_dot_fig_a1():
    g = build_dual_graph(build(FamilyId("fig_a1"), check=False))
    dot = export_graph(g, fmt="dot")
    assert dot.count("label=") == 4
    assert dot.count(" -- ") == 3
    assert dot == export_graph(g, fmt="dot")  # deterministic


def test_export_dot_isolated_nodes():
    from srdual import from_facets
    g = build_dual_graph(from_facets([[0, 1, 2], [3, 4, 5]]))
    dot = export_graph(g, fmt="dot")
    assert dot.count("label=") == 2 and " -- " not in dot


def test_export_json_round_trips_fig_a2():
    g = build_dual_graph(build(FamilyId("fig_a2"), check=False))
    doc = json.loads(export_graph(g, fmt="json"))
    assert len(doc["nodes"]) == 10 and len(doc["edges"]) == 12
    back = dual_graph_from_json(export_graph(g, fmt="json"))
    assert back.node_facets == g.node_facets
    assert back.adjacency == g.adjacency


def test_export_complement_labels():
    g = build_dual_graph(build(FamilyId("fig_a2"), check=False))
    dot = export_graph(g, fmt="dot", labels="complement")
    assert "DEFG" in dot  # complement of ABC on 7 vertices


def test_export_unknown_format():
    g = build_dual_graph(build(FamilyId("fig_a1"), check=False))
    with pytest.raises(ParseError):
        export_graph(g, fmt="svg")
