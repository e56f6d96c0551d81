import random

import pytest
from hypothesis import given, settings

from gen import multigraphs, random_multigraph
from mixedspec import fixtures
from mixedspec.adjacency import integrated_adjacency
from mixedspec.graph import MixedGraph
from mixedspec.io import GraphParseError, dump, load, parse, serialize


def test_single_edge():
    g = parse("mg 1\nn 2\ne 0 1")
    assert g == MixedGraph.build(2, edges=[(0, 1)])


def test_directed_loop_matrix():
    m, _ = integrated_adjacency(parse("mg 1\nn 1\nla 0"))
    assert m.rows == ((0, 1), (1, 0))


def test_mixed4_fixture_matrix():
    m, _ = integrated_adjacency(fixtures.load("mixed4"))
    assert m.rows[0] == (2, 1, 1, 1, 1, 1, 0, 0)
    assert [m[i, i] for i in range(8)] == [2, 2, 4, 0, 2, 2, 4, 0]


def test_accumulation_and_self_pairs():
    g = parse("mg 1\nn 3\ne 0 1\ne 1 0 2\na 2 1\na 2 1 3\ne 2 2\na 1 1\nle 2\nla 0 0\n")
    assert g.edges == {(0, 1): 3}
    assert g.arcs == {(2, 1): 4}
    assert g.loops == {2: 2} and g.dloops == {1: 1}


def test_comments_and_blank_lines():
    g = parse("# leading comment\n\nmg 1   # header\nn 2\n  e 0 1 # trailing\n")
    assert g.edges == {(0, 1): 1}


@pytest.mark.parametrize("text, line, column", [
    ("mg 1\nn 2\nx 0 1", 3, 1),
    ("mg 1\nn 2\ne 0 2", 3, 5),
    ("mg 1\nn 2\ne 0 1 -1", 3, 7),
    ("n 2\ne 0 1", 1, 1),
    ("mg 1\ne 0 1", 2, 1),
    ("mg 2\nn 1", 1, 4),
    ("mg 1\nn 2\ne 0 z", 3, 5),
    ("mg 1\nn 2\ne 0", 3, 1),
    ("mg 1\nn 2\nn 3", 3, 1),
    ("mg 1\nn -1", 2, 3),
    ("", 1, 1),
])
def test_parse_errors(text, line, column):
    with pytest.raises(GraphParseError) as info:
        parse(text)
    assert (info.value.line, info.value.column) == (line, column)
    assert f"line {line}" in str(info.value)


def test_missing_vertex_count_after_header():
    with pytest.raises(GraphParseError, match="missing"):
        parse("mg 1\n")


def test_serialize_canonical_order():
    g = MixedGraph.build(3, edges=[(1, 2), (0, 1), (0, 1)], arcs=[(2, 0)], loops=[1], dloops=[2])
    assert serialize(g) == "mg 1\nn 3\ne 0 1 2\ne 1 2\nle 1\na 2 0\nla 2\n"


def test_empty_graph_round_trip():
    assert serialize(MixedGraph(0)) == "mg 1\nn 0\n"
    assert parse(serialize(MixedGraph(0))) == MixedGraph(0)


def test_random_round_trips_byte_identical():
    rng = random.Random(30)
    for _ in range(200):
        g = random_multigraph(rng)
        text = serialize(g)
        assert parse(text) == g
        assert serialize(parse(text)) == text


@given(multigraphs())
@settings(max_examples=150, deadline=None)
def test_round_trip_property(g):
    assert parse(serialize(g)) == g


def test_fixtures_are_canonical_after_reparse():
    for name in fixtures.names():
        g = fixtures.load(name)
        assert parse(serialize(g)) == g


def test_dump_and_load(tmp_path):
    g = fixtures.load("components7")
    p = tmp_path / "g.mg"
    dump(g, p)
    assert load(p) == g
