from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import given
from hypothesis import strategies as st

from lefthand import GraphError, LabeledGraph, is_independent, parse_graph, random_chordal, serialize_graph
from lefthand.fixtures import goldner_harary, path_graph
from lefthand.graph import GraphParseError

DATA = Path(__file__).parent / "data"


def test_empty_json():
    g = parse_graph('{"vertices": [], "edges": []}')
    assert g.n == 0 and g.m == 0


@pytest.mark.parametrize("name,fmt", [("goldner_harary.json", "json"), ("goldner_harary.edgelist", "edgelist")])
def test_goldner_harary_fixture_files(name, fmt):
    g = parse_graph((DATA / name).read_text(), fmt)
    assert (g.n, g.m) == (11, 27)
    assert set(g.labels) == {Fraction(1, 8)}
    assert g == goldner_harary()


def test_decimal_labels_are_exact():
    g = parse_graph('{"vertices": [{"name": "a", "p": "0.125"}], "edges": []}')
    assert g.label("a") == Fraction(1, 8)


@pytest.mark.parametrize(
    "text,message",
    [
        ('{"vertices": [{"name": "a", "p": "3/2"}], "edges": []}', "label out of range a"),
        ('{"vertices": [{"name": "a", "p": "1/2"}, {"name": "a", "p": "0"}], "edges": []}', "duplicate vertex"),
        ('{"vertices": [{"name": "a", "p": "1/2"}], "edges": [["a", "z"]]}', "unknown endpoint"),
        ('{"vertices": [{"name": "a", "p": "1/2"}], "edges": [["a", "a"]]}', "self-loop rejected"),
    ],
)
def test_json_validation_errors(text, message):
    with pytest.raises(GraphError, match=message):
        parse_graph(text)


def test_parse_errors_carry_line_numbers():
    with pytest.raises(GraphParseError) as exc:
        parse_graph('{\n"vertices": [\n}', "json")
    assert exc.value.line == 3
    with pytest.raises(GraphParseError) as exc:
        parse_graph("vertex a 1/2\nvertex b\n", "edgelist")
    assert exc.value.line == 2
    with pytest.raises(GraphParseError, match="line 2"):
        parse_graph("vertex a 1/2\nvertex b half\n", "edgelist")


def test_is_independent():
    g = path_graph("abc")
    assert is_independent(g, {"a", "c"})
    assert not is_independent(goldner_harary(), {"e", "f"})
    assert is_independent(g, set())
    with pytest.raises(GraphError):
        is_independent(g, {"zz"})


def test_serialize_examples():
    empty = LabeledGraph.from_edges([], [])
    assert parse_graph(serialize_graph(empty)) == empty
    one = LabeledGraph.from_edges([("x", Fraction(1, 2))], [])
    text = serialize_graph(one)
    assert '"p": "1/2"' in text
    assert parse_graph(serialize_graph(goldner_harary())) == goldner_harary()


@given(st.integers(0, 10), st.integers(0, 2**32), st.sampled_from(["json", "edgelist"]))
def test_round_trip(n, seed, fmt):
    g = random_chordal(n, seed)
    assert parse_graph(serialize_graph(g, fmt), fmt) == g


@given(st.integers(0, 10), st.integers(0, 2**32))
def test_adjacency_symmetric(n, seed):
    g = random_chordal(n, seed)
    for u in g.names:
        for v in g.names:
            assert g.adjacent(u, v) == g.adjacent(v, u)
