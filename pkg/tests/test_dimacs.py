import io

import pytest

from stablequbo.core.dimacs import (
    load_dimacs,
    parse_dimacs,
    read_dimacs,
    serialize_dimacs,
    write_dimacs,
)
from stablequbo.core.errors import (
    DimacsParseError,
    DuplicateHeaderError,
    EndpointOutOfRangeError,
    MalformedTokenError,
    MissingHeaderError,
    SelfLoopError,
)
from stablequbo.core.generators import generate_random_graph
from tests.helpers import random_graph_suite

SAMPLE = """c five vertex example
c second comment
p edge 5 5
e 1 4
e 2 3
e 2 4
e 3 4
e 2 5
"""


def test_parse_sample(five_vertex_graph):
    instance = load_dimacs(SAMPLE)
    assert instance.graph == five_vertex_graph
    assert instance.declared_edges == 5
    assert instance.comments == ("five vertex example", "second comment")


def test_parse_accepts_bytes_streams_and_col_header(five_vertex_graph):
    assert parse_dimacs(SAMPLE.encode()) == five_vertex_graph
    assert parse_dimacs(io.BytesIO(SAMPLE.encode())) == five_vertex_graph
    assert parse_dimacs(SAMPLE.replace("p edge", "p col")) == five_vertex_graph


def test_duplicate_edges_collapse_with_warning(log_messages):
    g = parse_dimacs("p edge 3 3\ne 1 2\ne 2 1\ne 2 3\n", name="dup")
    assert g.m == 2
    assert any("header declares 3 edges" in m for m in log_messages)


@pytest.mark.parametrize(
    "text, error, line",
    [
        ("e 1 2\np edge 2 1\n", MissingHeaderError, 1),
        ("p edge 2 1\np edge 2 1\n", DuplicateHeaderError, 2),
        ("p edge 2 1\ne 1 3\n", EndpointOutOfRangeError, 2),
        ("p edge 2 1\ne 0 1\n", EndpointOutOfRangeError, 2),
        ("c ok\np edge 2 1\ne 2 2\n", SelfLoopError, 3),
        ("p edge 2 1\ne 1 x\n", MalformedTokenError, 2),
        ("p edge 2 1\nx 1 2\n", MalformedTokenError, 2),
        ("p graph 2 1\n", MalformedTokenError, 1),
    ],
)
def test_parse_errors_carry_line_numbers(text, error, line):
    with pytest.raises(error) as info:
        parse_dimacs(text)
    assert info.value.line == line
    assert isinstance(info.value, DimacsParseError)


def test_missing_header_is_global():
    with pytest.raises(MissingHeaderError) as info:
        parse_dimacs("c nothing here\n")
    assert info.value.line is None


def test_serialize_uses_one_based_sorted_edges(five_vertex_graph):
    text = serialize_dimacs(five_vertex_graph, ["example"])
    assert text.splitlines() == [
        "c example",
        "p edge 5 5",
        "e 1 4",
        "e 2 3",
        "e 2 4",
        "e 2 5",
        "e 3 4",
    ]


def test_write_then_read(tmp_path):
    g = generate_random_graph(25, 0.3, seed=9)
    path = write_dimacs(tmp_path / "nested" / "g.clq", g)
    assert read_dimacs(path) == g


def test_serialize_then_parse_over_random_graphs():
    for _, g in random_graph_suite(200, sizes=range(0, 30), ps=(0.0, 0.1, 0.5, 0.9, 1.0), seed=5):
        assert parse_dimacs(serialize_dimacs(g)) == g
