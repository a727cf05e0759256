import networkx as nx
import pytest
from hypothesis import given, settings

from geodekit import families as F
from geodekit.codecs import (
    ParseError,
    read_edge_list,
    read_graph,
    read_graph6,
    write_dot,
    write_edge_list,
    write_graph6,
)

from conftest import connected_graphs, to_nx


def test_edge_list_p3():
    G = read_edge_list("3\n0 1\n1 2")
    assert G.edges == F.path(3).edges


def test_edge_list_comments_and_blank_lines():
    G = read_edge_list("# a path\n\n3\n0 1  # first\n\n1 2\n")
    assert G.edges == ((0, 1), (1, 2))


@pytest.mark.parametrize("text,kind,line", [
    ("2\n0 0", "loop", 2),
    ("3\n0 1\n1 0", "duplicate", 3),
    ("2\n0 5", "range", 2),
])
def test_edge_list_errors(text, kind, line):
    with pytest.raises(ParseError) as exc:
        read_edge_list(text)
    assert exc.value.kind == kind and exc.value.position == line


def test_edge_list_garbage_reports_line():
    with pytest.raises(ParseError) as exc:
        read_edge_list("3\n0 1\nfoo")
    assert exc.value.position == 3


def test_graph6_c5_round_trip():
    s = write_graph6(F.cycle(5))
    assert s == nx.to_graph6_bytes(nx.cycle_graph(5), header=False).decode().strip()
    assert write_graph6(read_graph6(s)) == s


def test_graph6_header():
    s = write_graph6(F.complete(4), header=True)
    assert s.startswith(">>graph6<<")
    assert read_graph6(s).is_complete()
    with pytest.raises(ParseError) as exc:
        read_graph6(">>sparse6<<:Bw")
    assert exc.value.kind == "header"
    with pytest.raises(ParseError):
        read_graph6(":Fa@x^")


def test_graph6_errors_give_byte_position():
    with pytest.raises(ParseError) as exc:
        read_graph6("D" + "\x10")
    assert exc.value.position == 1
    with pytest.raises(ParseError):
        read_graph6("D?")  # K5 slot count needs 2 bytes
    with pytest.raises(ParseError):
        read_graph6("~??~")


def test_graph6_size_limit():
    assert write_graph6(F.path(62))
    with pytest.raises(Exception):
        write_graph6(F.path(63))


@settings(max_examples=80, deadline=None)
@given(connected_graphs(max_n=12))
def test_round_trips_against_networkx(G):
    s = write_graph6(G)
    H = nx.from_graph6_bytes(s.encode())
    assert sorted(tuple(sorted(e)) for e in H.edges()) == list(G.edges)
    assert nx.to_graph6_bytes(to_nx(G), header=False).decode().strip() == s
    assert read_graph6(s).edges == G.edges
    assert read_edge_list(write_edge_list(G)).edges == G.edges


def test_dot_lists_indices():
    d = write_dot(F.path(3))
    assert d.startswith("graph G {") and "0 -- 1;" in d and '2 [label="2"];' in d


def test_read_graph_sniffs_format():
    assert read_graph(write_graph6(F.cycle(5))).edges == F.cycle(5).edges
    assert read_graph("3\n0 1\n1 2\n").edges == F.path(3).edges
