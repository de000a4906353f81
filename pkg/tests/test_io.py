from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from bergestab.core import Graph, Hypergraph, MultiTraceHypergraph, RedBlueGraph
from bergestab.io import ParseError, emit, parse, parse_text, write

from conftest import graphs, hypergraphs


def test_parse_examples():
    g = parse_text("2 4 3\n0 1\n1 2\n2 3\n")
    assert isinstance(g, Graph) and g.edges == ((0, 1), (1, 2), (2, 3))
    h = parse_text("3 5 2\n0 1 2\n2 3 4\n")
    assert isinstance(h, Hypergraph) and h.r == 3 and h.m == 2
    assert isinstance(parse_text("2 4 1\n0 1\n", kind="hypergraph"), Hypergraph)
    rb = parse_text("rb 3 2\n0 1 R\n1 2 B\n")
    assert rb.red == ((0, 1),) and rb.blue == ((1, 2),)
    tr = parse_text("3 5 3\n1 2\n1 2\n1 2 3\n", multi=True)
    assert isinstance(tr, MultiTraceHypergraph) and tr.multiplicity((1, 2)) == 2


@pytest.mark.parametrize("text,line,column", [
    ("", 1, 1),
    ("3 4\n", 1, 1),
    ("3 4 2\n0 1 2\n", 3, 1),
    ("3 4 1\n0 1 5\n", 2, 5),
    ("3 4 1\n0 1 1\n", 2, 5),
    ("3 4 1\n0 2 1\n", 2, 5),
    ("3 4 2\n0 1 2\n0 1 2\n", 3, 1),
    ("3 4 1\n0 x 2\n", 2, 3),
    ("3 4 1\n0 1\n", 2, 1),
    ("2 3 1\n-1 2\n", 2, 1),
    ("rb 3 1\n0 0 R\n", 2, 3),
    ("rb 3 1\n0 1 G\n", 2, 5),
    ("rb 3 2\n0 1 R\n1 0 B\n", 3, 1),
    ("5 4 0\n", 1, 1),
])
def test_errors_carry_position(text, line, column):
    with pytest.raises(ParseError) as info:
        parse_text(text)
    assert (info.value.line, info.value.column) == (line, column)


def test_duplicates_are_allowed_for_traces_only():
    text = "2 4 2\n0 1\n0 1\n"
    with pytest.raises(ParseError):
        parse_text(text)
    assert parse_text(text, multi=True).m == 2


@given(graphs(max_n=9))
def test_graph_round_trip(g):
    assert parse_text(emit(g)) == g


@given(hypergraphs(r_values=(3, 4, 5), max_n=8))
def test_hypergraph_round_trip(h):
    assert parse_text(emit(h)) == h


@given(graphs(max_n=8), st.data())
def test_redblue_round_trip(g, data):
    red = tuple(e for e in g.edges if data.draw(st.booleans()))
    rb = RedBlueGraph(g.n, red, tuple(e for e in g.edges if e not in red))
    back = parse_text(emit(rb))
    assert set(back.red) == set(rb.red) and set(back.blue) == set(rb.blue) and back.n == rb.n


@given(st.integers(2, 7).flatmap(lambda n: st.tuples(
    st.just(n),
    st.lists(st.lists(st.integers(0, n - 1), min_size=2, max_size=n, unique=True).map(lambda e: tuple(sorted(e))),
             max_size=8))))
def test_multi_round_trip(case):
    n, edges = case
    h = MultiTraceHypergraph(n, tuple(edges))
    assert parse_text(emit(h), multi=True) == h


def test_file_round_trip(tmp_path):
    h = Hypergraph(6, 3, ((0, 1, 2), (3, 4, 5)))
    path = tmp_path / "h.hg"
    write(h, path)
    assert parse(path) == h
