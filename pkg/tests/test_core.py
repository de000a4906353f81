from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from bergestab.constructions import CompositionVector, ConstructionParams, canonical_params, make_H
from bergestab.core import (
    Graph,
    GraphError,
    Hypergraph,
    MultiTraceHypergraph,
    RedBlueGraph,
    binomial,
    clique_hypergraph,
    connected_components,
    count_cliques,
    is_subgraph,
    is_subhypergraph,
    iter_cliques,
)
from bergestab.lab.oracles import brute_clique_count, brute_is_subgraph

from conftest import graphs


SAMPLE = ConstructionParams.of(13, 6, 3, (5, 3, 1, 1))


@pytest.mark.parametrize("a,b,want", [(5, 2, 10), (3, 5, 0), (0, 0, 1), (4, -1, 0)])
def test_binomial(a, b, want):
    assert binomial(a, b) == want


def test_clique_counts_of_examples():
    assert count_cliques(Graph.complete(4), 3) == 4
    assert count_cliques(make_H(SAMPLE, relaxed=True), 2) == 46
    assert count_cliques(make_H(canonical_params(13, 6, 3), relaxed=True), 2) == 54


def test_clique_hypergraph_examples():
    assert clique_hypergraph(Graph.complete(4), 3).m == 4
    g = Graph(5, ((0, 1), (1, 2), (3, 4)))
    assert clique_hypergraph(g, 2).edges == g.edges
    assert clique_hypergraph(make_H(canonical_params(10, 4, 4)), 3).m == 40


@given(graphs(max_n=8), st.integers(1, 5))
def test_count_cliques_matches_naive_count(g, r):
    assert count_cliques(g, r) == brute_clique_count(g, r)
    cliques = list(iter_cliques(g, r))
    assert len(cliques) == len(set(cliques)) == brute_clique_count(g, r)


def test_components_examples():
    k5k1 = Graph(6, tuple((u, v) for u in range(5) for v in range(u + 1, 5)))
    assert connected_components(k5k1) == [frozenset(range(5)), frozenset({5})]
    assert connected_components(Graph(3)) == [frozenset({0}), frozenset({1}), frozenset({2})]
    sizes = [len(c) for c in connected_components(make_H(SAMPLE, relaxed=True), removed=range(3))]
    assert sizes == [5, 3, 1, 1]


@given(graphs(max_n=9), st.data())
def test_components_partition_the_remaining_vertices(g, data):
    removed = data.draw(st.sets(st.integers(0, max(g.n - 1, 0)), max_size=g.n)) if g.n else set()
    comps = connected_components(g, removed)
    covered = [v for c in comps for v in c]
    assert sorted(covered) == sorted(set(range(g.n)) - removed)
    for c in comps:
        for u, v in g.edges:
            if u in c and v not in removed:
                assert v in c


def test_subgraph_examples():
    p3 = Graph(3, ((0, 1), (1, 2)))
    assert is_subgraph(p3, Graph.complete(3))[0]
    m2 = Graph(4, ((0, 1), (2, 3)))
    star = Graph(6, tuple((0, v) for v in range(1, 6)))
    assert not is_subgraph(m2, star)[0]
    h = make_H(canonical_params(9, 4, 4), relaxed=True)
    minus = h.without_edge(*h.edges[0])
    assert is_subgraph(minus, h, {v: v for v in range(9)})[0]


@given(graphs(max_n=5), graphs(max_n=6))
def test_subgraph_search_matches_permutation_oracle(g, host):
    ok, mapping = is_subgraph(g, host)
    assert ok == brute_is_subgraph(g, host)
    if ok:
        assert is_subgraph(g, host, mapping)[0]


def test_subhypergraph_under_mapping():
    host = Hypergraph(5, 3, ((0, 1, 2), (0, 1, 3), (2, 3, 4)))
    sub = Hypergraph(4, 3, ((0, 1, 2),))
    assert is_subhypergraph(sub, host)[0]
    assert not is_subhypergraph(sub, host, {0: 0, 1: 2, 2: 4, 3: 1})[0]


@pytest.mark.parametrize("make", [
    lambda: Graph(3, ((0, 0),)),
    lambda: Graph(3, ((0, 3),)),
    lambda: Graph(3, ((0, 1), (1, 0))),
    lambda: Hypergraph(4, 3, ((0, 1, 2), (2, 1, 0))),
    lambda: Hypergraph(4, 3, ((0, 1),)),
    lambda: Hypergraph(2, 3, ()),
    lambda: MultiTraceHypergraph(4, ((1,),)),
    lambda: RedBlueGraph(3, ((0, 1),), ((1, 0),)),
])
def test_invariant_violations_raise(make):
    with pytest.raises(GraphError):
        make()


def test_multi_trace_keeps_multiplicity():
    h = MultiTraceHypergraph(5, ((1, 2), (2, 1), (1, 2, 3)))
    assert h.m == 3 and h.multiplicity((2, 1)) == 2 and h.distinct_edges() == [(1, 2), (1, 2, 3)]


def test_composition_vector_rejects_even_or_increasing_parts():
    with pytest.raises(ValueError):
        CompositionVector((2, 1))
    with pytest.raises(ValueError):
        CompositionVector((1, 3))
