from __future__ import annotations

from itertools import combinations

from hypothesis import given
from hypothesis import strategies as st

from bergestab.berge import (
    berge_matching_number,
    classify_m2_free,
    contains_berge,
    contains_berge_matching,
    g_prime_value,
    g_value,
    gmp_reduce,
    reduction_problems,
    trace_hypergraph,
)
from bergestab.constructions import make_extremal
from bergestab.core import Graph, Hypergraph, MultiTraceHypergraph, RedBlueGraph, clique_hypergraph
from bergestab.lab.oracles import brute_berge_matching
from bergestab.matching import matching_number

from conftest import hypergraphs


def test_detector_examples():
    h = Hypergraph(7, 3, ((1, 2, 3), (4, 5, 6)))
    w = contains_berge_matching(h, 2)
    assert w.pairs == ((1, 2), (4, 5)) and w.is_valid(h)
    assert contains_berge_matching(make_extremal(10, 4, 4, 3), 5) is None
    assert contains_berge_matching(Hypergraph(5, 3, ((0, 1, 2),)), 2) is None


@given(hypergraphs(max_n=7, max_m=9), st.integers(1, 4))
def test_detector_agrees_with_subset_oracle(h, s):
    w = contains_berge_matching(h, s)
    assert (w is not None) == brute_berge_matching(h.edges, s)
    if w is not None:
        assert w.is_valid(h) and len(w) == s


@given(hypergraphs(max_n=8, max_m=14))
def test_berge_matching_number_bounded_by_shadow(h):
    nu = berge_matching_number(h)
    assert nu <= matching_number(h.shadow()) and nu <= h.m


def test_detector_on_multi_trace_uses_parallel_copies():
    h0 = MultiTraceHypergraph(6, ((1, 2), (1, 2)))
    assert contains_berge_matching(h0, 2) is None
    h1 = MultiTraceHypergraph(6, ((1, 2, 3), (1, 2, 3)))
    assert contains_berge_matching(h1, 2) is None
    h2 = MultiTraceHypergraph(6, ((1, 2, 3, 4), (1, 2, 3, 4)))
    assert contains_berge_matching(h2, 2) is not None


def test_forbidden_vertices_are_avoided():
    h = Hypergraph(6, 3, ((0, 1, 2), (3, 4, 5)))
    assert contains_berge_matching(h, 2, forbidden=(0, 1)) is None
    assert contains_berge_matching(h, 2, forbidden=(0,)) is not None


def test_berge_forest_pattern():
    h = Hypergraph(6, 3, ((0, 1, 2), (2, 3, 4), (0, 4, 5)))
    p3 = Graph(3, ((0, 1), (1, 2)))
    found = contains_berge(h, p3)
    assert found is not None and len(set(found["assignment"].values())) == 2
    assert contains_berge(Hypergraph(4, 3, ((0, 1, 2),)), p3) is None


def test_reduction_examples():
    res = gmp_reduce(Hypergraph(5, 3, ((1, 2, 3), (1, 2, 4))))
    assert len(res.E) == 2 and len(res.G.red) == 2 and res.G.blue == ()
    single = gmp_reduce(Hypergraph(4, 3, ((0, 1, 2),)))
    assert single.E == ((0, 1, 2),) and len(single.G.red) == 1
    k4 = Hypergraph(5, 3, tuple(combinations(range(1, 5), 3)))
    assert len(gmp_reduce(k4).E) == 4


def test_reduction_of_complete_triple_system():
    # 20 triples but only 15 pairs: the blue part must be closed under the reachable triples
    h = Hypergraph(6, 3, tuple(combinations(range(6), 3)))
    res = gmp_reduce(h)
    assert reduction_problems(h, res) == []
    assert g_prime_value(res.G, h) == h.m


@given(hypergraphs(max_n=9, max_m=25))
def test_reduction_invariants(h):
    res = gmp_reduce(h)
    assert reduction_problems(h, res) == []
    assert g_prime_value(res.G, h, h.r) == h.m
    # each edge of G has its own hyperedge, so G's matching number is a Berge matching of h
    assert matching_number(res.G.underlying()) <= berge_matching_number(h)


def test_g_examples():
    k5 = Graph.complete(5)
    assert g_value(RedBlueGraph.monochrome(k5, "blue"), 3) == 10
    assert g_value(RedBlueGraph.monochrome(k5, "red"), 3) == 10
    one_red = RedBlueGraph(5, (k5.edges[0],), k5.edges[1:])
    assert g_value(one_red, 3) == 8


def test_g_prime_examples():
    blue = Graph(5, ((0, 1), (0, 2), (1, 2), (2, 3), (1, 3)))
    coloured = RedBlueGraph.monochrome(blue, "blue")
    h = clique_hypergraph(blue, 3)
    assert g_prime_value(coloured, h) == g_value(coloured, 3)
    red_only = RedBlueGraph(5, ((0, 1), (3, 4)), ())
    assert g_prime_value(red_only, Hypergraph(5, 3, ((0, 1, 2),))) == 2


def test_trace_examples():
    h = Hypergraph(6, 3, ((1, 2, 3), (1, 4, 5)))
    assert trace_hypergraph(h, {1}).edges == ((2, 3), (4, 5))
    h = Hypergraph(5, 3, ((1, 2, 3), (1, 2, 4)))
    assert trace_hypergraph(h, {3, 4}).edges == ((1, 2), (1, 2))
    assert trace_hypergraph(Hypergraph(5, 3, ((0, 1, 2),)), {0, 1}).m == 0


def test_classifier_examples():
    star = MultiTraceHypergraph(6, ((0, 1), (0, 2), (0, 3), (0, 4)))
    assert classify_m2_free(star).kind == "star" and classify_m2_free(star).vertices == (0,)
    tri = MultiTraceHypergraph(4, ((0, 1, 2), (0, 1), (1, 2)))
    c = classify_m2_free(tri)
    assert c.kind == "triangle-supported" and c.vertices == (0, 1, 2)
    bad = classify_m2_free(MultiTraceHypergraph(5, ((1, 2), (3, 4))))
    assert bad.is_failure and bad.witness is not None
    assert classify_m2_free(MultiTraceHypergraph(5)).kind == "empty"
    assert classify_m2_free(MultiTraceHypergraph(6, ((0, 1, 2, 3, 4),))).kind == "single-large-edge"
    # parallel copies of a large edge give the two disjoint pairs separate representatives
    assert classify_m2_free(MultiTraceHypergraph(6, ((0, 1, 2, 3, 4),) * 2)).is_failure


@given(hypergraphs(r_values=(3,), max_n=7, max_m=8), st.data())
def test_classifier_is_consistent_with_detector(h, data):
    S = data.draw(st.sets(st.integers(0, h.n - 1), max_size=3))
    tr = trace_hypergraph(h, S)
    c = classify_m2_free(tr)
    assert c.is_failure == (contains_berge_matching(tr, 2) is not None)
