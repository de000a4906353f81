from __future__ import annotations

import random
import warnings

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bergestab.constructions import canonical_params, make_extremal, make_H
from bergestab.core import Graph, Hypergraph
from bergestab.lab.random_gen import random_matching_free_graph
from bergestab.lab.stability import (
    StabilitySet,
    trace_case_check,
    embedding_problems,
    find_stability_set,
    stability_embed,
    stability_set_problems,
    within_extremal_core,
)
from bergestab.berge import trace_hypergraph
from bergestab.matching import matching_number


def test_construction_embeds_into_itself():
    g = make_H(canonical_params(9, 4, 1), relaxed=True)
    emb = stability_embed(g, 4, 0, 0)
    assert (emb.t, emb.c.parts) == (1, (7, 1))
    assert embedding_problems(g, emb, 4) == []


def test_two_disjoint_edges():
    m2 = Graph(6, ((0, 1), (2, 3)))
    emb = stability_embed(m2, 2, 1, 1)
    assert (emb.t, emb.c.parts) == (2, (1, 1, 1, 1))
    assert len(emb.T) == 2 and all(len(set(emb.T) & {a, b}) == 1 for a, b in m2.edges)


def test_clique_plus_isolated_vertex():
    g = Graph(6, tuple((u, v) for u in range(5) for v in range(u + 1, 5)))
    emb = stability_embed(g, 2, 1, 1)
    assert (emb.t, emb.c.parts) == (0, (5, 1))


def test_matching_number_above_k_is_rejected():
    with pytest.raises(ValueError):
        stability_embed(Graph(6, ((0, 1), (2, 3), (4, 5))), 2, 0, 0)


@given(st.integers(0, 2**32 - 1))
@settings(max_examples=40)
def test_embeddings_always_validate(seed):
    rng = random.Random(seed)
    k = rng.randint(1, 4)
    n = rng.randint(2 * k + 2, 12)
    g = random_matching_free_graph(rng, n, k)
    p, q = rng.randint(0, 1), rng.randint(0, 1)
    emb = stability_embed(g, k, p, q)
    assert emb is not None
    assert embedding_problems(g, emb, k) == []


@given(st.integers(0, 2**32 - 1))
@settings(max_examples=30)
def test_dense_graphs_get_an_extremal_t(seed):
    # above max{h_2(n,k,p-1), h_2(n,k,k-q+1)} edges the structure must be near an endpoint
    from bergestab.constructions import h_value

    rng = random.Random(seed)
    k = rng.randint(2, 4)
    n = rng.randint(2 * k + 2, 12)
    p, q = 1, 1
    host = make_H(canonical_params(n, k, rng.choice([0, k])), relaxed=True)
    threshold = max(h_value(n, k, p, 2), h_value(n, k, k - q, 2))
    edges = list(host.edges)
    rng.shuffle(edges)
    g = Graph(n, tuple(sorted(edges[: max(threshold + 1, len(edges) - 2)])))
    if g.m <= threshold:
        return
    emb = stability_embed(g, k, p, q)
    assert not p <= emb.t <= k - q


def test_stability_set_of_core_hypergraph():
    h = make_extremal(12, 4, 4, 3)
    s = find_stability_set(h, 4, 0)
    assert s.S == (0, 1, 2, 3) and s.trace.m == 0
    assert stability_set_problems(h, 4, 0, s) == []
    check = trace_case_check(h, 4, s)
    assert check.consistent and check.classification.kind == "empty"


def test_stability_set_of_graph_construction():
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        h = make_extremal(10, 4, 4, 2)
        s = find_stability_set(h, 4, 0)
    assert s.S == (0, 1, 2, 3) and s.trace.m == 0


def test_stability_set_with_slack():
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        h = make_extremal(14, 5, 4, 3)
        s = find_stability_set(h, 5, 1)
    assert len(s.S) == 4 and stability_set_problems(h, 5, 1, s) == []
    assert trace_case_check(h, 5, s).consistent


def test_outside_regime_warns():
    with pytest.warns(UserWarning):
        find_stability_set(make_extremal(10, 4, 4, 3), 4, 1)


def test_tampered_stability_set_is_caught():
    h = make_extremal(12, 4, 4, 3)
    S = (0, 1, 2, 4)
    fake = StabilitySet(S, trace_hypergraph(h, S), 1)
    assert stability_set_problems(h, 4, 0, fake)
    assert not trace_case_check(h, 4, fake).consistent


def test_core_containment():
    h = make_extremal(12, 4, 4, 3)
    assert within_extremal_core(h, range(4))
    assert not within_extremal_core(h, range(3))
    assert within_extremal_core(Hypergraph(5, 3), ())


def test_matching_number_of_generator_output():
    rng = random.Random(3)
    for _ in range(30):
        g = random_matching_free_graph(rng, 10, 3)
        assert matching_number(g) <= 3
