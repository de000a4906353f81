"""Seeded random instances for the property suites.

Every generator takes a ``random.Random`` so that one seed reproduces a whole
suite.
"""

from __future__ import annotations

import random
from itertools import combinations
from typing import Optional

from ..constructions import ConstructionParams, enumerate_compositions, make_H
from ..core import Graph, Hypergraph, RedBlueGraph, clique_hypergraph
from ..matching import matching_number


def random_graph(rng: random.Random, n: int, p: Optional[float] = None) -> Graph:
    p = rng.random() if p is None else p
    return Graph(n, tuple(e for e in combinations(range(n), 2) if rng.random() < p))


def random_subgraph(rng: random.Random, g: Graph, keep: float) -> Graph:
    return Graph(g.n, tuple(e for e in g.edges if rng.random() < keep))


def random_hypergraph(rng: random.Random, n: int, r: int, m: int) -> Hypergraph:
    pool = list(combinations(range(n), r))
    return Hypergraph(n, r, tuple(sorted(rng.sample(pool, min(m, len(pool))))))


def random_params(rng: random.Random, n: int, k: int, relaxed: bool = False) -> Optional[ConstructionParams]:
    """A uniformly chosen (t, c) with t + alpha(c) = n and t + beta(c) = k, if any exist."""
    options = []
    for t in range(0, k + 1):
        beta = k - t
        if n - t < 1:
            continue
        options.extend(ConstructionParams.of(n, k, t, c) for c in enumerate_compositions(n - t, beta, n - t))
    if not relaxed:
        options = [p for p in options if n >= 2 * k + 2]
    return rng.choice(options) if options else None


def random_matching_free_graph(rng: random.Random, n: int, k: int) -> Graph:
    """A graph with matching number at most k.

    Half the time a random subgraph of a random H(n,k,t,c) (dense, near the
    extremal structures), otherwise a sparse G(n,p) sample rejected until it
    is free.
    """
    if rng.random() < 0.5:
        p = random_params(rng, n, k, relaxed=True)
        if p is not None:
            host = make_H(p, relaxed=True)
            keep = rng.choice([1.0, 0.97, 0.9, 0.75, 0.5])
            return random_subgraph(rng, host, keep)
    while True:
        g = random_graph(rng, n, rng.uniform(0.0, min(1.0, 2.5 * (k + 1) / max(n, 1) ** 1.2)))
        if matching_number(g) <= k:
            return g


def random_berge_free_hypergraph(rng: random.Random, n: int, r: int, k: int, max_edges: int) -> Optional[Hypergraph]:
    """A random subfamily of the r-clique hypergraph of a random H(n,k,t,c); Berge-M_{k+1}-free
    because the shadow has matching number at most k."""
    p = random_params(rng, n, k, relaxed=True)
    if p is None:
        return None
    cl = clique_hypergraph(make_H(p, relaxed=True), r)
    if cl.m == 0:
        return None
    m = rng.randint(1, min(max_edges, cl.m))
    return Hypergraph(n, r, tuple(sorted(rng.sample(list(cl.edges), m))))


def random_coloring(rng: random.Random, g: Graph, p_red: Optional[float] = None) -> RedBlueGraph:
    p_red = rng.random() if p_red is None else p_red
    red, blue = [], []
    for e in g.edges:
        (red if rng.random() < p_red else blue).append(e)
    return RedBlueGraph(g.n, tuple(red), tuple(blue))


def random_noncanonical_params(rng: random.Random, r: int, n_max: int, k_max: int) -> ConstructionParams:
    """Valid (n,k,t,c) with c non-canonical and c_1 + t >= r + 2, the transfer precondition."""
    while True:
        k = rng.randint(2, k_max)
        n = rng.randint(2 * k + 2, max(2 * k + 2, n_max))
        t = rng.randint(0, k - 1)
        comps = [c for c in enumerate_compositions(n - t, k - t, n - t)
                 if len(c) > 1 and c[1] > 1 and c[0] + t >= r + 2]
        if comps:
            return ConstructionParams.of(n, k, t, rng.choice(comps))

