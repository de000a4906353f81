"""Deliberately naive reference implementations, kept independent of the fast
routines they check.  All are exponential; use them on small inputs only."""

from __future__ import annotations

from itertools import combinations, permutations

from ..core import Graph


def brute_matching_number(g: Graph) -> int:
    """Largest set of pairwise disjoint edges, by recursion on the first edge."""
    edges = list(g.edges)

    def go(i: int, used: frozenset) -> int:
        best = 0
        for j in range(i, len(edges)):
            u, v = edges[j]
            if u not in used and v not in used:
                best = max(best, 1 + go(j + 1, used | {u, v}))
        return best

    return go(0, frozenset())


def brute_clique_count(g: Graph, r: int) -> int:
    edges = g.edge_set()
    return sum(1 for s in combinations(range(g.n), r) if all(p in edges for p in combinations(s, 2)))


def brute_berge_matching(edges, s: int) -> bool:
    """Some s hyperedges admit s disjoint pairs, one inside each."""
    edges = [tuple(e) for e in edges]
    for chosen in combinations(range(len(edges)), s):
        if _disjoint_pairs(edges, chosen, 0, frozenset()):
            return True
    return False


def _disjoint_pairs(edges, chosen, i, used) -> bool:
    if i == len(chosen):
        return True
    for p in combinations(sorted(set(edges[chosen[i]]) - used), 2):
        if _disjoint_pairs(edges, chosen, i + 1, used | set(p)):
            return True
    return False


def brute_turan_graph(n: int, k: int) -> int:
    """Most edges of an n-vertex graph without k+1 disjoint edges, over all 2^C(n,2) graphs."""
    pairs = list(combinations(range(n), 2))
    best = 0
    for mask in range(1 << len(pairs)):
        count = bin(mask).count("1")
        if count <= best:
            continue
        g = Graph(n, tuple(p for j, p in enumerate(pairs) if mask >> j & 1))
        if brute_matching_number(g) <= k:
            best = count
    return best


def brute_is_subgraph(g: Graph, host: Graph) -> bool:
    host_edges = host.edge_set()
    for image in permutations(range(host.n), g.n):
        if all(tuple(sorted((image[u], image[v]))) in host_edges for u, v in g.edges):
            return True
    return False
