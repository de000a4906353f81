"""Berge-matching detection, the red-blue reduction of a hypergraph, g_r and
g'_r, trace hypergraphs, and the structure classifier for Berge-M_2-free traces.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Optional, Union

from .core import (
    Graph,
    GraphError,
    Hypergraph,
    MultiTraceHypergraph,
    Pair,
    RedBlueGraph,
    count_cliques,
    pair,
)
from .matching import matching_number

AnyHypergraph = Union[Hypergraph, MultiTraceHypergraph]


@dataclass(frozen=True)
class BergeWitness:
    """``pairs[i]`` is contained in hyperedge ``edges[i]`` (index ``edge_indices[i]``)."""

    pairs: tuple[Pair, ...]
    edges: tuple[tuple[int, ...], ...]
    edge_indices: tuple[int, ...]

    def __len__(self):
        return len(self.pairs)

    def problems(self, h: Optional[AnyHypergraph] = None) -> list[str]:
        out = []
        used = [v for p in self.pairs for v in p]
        if len(set(used)) != len(used):
            out.append("pairs are not pairwise disjoint")
        if len(set(self.edge_indices)) != len(self.edge_indices):
            out.append("assignment is not injective")
        for p, e in zip(self.pairs, self.edges):
            if not set(p) <= set(e):
                out.append(f"pair {p} is not contained in its hyperedge {e}")
        if h is not None:
            for i, e in zip(self.edge_indices, self.edges):
                if not 0 <= i < len(h.edges) or h.edges[i] != e:
                    out.append(f"hyperedge #{i} {e} is not an edge of the host")
        return out

    def is_valid(self, h: Optional[AnyHypergraph] = None) -> bool:
        return not self.problems(h)


class _PairIndex:
    """Pairs covered by the hyperedges, with the hyperedges covering each pair."""

    def __init__(self, h: AnyHypergraph, forbidden: Iterable[int] = (), skip_edges: Iterable[int] = ()):
        self.h = h
        self.edges = h.edges
        bad = set(forbidden)
        skip = set(skip_edges)
        self.hosts: dict[Pair, list[int]] = {}
        for i, e in enumerate(h.edges):
            if i in skip:
                continue
            for p in combinations(e, 2):
                if p[0] in bad or p[1] in bad:
                    continue
                self.hosts.setdefault(p, []).append(i)
        self.adj = [0] * h.n
        for u, v in self.hosts:
            self.adj[u] |= 1 << v
            self.adj[v] |= 1 << u
        self.usable_edges = len(h.edges) - len(skip)


def _mask_nu(adj: list[int], alive: int) -> int:
    verts = [v for v in range(len(adj)) if alive >> v & 1]
    index = {v: i for i, v in enumerate(verts)}
    edges = []
    for v in verts:
        nb = adj[v] & alive
        while nb:
            b = nb & -nb
            u = b.bit_length() - 1
            if u > v:
                edges.append((index[v], index[u]))
            nb ^= b
    return matching_number(Graph(len(verts), tuple(edges)))


def contains_berge_matching(
    h: AnyHypergraph,
    s: int,
    forbidden: Iterable[int] = (),
    skip_edges: Iterable[int] = (),
) -> Optional[BergeWitness]:
    """A Berge-M_s in ``h`` or None.

    Pairs are chosen from the lowest-labelled free vertex upward; every new
    pair must extend the current system of distinct representatives (an
    augmenting-path step over the hyperedges containing it).  Subtrees are cut
    when the matching number of the shadow on the free vertices cannot make up
    the shortfall.  ``forbidden`` vertices may not be used by any pair and
    hyperedges listed in ``skip_edges`` may not be assigned.
    """
    if s < 1:
        raise ValueError("s must be >= 1")
    idx = _PairIndex(h, forbidden, skip_edges)
    if idx.usable_edges < s:
        return None
    adj = idx.adj
    hosts = idx.hosts
    alive = 0
    for v in range(h.n):
        if adj[v]:
            alive |= 1 << v
    if alive.bit_count() < 2 * s or _mask_nu(adj, alive) < s:
        return None

    owner: dict[int, int] = {}  # hyperedge index -> slot
    slot_pair: list[Pair] = []
    slot_edge: list[int] = []

    def augment(slot: int, seen: set[int]) -> bool:
        for e in hosts[slot_pair[slot]]:
            if e in seen:
                continue
            seen.add(e)
            if e not in owner or augment(owner[e], seen):
                owner[e] = slot
                slot_edge[slot] = e
                return True
        return False

    def search(free: int) -> bool:
        need = s - len(slot_pair)
        if need == 0:
            return True
        if free.bit_count() < 2 * need or _mask_nu(adj, free) < need:
            return False
        low = free & -free
        v = low.bit_length() - 1
        rest = free ^ low
        nb = adj[v] & rest
        while nb:
            b = nb & -nb
            u = b.bit_length() - 1
            nb ^= b
            saved_owner = dict(owner)
            saved_edges = list(slot_edge)
            slot_pair.append((v, u))
            slot_edge.append(-1)
            if augment(len(slot_pair) - 1, set()):
                if search(rest ^ b):
                    return True
            slot_pair.pop()
            slot_edge.pop()
            owner.clear()
            owner.update(saved_owner)
            slot_edge[:] = saved_edges
        return search(rest)

    if not search(alive):
        return None
    order = sorted(range(s), key=lambda i: slot_pair[i])
    return BergeWitness(
        tuple(slot_pair[i] for i in order),
        tuple(h.edges[slot_edge[i]] for i in order),
        tuple(slot_edge[i] for i in order),
    )


def berge_matching_number(h: AnyHypergraph) -> int:
    """Largest s such that ``h`` contains a Berge-M_s."""
    s = 0
    while contains_berge_matching(h, s + 1) is not None:
        s += 1
    return s


def is_berge_matching_free(h: AnyHypergraph, s: int) -> bool:
    return contains_berge_matching(h, s) is None


def contains_berge(h: AnyHypergraph, f: Graph) -> Optional[dict]:
    """A Berge copy of the forest ``f`` (at most 8 edges) in ``h``.

    Returns ``{"embedding": {f-vertex: h-vertex}, "assignment": {f-edge: hyperedge index}}``
    or None.  Cyclic patterns are rejected; only matchings are needed elsewhere.
    """
    if f.m > 8:
        raise ValueError("pattern has more than 8 edges")
    parent = list(range(f.n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in f.edges:
        a, b = find(u), find(v)
        if a == b:
            raise ValueError("pattern is not a forest")
        parent[a] = b
    if f.m == 0:
        return {"embedding": {v: v for v in range(f.n)}, "assignment": {}} if f.n <= h.n else None

    idx = _PairIndex(h)
    hosts = idx.hosts
    active = sorted({v for e in f.edges for v in e})
    # BFS order so that every vertex after a component's first has a placed neighbour
    order: list[int] = []
    seen_v: set[int] = set()
    for start in active:
        if start in seen_v:
            continue
        queue = deque([start])
        seen_v.add(start)
        while queue:
            x = queue.popleft()
            order.append(x)
            for y in f.neighbors(x):
                if y not in seen_v:
                    seen_v.add(y)
                    queue.append(y)
    rank = {v: i for i, v in enumerate(order)}
    closing: dict[int, list[Pair]] = {v: [] for v in order}
    for u, v in f.edges:
        closing[u if rank[u] > rank[v] else v].append((u, v))

    emb: dict[int, int] = {}
    used: set[int] = set()
    slot_pairs: list[Pair] = []
    slot_edge: list[int] = []
    owner: dict[int, int] = {}

    def augment(slot, seen):
        for e in hosts.get(slot_pairs[slot], ()):
            if e in seen:
                continue
            seen.add(e)
            if e not in owner or augment(owner[e], seen):
                owner[e] = slot
                slot_edge[slot] = e
                return True
        return False

    def place(i):
        if i == len(order):
            return True
        v = order[i]
        for x in range(h.n):
            if x in used:
                continue
            emb[v] = x
            saved = (dict(owner), list(slot_edge), len(slot_pairs))
            ok = True
            for a, b in closing[v]:
                p = pair(emb[a], emb[b])
                if p not in hosts:
                    ok = False
                    break
                slot_pairs.append(p)
                slot_edge.append(-1)
                if not augment(len(slot_pairs) - 1, set()):
                    ok = False
                    break
            if ok:
                used.add(x)
                if place(i + 1):
                    return True
                used.discard(x)
            owner.clear()
            owner.update(saved[0])
            del slot_pairs[saved[2]:]
            slot_edge[:] = saved[1][: saved[2]]
            del emb[v]
        return False

    if not place(0):
        return None
    f_edges = [e for v in order for e in closing[v]]
    return {
        "embedding": dict(sorted(emb.items())),
        "assignment": {e: slot_edge[i] for i, e in enumerate(f_edges)},
    }


# ---------------------------------------------------------------------------
# red-blue reduction


@dataclass(frozen=True)
class ReductionResult:
    G: RedBlueGraph
    E: tuple[tuple[int, ...], ...]
    rep: dict = field(compare=False)  # hyperedge -> red pair


def gmp_reduce(h: Hypergraph) -> ReductionResult:
    """Red-blue graph G and represented hyperedges E with |E| = e(G_red) and
    every other hyperedge spanning an all-blue clique of G.

    A maximum matching between hyperedges and the pairs they contain is built
    by augmenting paths (hyperedges and pairs in lexicographic order).  The
    hyperedges reachable by alternating paths from unmatched hyperedges have
    all their pairs matched inside the reachable set; those pairs are blue.
    Every other matched hyperedge goes into E with its partner pair red.
    """
    edges = h.edges
    inner = [list(combinations(e, 2)) for e in edges]
    mate_of_pair: dict[Pair, int] = {}
    mate_of_edge: list[Optional[Pair]] = [None] * len(edges)

    def augment(i, seen):
        for p in inner[i]:
            if p in seen:
                continue
            seen.add(p)
            if p not in mate_of_pair or augment(mate_of_pair[p], seen):
                mate_of_pair[p] = i
                mate_of_edge[i] = p
                return True
        return False

    for i in range(len(edges)):
        augment(i, set())

    reach = [mate_of_edge[i] is None for i in range(len(edges))]
    queue = deque(i for i in range(len(edges)) if reach[i])
    while queue:
        i = queue.popleft()
        for p in inner[i]:
            j = mate_of_pair.get(p)
            # unmatched p here would be an augmenting path
            assert j is not None
            if not reach[j]:
                reach[j] = True
                queue.append(j)

    represented = [i for i in range(len(edges)) if not reach[i]]
    rep = {edges[i]: mate_of_edge[i] for i in represented}
    red = set(rep.values())
    blue = {p for i in range(len(edges)) if reach[i] for p in inner[i]}
    return ReductionResult(RedBlueGraph(h.n, tuple(red), tuple(blue)), tuple(edges[i] for i in represented), rep)


def reduction_problems(h: Hypergraph, res: ReductionResult) -> list[str]:
    """Violated ReductionResult invariants for ``res`` as a reduction of ``h``."""
    out = []
    g = res.G
    if g.n != h.n:
        out.append("vertex sets differ")
    host = set(h.edges)
    if not set(res.E) <= host:
        out.append("E is not a subset of E(H)")
    if len(res.E) != len(g.red):
        out.append(f"|E| = {len(res.E)} != e(G_red) = {len(g.red)}")
    if set(res.rep) != set(res.E):
        out.append("rep is not defined exactly on E")
    reps = list(res.rep.values())
    if len(set(reps)) != len(reps):
        out.append("rep is not injective")
    if set(reps) != set(g.red):
        out.append("rep does not map onto the red edges")
    for e, p in res.rep.items():
        if not set(p) <= set(e):
            out.append(f"rep({e}) = {p} is not contained in it")
    blue = set(g.blue)
    in_e = set(res.E)
    for e in h.edges:
        if e not in in_e and not all(p in blue for p in combinations(e, 2)):
            out.append(f"hyperedge {e} outside E does not span an all-blue clique")
    return out


def g_value(g: RedBlueGraph, r: int) -> int:
    """e(G_red) + N(K_r, G_blue)."""
    if r < 2:
        raise ValueError("r must be >= 2")
    return len(g.red) + count_cliques(g.blue_graph(), r)


def g_prime_value(g: RedBlueGraph, h: AnyHypergraph, r: Optional[int] = None) -> int:
    """e(G_red) plus the hyperedges of ``h`` that span an all-blue clique of ``g``."""
    if g.n != h.n:
        raise GraphError(f"vertex sets differ: {g.n} vs {h.n}")
    if r is not None and isinstance(h, Hypergraph) and h.r != r:
        raise GraphError(f"r={r} does not match the uniformity {h.r}")
    blue = set(g.blue)
    spanning = sum(1 for e in h.edges if all(p in blue for p in combinations(e, 2)))
    return len(g.red) + spanning


# ---------------------------------------------------------------------------
# traces and the Berge-M_2 classifier


def trace_hypergraph(h: AnyHypergraph, S: Iterable[int]) -> MultiTraceHypergraph:
    """One edge e - S for every hyperedge e with at least two vertices outside S.

    Labels are kept; the vertices of S remain in the vertex range but are isolated.
    """
    removed = set(S)
    if any(not 0 <= v < h.n for v in removed):
        raise GraphError("S is not a subset of the vertex set")
    traces = []
    for e in h.edges:
        rest = tuple(v for v in e if v not in removed)
        if len(rest) >= 2:
            traces.append(rest)
    return MultiTraceHypergraph(h.n, tuple(traces))


@dataclass(frozen=True)
class M2Classification:
    kind: str  # empty | single-edge | single-large-edge | triangle-supported | star | not-m2-free
    vertices: tuple[int, ...] = ()
    witness: Optional[BergeWitness] = None

    @property
    def is_failure(self) -> bool:
        return self.kind == "not-m2-free"


def classify_m2_free(h0: AnyHypergraph) -> M2Classification:
    """Structure of a Berge-M_2-free (multi)hypergraph, or the Berge-M_2 it contains."""
    w = contains_berge_matching(h0, 2)
    if w is not None:
        return M2Classification("not-m2-free", (), w)
    if not h0.edges:
        return M2Classification("empty")
    distinct = sorted(set(h0.edges))
    largest = max(len(e) for e in distinct)
    if largest >= 4:
        return M2Classification("single-large-edge", distinct[0])
    if largest == 3:
        support = max(distinct, key=len)
        return M2Classification("triangle-supported", support)
    if len(distinct) == 1:
        return M2Classification("single-edge", distinct[0])
    common = set(distinct[0]).intersection(*map(set, distinct[1:]))
    if common:
        return M2Classification("star", (min(common),))
    # three pairwise-intersecting pairs without a common vertex form a triangle
    support = tuple(sorted({v for e in distinct for v in e}))
    return M2Classification("triangle-supported", support)
