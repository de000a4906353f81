"""Labeled graphs, r-uniform hypergraphs and the small amount of machinery on
top of them that the rest of the package leans on (clique counting, clique
hypergraphs, components, containment).

Vertices are always the dense labels ``0..n-1``.  Edge collections are kept in
canonical sorted order so that iteration, search traces and certificates are
reproducible.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator, Optional, Sequence

Pair = tuple[int, int]


class GraphError(ValueError):
    """Raised when a graph-like value violates its invariants."""


def binomial(a: int, b: int) -> int:
    """C(a, b) with the convention C(a, b) = 0 for b < 0 or b > a."""
    if b < 0 or a < 0 or b > a:
        return 0
    return math.comb(a, b)


def pair(u: int, v: int) -> Pair:
    return (u, v) if u < v else (v, u)


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _canonical_pairs(n: int, edges: Iterable[Sequence[int]], what: str) -> tuple[Pair, ...]:
    seen = set()
    for e in edges:
        if len(e) != 2:
            raise GraphError(f"{what}: edge {tuple(e)} is not a pair")
        u, v = int(e[0]), int(e[1])
        if u == v:
            raise GraphError(f"{what}: loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"{what}: edge {(u, v)} has an endpoint outside 0..{n - 1}")
        p = pair(u, v)
        if p in seen:
            raise GraphError(f"{what}: duplicate edge {p}")
        seen.add(p)
    return tuple(sorted(seen))


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..n-1``."""

    n: int
    edges: tuple[Pair, ...] = ()
    _adj: tuple[int, ...] = field(default=(), repr=False, compare=False)

    def __post_init__(self):
        if self.n < 0:
            raise GraphError("vertex count must be non-negative")
        edges = _canonical_pairs(self.n, self.edges, "Graph")
        adj = [0] * self.n
        for u, v in edges:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "_adj", tuple(adj))

    @classmethod
    def complete(cls, n: int) -> "Graph":
        return cls(n, tuple(combinations(range(n), 2)))

    @property
    def m(self) -> int:
        return len(self.edges)

    def adjacency(self) -> tuple[int, ...]:
        """Neighbourhoods as bitmasks (bit ``v`` set in entry ``u`` iff uv is an edge)."""
        return self._adj

    def neighbors(self, v: int) -> list[int]:
        return list(_bits(self._adj[v]))

    def degree(self, v: int) -> int:
        return self._adj[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._adj[u] >> v & 1)

    def edge_set(self) -> frozenset[Pair]:
        return frozenset(self.edges)

    def without_edge(self, u: int, v: int) -> "Graph":
        p = pair(u, v)
        return Graph(self.n, tuple(e for e in self.edges if e != p))

    def induced(self, vertices: Iterable[int]) -> "Graph":
        """Subgraph induced on ``vertices``, relabeled to 0.. in increasing order."""
        vs = sorted(set(vertices))
        index = {v: i for i, v in enumerate(vs)}
        return Graph(len(vs), tuple((index[u], index[v]) for u, v in self.edges if u in index and v in index))

    def delete_vertices(self, removed: Iterable[int]) -> "Graph":
        """Same vertex set, with every edge touching ``removed`` dropped."""
        gone = set(removed)
        return Graph(self.n, tuple(e for e in self.edges if e[0] not in gone and e[1] not in gone))

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Image of the graph under the vertex bijection ``v -> perm[v]``."""
        return Graph(self.n, tuple(pair(perm[u], perm[v]) for u, v in self.edges))


def _canonical_edge(edge: Iterable[int], n: int, what: str) -> tuple[int, ...]:
    e = tuple(sorted(int(v) for v in edge))
    if len(set(e)) != len(e):
        raise GraphError(f"{what}: edge {e} repeats a vertex")
    if e and not (0 <= e[0] and e[-1] < n):
        raise GraphError(f"{what}: edge {e} has a vertex outside 0..{n - 1}")
    return e


@dataclass(frozen=True)
class Hypergraph:
    """r-uniform hypergraph on ``0..n-1`` without repeated edges."""

    n: int
    r: int
    edges: tuple[tuple[int, ...], ...] = ()

    def __post_init__(self):
        if self.r < 2:
            raise GraphError("uniformity must be at least 2")
        if self.r > self.n:
            raise GraphError(f"uniformity {self.r} exceeds vertex count {self.n}")
        canon = [_canonical_edge(e, self.n, "Hypergraph") for e in self.edges]
        for e in canon:
            if len(e) != self.r:
                raise GraphError(f"Hypergraph: edge {e} does not have {self.r} vertices")
        if len(set(canon)) != len(canon):
            dup = next(e for e in canon if canon.count(e) > 1)
            raise GraphError(f"Hypergraph: duplicate edge {dup}")
        object.__setattr__(self, "edges", tuple(sorted(canon)))

    @property
    def m(self) -> int:
        return len(self.edges)

    def degrees(self) -> list[int]:
        deg = [0] * self.n
        for e in self.edges:
            for v in e:
                deg[v] += 1
        return deg

    def shadow(self) -> Graph:
        """Graph of all pairs covered by at least one hyperedge."""
        return Graph(self.n, tuple({p for e in self.edges for p in combinations(e, 2)}))

    def without_edges(self, drop: Iterable[tuple[int, ...]]) -> "Hypergraph":
        gone = {tuple(sorted(e)) for e in drop}
        return Hypergraph(self.n, self.r, tuple(e for e in self.edges if e not in gone))

    @classmethod
    def from_graph(cls, g: Graph) -> "Hypergraph":
        return cls(g.n, 2, g.edges)

    def as_graph(self) -> Graph:
        if self.r != 2:
            raise GraphError("only 2-uniform hypergraphs are graphs")
        return Graph(self.n, self.edges)


@dataclass(frozen=True)
class MultiTraceHypergraph:
    """Non-uniform hypergraph with parallel edges allowed; every edge has size >= 2."""

    n: int
    edges: tuple[tuple[int, ...], ...] = ()

    def __post_init__(self):
        canon = [_canonical_edge(e, self.n, "MultiTraceHypergraph") for e in self.edges]
        for e in canon:
            if len(e) < 2:
                raise GraphError(f"MultiTraceHypergraph: edge {e} has fewer than 2 vertices")
        object.__setattr__(self, "edges", tuple(sorted(canon)))

    @property
    def m(self) -> int:
        return len(self.edges)

    def distinct_edges(self) -> list[tuple[int, ...]]:
        return sorted(set(self.edges))

    def multiplicity(self, edge: Sequence[int]) -> int:
        return self.edges.count(tuple(sorted(edge)))


@dataclass(frozen=True)
class RedBlueGraph:
    """Simple graph whose edges carry one of two colours."""

    n: int
    red: tuple[Pair, ...] = ()
    blue: tuple[Pair, ...] = ()

    def __post_init__(self):
        red = _canonical_pairs(self.n, self.red, "RedBlueGraph(red)")
        blue = _canonical_pairs(self.n, self.blue, "RedBlueGraph(blue)")
        both = set(red) & set(blue)
        if both:
            raise GraphError(f"RedBlueGraph: edge {min(both)} is both red and blue")
        object.__setattr__(self, "red", red)
        object.__setattr__(self, "blue", blue)

    @classmethod
    def monochrome(cls, g: Graph, colour: str = "blue") -> "RedBlueGraph":
        if colour == "blue":
            return cls(g.n, (), g.edges)
        if colour == "red":
            return cls(g.n, g.edges, ())
        raise ValueError(f"unknown colour {colour!r}")

    def underlying(self) -> Graph:
        return Graph(self.n, self.red + self.blue)

    def red_graph(self) -> Graph:
        return Graph(self.n, self.red)

    def blue_graph(self) -> Graph:
        return Graph(self.n, self.blue)

    def colour_of(self, u: int, v: int) -> Optional[str]:
        p = pair(u, v)
        if p in self.red:
            return "R"
        if p in self.blue:
            return "B"
        return None


# ---------------------------------------------------------------------------
# cliques


def _degree_order(g: Graph) -> tuple[list[int], list[int]]:
    """Vertices by increasing degree, and forward-neighbourhood masks in that order."""
    order = sorted(range(g.n), key=lambda v: (g.degree(v), v))
    pos = {v: i for i, v in enumerate(order)}
    adj = g.adjacency()
    fwd = []
    for i, v in enumerate(order):
        mask = 0
        for u in _bits(adj[v]):
            if pos[u] > i:
                mask |= 1 << pos[u]
        fwd.append(mask)
    return order, fwd


def count_cliques(g: Graph, r: int) -> int:
    """Number of r-vertex complete subgraphs of ``g``."""
    if r < 1:
        raise ValueError("clique order must be >= 1")
    if r == 1:
        return g.n
    if r == 2:
        return g.m
    _, fwd = _degree_order(g)

    def extend(cand: int, depth: int) -> int:
        if depth == 1:
            return cand.bit_count()
        total = 0
        for i in _bits(cand):
            nxt = cand & fwd[i]
            if nxt.bit_count() >= depth - 1:
                total += extend(nxt, depth - 1)
        return total

    return sum(extend(fwd[i], r - 1) for i in range(g.n) if fwd[i].bit_count() >= r - 1)


def iter_cliques(g: Graph, r: int) -> Iterator[tuple[int, ...]]:
    """All r-cliques of ``g`` as sorted vertex tuples (no particular order)."""
    if r == 1:
        yield from ((v,) for v in range(g.n))
        return
    order, fwd = _degree_order(g)

    def extend(prefix: list[int], cand: int, depth: int):
        if depth == 0:
            yield tuple(sorted(order[i] for i in prefix))
            return
        for i in _bits(cand):
            nxt = cand & fwd[i]
            if nxt.bit_count() >= depth - 1:
                prefix.append(i)
                yield from extend(prefix, nxt, depth - 1)
                prefix.pop()

    for i in range(g.n):
        if fwd[i].bit_count() >= r - 1:
            yield from extend([i], fwd[i], r - 1)


def clique_hypergraph(g: Graph, r: int) -> Hypergraph:
    """The r-graph on V(g) whose edges are exactly the r-cliques of ``g``."""
    return Hypergraph(g.n, r, tuple(iter_cliques(g, r)))


# ---------------------------------------------------------------------------
# structure


def connected_components(g: Graph, removed: Iterable[int] = ()) -> list[frozenset[int]]:
    """Components of ``g`` minus ``removed``, largest first, ties by smallest vertex."""
    gone = 0
    for v in removed:
        gone |= 1 << v
    adj = g.adjacency()
    alive = ((1 << g.n) - 1) & ~gone
    comps = []
    while alive:
        low = alive & -alive
        comp = frontier = low
        while frontier:
            nxt = 0
            for v in _bits(frontier):
                nxt |= adj[v]
            frontier = nxt & alive & ~comp
            comp |= frontier
        alive &= ~comp
        comps.append(frozenset(_bits(comp)))
    comps.sort(key=lambda c: (-len(c), min(c)))
    return comps


def _check_mapping(edges_src, host_edges: set, mapping: dict, key) -> bool:
    return all(key(mapping[v] for v in e) in host_edges for e in edges_src)


def is_subgraph(g: Graph, host: Graph, mapping: Optional[dict[int, int]] = None) -> tuple[bool, Optional[dict[int, int]]]:
    """Decide whether ``g`` embeds into ``host`` by an edge-preserving injection.

    With ``mapping`` only that injection is checked.  Otherwise a backtracking
    search is run; on success the witness injection is returned as well.
    """
    if g.n > host.n:
        return False, None
    if mapping is not None:
        if len(set(mapping.values())) != len(mapping) or set(mapping) != set(range(g.n)):
            return False, None
        ok = all(host.has_edge(mapping[u], mapping[v]) for u, v in g.edges)
        return ok, (dict(mapping) if ok else None)
    return _embed(g.n, host.n, [list(e) for e in g.edges], {tuple(e) for e in host.edges})


def is_subhypergraph(h: Hypergraph, host: Hypergraph, mapping: Optional[dict[int, int]] = None) -> tuple[bool, Optional[dict[int, int]]]:
    """Hypergraph version of :func:`is_subgraph` (r-subsets must map to host edges)."""
    if h.n > host.n or h.r != host.r:
        return False, None
    host_edges = set(host.edges)
    if mapping is not None:
        if len(set(mapping.values())) != len(mapping) or set(mapping) != set(range(h.n)):
            return False, None
        ok = _check_mapping(h.edges, host_edges, mapping, lambda it: tuple(sorted(it)))
        return ok, (dict(mapping) if ok else None)
    return _embed(h.n, host.n, [list(e) for e in h.edges], host_edges)


def _embed(n_src: int, n_host: int, edges: list[list[int]], host_edges: set):
    deg = [0] * n_src
    for e in edges:
        for v in e:
            deg[v] += 1
    host_deg = [0] * n_host
    for e in host_edges:
        for v in e:
            host_deg[v] += 1
    order = sorted(range(n_src), key=lambda v: (-deg[v], v))
    rank = {v: i for i, v in enumerate(order)}
    # each edge is checked as soon as its last vertex (in search order) is placed
    closing: list[list[list[int]]] = [[] for _ in range(n_src)]
    for e in edges:
        closing[max(e, key=lambda v: rank[v])].append(e)
    mapping: dict[int, int] = {}
    used = [False] * n_host

    def place(i: int) -> bool:
        if i == n_src:
            return True
        v = order[i]
        for x in range(n_host):
            if used[x] or host_deg[x] < deg[v]:
                continue
            mapping[v] = x
            if all(tuple(sorted(mapping[w] for w in e)) in host_edges for e in closing[v]):
                used[x] = True
                if place(i + 1):
                    return True
                used[x] = False
            del mapping[v]
        return False

    if place(0):
        return True, dict(sorted(mapping.items()))
    return False, None
