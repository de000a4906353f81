"""Maximum matchings, Tutte–Berge witnesses and the component-merge step used
when turning a witness into a containing construction H(n,k,t,c).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterator, Optional

from .constructions import CompositionVector, ParamsError
from .core import Graph, Pair, connected_components, pair


@dataclass(frozen=True)
class Matching:
    pairs: tuple[Pair, ...]

    def __len__(self):
        return len(self.pairs)

    def is_valid_in(self, g: Graph) -> bool:
        seen = set()
        for u, v in self.pairs:
            if not g.has_edge(u, v) or u in seen or v in seen:
                return False
            seen.update((u, v))
        return True


def max_matching(g: Graph) -> tuple[int, Matching]:
    """Maximum cardinality matching by Edmonds' blossom shrinking."""
    n = g.n
    adj = [g.neighbors(v) for v in range(n)]
    mate = [-1] * n
    # greedy start; augmenting paths fix any suboptimality
    for u, v in g.edges:
        if mate[u] == -1 and mate[v] == -1:
            mate[u], mate[v] = v, u

    def find_path(root: int) -> tuple[int, list[int]]:
        used = [False] * n
        parent = [-1] * n
        base = list(range(n))
        used[root] = True
        queue = deque([root])

        def lca(a: int, b: int) -> int:
            seen = [False] * n
            while True:
                a = base[a]
                seen[a] = True
                if mate[a] == -1:
                    break
                a = parent[mate[a]]
            while True:
                b = base[b]
                if seen[b]:
                    return b
                b = parent[mate[b]]

        def mark(v: int, b: int, child: int, blossom: list[bool]) -> None:
            while base[v] != b:
                blossom[base[v]] = blossom[base[mate[v]]] = True
                parent[v] = child
                child = mate[v]
                v = parent[mate[v]]

        while queue:
            v = queue.popleft()
            for to in adj[v]:
                if base[v] == base[to] or mate[v] == to:
                    continue
                if to == root or (mate[to] != -1 and parent[mate[to]] != -1):
                    b = lca(v, to)
                    blossom = [False] * n
                    mark(v, b, to, blossom)
                    mark(to, b, v, blossom)
                    for i in range(n):
                        if blossom[base[i]]:
                            base[i] = b
                            if not used[i]:
                                used[i] = True
                                queue.append(i)
                elif parent[to] == -1:
                    parent[to] = v
                    if mate[to] == -1:
                        return to, parent
                    used[mate[to]] = True
                    queue.append(mate[to])
        return -1, parent

    for root in range(n):
        if mate[root] != -1 or not adj[root]:
            continue
        end, parent = find_path(root)
        while end != -1:
            pv = parent[end]
            nxt = mate[pv]
            mate[end], mate[pv] = pv, end
            end = nxt

    pairs = tuple(sorted(pair(u, v) for u, v in enumerate(mate) if v > u))
    return len(pairs), Matching(pairs)


def matching_number(g: Graph) -> int:
    return max_matching(g)[0]


def has_matching_of_size(adj: tuple[int, ...], alive: int, need: int) -> bool:
    """Bitmask search: does the graph restricted to ``alive`` have ``need`` disjoint edges?

    Exponential, intended for the inner loops of the small exhaustive searches
    where it beats building a Graph and running the blossom routine.
    """

    @lru_cache(maxsize=None)
    def go(mask: int, k: int) -> bool:
        if k <= 0:
            return True
        if mask.bit_count() < 2 * k:
            return False
        low = mask & -mask
        v = low.bit_length() - 1
        rest = mask ^ low
        nb = adj[v] & rest
        while nb:
            b = nb & -nb
            if go(rest ^ b, k - 1):
                return True
            nb ^= b
        return go(rest, k)

    return go(alive, need)


# ---------------------------------------------------------------------------
# Tutte–Berge


@dataclass(frozen=True)
class TutteBergeWitness:
    """A barrier T; ``components`` are the vertex sets of G - T, largest first."""

    T: tuple[int, ...]
    components: tuple[tuple[int, ...], ...]

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(len(c) for c in self.components)

    @property
    def bound(self) -> int:
        return len(self.T) + sum(s // 2 for s in self.sizes)

    @property
    def t(self) -> int:
        return len(self.T)


def _witness(g: Graph, T) -> TutteBergeWitness:
    comps = connected_components(g, T)
    return TutteBergeWitness(tuple(sorted(T)), tuple(tuple(sorted(c)) for c in comps))


def _repair_even(g: Graph, T: set[int]) -> set[int]:
    # move a vertex of each even component into T until every component is odd;
    # each move keeps |T| + sum floor(c/2) from growing
    while True:
        even = [c for c in connected_components(g, T) if len(c) % 2 == 0]
        if not even:
            return T
        for comp in even:
            inside = g.induced(comp)
            verts = sorted(comp)
            best = max(range(len(verts)), key=lambda i: (inside.degree(i), -verts[i]))
            T.add(verts[best])


def gallai_edmonds_barrier(g: Graph) -> set[int]:
    """A(G): neighbours of the vertices missed by some maximum matching."""
    nu = matching_number(g)
    missable = {v for v in range(g.n) if matching_number(g.delete_vertices([v])) == nu}
    return {u for v in missable for u in g.neighbors(v)} - missable


def tutte_berge_witness(g: Graph, k: int) -> Optional[TutteBergeWitness]:
    """A barrier with all components odd and bound <= k, or None when nu(G) > k.

    The barrier is the Gallai–Edmonds set A(G); even components of G - A are
    then broken up by moving their highest-degree vertex (lowest label on ties)
    into the barrier.  The resulting bound equals nu(G).
    """
    if matching_number(g) > k:
        return None
    T = _repair_even(g, gallai_edmonds_barrier(g))
    w = _witness(g, T)
    assert w.bound <= k
    return w


def iter_witnesses(g: Graph, k: int, max_size: Optional[int] = None) -> Iterator[TutteBergeWitness]:
    """All barriers T with odd components and bound <= k, by increasing |T| then lexicographically."""
    top = k if max_size is None else min(k, max_size)
    for size in range(0, min(top, g.n) + 1):
        for T in combinations(range(g.n), size):
            comps = connected_components(g, T)
            if any(len(c) % 2 == 0 for c in comps):
                continue
            if size + sum(len(c) // 2 for c in comps) <= k:
                yield TutteBergeWitness(T, tuple(tuple(sorted(c)) for c in comps))


def minimal_witness(g: Graph, k: int) -> Optional[TutteBergeWitness]:
    """Lexicographically least witness among those with the fewest barrier vertices."""
    return next(iter_witnesses(g, k), None)


def validate_witness(g: Graph, w: TutteBergeWitness, k: int) -> bool:
    T = set(w.T)
    if len(T) != len(w.T) or any(not 0 <= v < g.n for v in T):
        return False
    comps = connected_components(g, T)
    if sorted(map(sorted, comps)) != sorted(map(list, w.components)):
        return False
    if any(len(c) % 2 == 0 for c in comps):
        return False
    return len(T) + sum(len(c) // 2 for c in comps) <= k


def merge_components(c: CompositionVector, k: int, t: int) -> CompositionVector:
    """Sum the first 2[(k-t) - beta(c)] + 1 parts so that beta becomes exactly k - t."""
    deficit = (k - t) - c.beta
    if deficit < 0:
        raise ParamsError([f"beta(c)={c.beta} already exceeds k-t={k - t}"])
    if deficit == 0:
        return c
    take = 2 * deficit + 1
    if take > c.m:
        raise ParamsError([f"need {take} parts to merge but c has only {c.m}"])
    merged = (sum(c.parts[:take]),) + c.parts[take:]
    return CompositionVector(tuple(sorted(merged, reverse=True)))


def merge_groups(components: tuple[tuple[int, ...], ...], k: int, t: int) -> tuple[tuple[int, ...], ...]:
    """Vertex-level version of :func:`merge_components` on components sorted largest first."""
    beta = sum(len(c) // 2 for c in components)
    deficit = (k - t) - beta
    if deficit < 0:
        raise ParamsError([f"beta={beta} already exceeds k-t={k - t}"])
    if deficit == 0:
        return components
    take = 2 * deficit + 1
    if take > len(components):
        raise ParamsError([f"need {take} parts to merge but only {len(components)} exist"])
    merged = tuple(sorted(v for c in components[:take] for v in c))
    groups = [merged] + list(components[take:])
    groups.sort(key=lambda c: (-len(c), c[0]))
    return tuple(groups)
