"""Stability procedures: embedding an M_{k+1}-free graph into some
H(n,k,t,c) with extremal t, and locating the vertex set S whose trace is
Berge-M_{k+1-|S|}-free."""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Optional

from ..berge import M2Classification, classify_m2_free, contains_berge_matching, trace_hypergraph
from ..constructions import CompositionVector, ConstructionParams, ParamsError, binomial, h_value, make_H, validate_params
from ..core import Graph, Hypergraph, MultiTraceHypergraph, is_subgraph
from ..matching import TutteBergeWitness, iter_witnesses, matching_number, merge_groups, tutte_berge_witness


@dataclass(frozen=True)
class StabilityEmbedding:
    t: int
    c: CompositionVector
    injection: dict  # vertex of G -> vertex of H(n,k,t,c)
    T: tuple[int, ...]

    def params(self, n: int, k: int) -> ConstructionParams:
        return ConstructionParams(n, k, self.t, self.c)

    def to_json(self) -> dict:
        return {
            "kind": "StabilityEmbedding",
            "t": self.t,
            "c": list(self.c.parts),
            "T": list(self.T),
            "injection": {str(v): x for v, x in sorted(self.injection.items())},
        }


def embedding_problems(g: Graph, emb: StabilityEmbedding, k: int) -> list[str]:
    out = validate_params(emb.params(g.n, k), relaxed=True)
    if not out:
        ok, _ = is_subgraph(g, make_H(emb.params(g.n, k), relaxed=True), emb.injection)
        if not ok:
            out.append("injection does not preserve every edge")
    return out


def _embedding_from_witness(g: Graph, w: TutteBergeWitness, k: int) -> Optional[StabilityEmbedding]:
    t = w.t
    try:
        groups = merge_groups(w.components, k, t)
    except ParamsError:
        return None
    injection = {v: i for i, v in enumerate(w.T)}
    label = t
    for group in groups:
        for v in group:
            injection[v] = label
            label += 1
    emb = StabilityEmbedding(t, CompositionVector(tuple(len(gr) for gr in groups)), injection, w.T)
    return emb if not embedding_problems(g, emb, k) else None


def _witnesses(g: Graph, k: int, exhaustive_limit: int) -> Iterator[TutteBergeWitness]:
    first = tutte_berge_witness(g, k)
    if first is not None:
        yield first
    if g.n <= exhaustive_limit:
        for w in iter_witnesses(g, k):
            if w != first:
                yield w


def stability_embed(g: Graph, k: int, p: int, q: int, exhaustive_limit: int = 16) -> Optional[StabilityEmbedding]:
    """Embed ``g`` into H(n,k,t,c) through a Tutte–Berge witness, preferring t outside [p, k-q].

    Witnesses are tried starting from the Gallai–Edmonds one and then, for at
    most ``exhaustive_limit`` vertices, all of them.  The components of G - T
    are merged until beta(c) = k - t, and the witness-induced injection is
    checked edge by edge.
    """
    if matching_number(g) > k:
        raise ValueError(f"matching number exceeds k={k}")
    fallback = None
    for w in _witnesses(g, k, exhaustive_limit):
        emb = _embedding_from_witness(g, w, k)
        if emb is None:
            continue
        if not p <= emb.t <= k - q:
            return emb
        if fallback is None:
            fallback = emb
    return fallback


# ---------------------------------------------------------------------------
# stability sets for hypergraphs


@dataclass(frozen=True)
class StabilitySet:
    S: tuple[int, ...]
    trace: MultiTraceHypergraph
    forbidden_size: int  # the trace is Berge-M_{forbidden_size}-free

    def to_json(self) -> dict:
        return {
            "kind": "StabilitySet",
            "n": self.trace.n,
            "S": list(self.S),
            "trace": [list(e) for e in self.trace.edges],
            "forbidden_matching": self.forbidden_size,
            "verdict": "none",
        }


def _candidate_sets(h: Hypergraph, size: int, slack: int, exhaustive_limit: int):
    deg = h.degrees()
    order = sorted(range(h.n), key=lambda v: (-deg[v], v))
    seen = set()
    for S in combinations(order[: min(h.n, size + slack)], size):
        key = tuple(sorted(S))
        seen.add(key)
        yield key
    if h.n <= exhaustive_limit:
        for S in combinations(range(h.n), size):
            if S not in seen:
                yield S


def find_stability_set(h: Hypergraph, k: int, q: int, slack: int = 3, exhaustive_limit: int = 14) -> Optional[StabilitySet]:
    """A set S with k-q <= |S| <= k whose trace is Berge-M_{k+1-|S|}-free.

    Sizes are tried from k downwards.  Candidates are drawn first from the
    |S| + ``slack`` vertices of largest degree, then from all |S|-subsets
    when n <= ``exhaustive_limit``.  None means the search failed at this
    scale only.
    """
    if not (h.r <= k - q - 1 and k >= 2 * q + 3):
        warnings.warn(f"(k,q,r)=({k},{q},{h.r}) is outside r <= k-q-1, k >= 2q+3", stacklevel=2)
    for size in range(min(k, h.n), max(k - q, 0) - 1, -1):
        need = k + 1 - size
        for S in _candidate_sets(h, size, slack, exhaustive_limit):
            trace = trace_hypergraph(h, S)
            if contains_berge_matching(trace, need) is None:
                return StabilitySet(S, trace, need)
    return None


def stability_set_problems(h: Hypergraph, k: int, q: int, cert: StabilitySet) -> list[str]:
    out = []
    if not k - q <= len(cert.S) <= k:
        out.append(f"|S| = {len(cert.S)} outside [{k - q}, {k}]")
    if cert.forbidden_size != k + 1 - len(cert.S):
        out.append("forbidden matching size is not k + 1 - |S|")
    trace = trace_hypergraph(h, cert.S)
    if trace != cert.trace:
        out.append("recomputed trace differs from the certificate")
    if contains_berge_matching(trace, k + 1 - len(cert.S)) is not None:
        out.append("trace contains the forbidden Berge matching")
    return out


def within_extremal_core(h: Hypergraph, core) -> bool:
    """Every hyperedge has at least r-1 vertices in ``core`` (so h sits inside the
    clique hypergraph of K_|core| + independent set)."""
    core = set(core)
    return all(len(core.intersection(e)) >= h.r - 1 for e in h.edges)


@dataclass(frozen=True)
class TraceCaseCheck:
    classification: M2Classification
    consistent: bool
    reason: str
    core: Optional[tuple[int, ...]] = None


def trace_case_check(h: Hypergraph, k: int, cert: StabilitySet) -> TraceCaseCheck:
    """Classify the trace and compare with the case analysis for |S| in {k-1, k}.

    With |S| = k the trace must be empty.  With |S| = k-1 and more than
    h_r(n,k,k-1) hyperedges the trace has more than 3C(k-1,r-2) + C(k-1,r-3)
    edges, which rules out a single large edge and a 3-vertex support and
    leaves a star; S plus the centre then spans a copy of the extremal core.
    Below that edge count any Berge-M_2-free class is consistent.
    """
    cls = classify_m2_free(cert.trace)
    size = len(cert.S)
    r = h.r
    if cls.is_failure:
        return TraceCaseCheck(cls, False, "trace contains a Berge-M_2")
    if size == k:
        ok = cls.kind == "empty" and within_extremal_core(h, cert.S)
        return TraceCaseCheck(cls, ok, "|S| = k: trace must be empty", cert.S)
    if size != k - 1:
        return TraceCaseCheck(cls, False, f"|S| = {size} is not k-1 or k")
    if h.m > h_value(h.n, k, k - 1, r):
        floor = 3 * binomial(k - 1, r - 2) + binomial(k - 1, r - 3)
        # a repeated single pair is a star with either endpoint as centre
        star = cls.kind == "star" or (cls.kind == "single-edge" and len(cls.vertices) == 2)
        core = tuple(sorted(cert.S + cls.vertices[:1])) if star else None
        ok = cert.trace.m > floor and star and within_extremal_core(h, core)
        return TraceCaseCheck(cls, ok, f"above h_r(n,k,k-1): trace size {cert.trace.m} > {floor} and star", core)
    return TraceCaseCheck(cls, True, "at or below h_r(n,k,k-1): any Berge-M_2-free class")
