"""The verification suites behind ``bergestab verify``.

Each suite runs at ``quick`` or ``full`` scale and returns one SweepReport.
Randomised suites draw every instance from ``random.Random(seed)``.
"""

from __future__ import annotations

import random
import time
from typing import Callable, Optional

from ..berge import (
    g_prime_value,
    g_value,
    gmp_reduce,
    is_berge_matching_free,
    reduction_problems,
)
from ..constructions import (
    ConstructionParams,
    canonical_c,
    canonical_params,
    enumerate_compositions,
    h_value,
    make_extremal,
    make_H,
)
from ..core import Graph, binomial, count_cliques
from ..matching import iter_witnesses, matching_number, max_matching, tutte_berge_witness, validate_witness
from . import random_gen as rg
from .colorings import JoinLayout, coloring_sweep, enumerate_colorings, recolor_first_block, transfer_step
from .inequalities import inequality_sweep
from .oracles import brute_matching_number
from .report import SweepReport
from .stability import trace_case_check, embedding_problems, find_stability_set, stability_embed, stability_set_problems
from .turan import brute_force_turan, erdos_gallai_bound, verify_theorem13

SCALES = ("quick", "full")


class SuiteError(ValueError):
    pass


def _merge(sweep_id: str, grid: dict, reports: list[SweepReport], started: float) -> SweepReport:
    out = SweepReport(sweep_id, grid)
    for rep in reports:
        out.entries.extend(rep.entries)
        out.notes.extend(n for n in rep.notes if n not in out.notes)
    return out.finish(started)


# ---------------------------------------------------------------------------


def suite_formulas(scale: str, seed: int = 0, **_) -> SweepReport:
    started = time.perf_counter()
    n_max, k_max = (12, 5) if scale == "full" else (9, 3)
    rep = SweepReport("formulas", {"n_max": n_max, "k_max": k_max, "n_min": "2k+1"})
    for k in range(1, k_max + 1):
        for n in range(2 * k + 1, n_max + 1):
            for t in range(0, k + 1):
                g = make_H(canonical_params(n, k, t), relaxed=True)
                for r in range(2, max(2, k - 1) + 1):
                    got, want = count_cliques(g, r), h_value(n, k, t, r)
                    rep.add(f"n={n:02d},k={k},t={t},r={r}", got == want, cliques=got, h=want)
    return rep.finish(started)


def suite_erdos_gallai(scale: str, seed: int = 0, budget_nodes: Optional[int] = None,
                       budget_seconds: Optional[float] = None, **_) -> SweepReport:
    started = time.perf_counter()
    points = [(5, 1), (6, 2), (7, 2), (8, 3)] if scale == "full" else [(5, 1), (6, 2), (7, 2)]
    rep = SweepReport("erdos-gallai", {"points": [list(p) for p in points]})
    for n, k in points:
        res = brute_force_turan(n, 2, k, budget_nodes, budget_seconds)
        formula = erdos_gallai_bound(n, k)
        witness_ok = res.witness.m == res.value and matching_number(res.witness.as_graph()) <= k
        rep.add(f"n={n},k={k}", res.exact and res.value == formula and witness_ok, oracle=res.value,
                formula=formula, exact=res.exact, nodes=res.nodes_explored,
                witness=[list(e) for e in res.witness.edges])
    return rep.finish(started)


def suite_theorem13(scale: str, seed: int = 0, budget_nodes: Optional[int] = None,
                    budget_seconds: Optional[float] = None, **_) -> SweepReport:
    started = time.perf_counter()
    large = [(10, 4, 3), (11, 4, 3), (12, 5, 3), (12, 5, 4)] if scale == "full" else [(10, 4, 3)]
    reports = [verify_theorem13(8, 3, 2, budget_nodes=budget_nodes or 10**7, budget_seconds=budget_seconds)]
    reports += [verify_theorem13(n, k, r) for n, k, r in large]
    out = _merge("theorem13", {"exact": [[8, 3, 2]], "lower_bound_only": [list(p) for p in large]}, reports, started)
    out.notes.append("at the large points the upper bound is not searched (the family space exceeds 2^120); "
                     "entries certify freeness of both constructions and the lower bound only")
    return out


def suite_lemma23(scale: str, seed: int = 0, **_) -> SweepReport:
    started = time.perf_counter()
    ns = range(4, 8) if scale == "full" else range(4, 7)
    reports = []
    for n in ns:
        kn = Graph.complete(n)
        rs = list(range(2, n + 1))
        stats = enumerate_colorings(kn, rs)
        reports.extend(coloring_sweep(kn, r, "complete", stats[r]) for r in rs)
    return _merge("lemma23", {"n": list(ns), "r": "2..n"}, reports, started)


def lemma31_grid(max_edges: int) -> list[ConstructionParams]:
    """Every valid (n,k,t,c) with k >= 3 and e(H(n,k,t,c)) <= max_edges.

    For t = 0 the edge count ignores trailing singleton cliques, so n is capped
    at two more than the order of the non-singleton part (or 2k+2).
    """
    out = []
    for k in range(3, max_edges + 1):
        found = False
        for t in range(0, k + 1):
            for n in range(2 * k + 2, 2 * k + 3 + max_edges):
                for parts in enumerate_compositions(n - t, k - t, n - t):
                    big = sum(c for c in parts if c > 1)
                    if t == 0 and n > max(2 * k + 2, big + 2):
                        continue
                    e = binomial(t, 2) + t * (n - t) + sum(binomial(c, 2) for c in parts)
                    if e <= max_edges:
                        out.append(ConstructionParams.of(n, k, t, parts))
                        found = True
        if not found:
            break
    return out


def suite_lemma31(scale: str, seed: int = 0, **_) -> SweepReport:
    started = time.perf_counter()
    max_edges = 22 if scale == "full" else 16
    reports = []
    grid = lemma31_grid(max_edges)
    for p in grid:
        g = make_H(p)
        rs = list(range(2, p.k))
        stats = enumerate_colorings(g, rs)
        reports.extend(coloring_sweep(g, r, p, stats[r]) for r in rs)
    out = _merge("lemma31", {"max_edges": max_edges, "instances": len(grid), "r": "2..k-1"}, reports, started)
    out.notes.append("t = 0 instances are capped at n <= max(2k+2, order of the non-singleton cliques) + 2")
    return out


def suite_inequalities(scale: str, seed: int = 0, **_) -> SweepReport:
    if scale == "full":
        return inequality_sweep(25, 25, 12, 3)
    return inequality_sweep(12, 12, 8, 2)


def suite_reduction(scale: str, seed: int = 0, **_) -> SweepReport:
    started = time.perf_counter()
    count = 1000 if scale == "full" else 100
    rng = random.Random(seed)
    rep = SweepReport("reduction", {"samples": count, "seed": seed, "n_max": 10, "r": [3, 4], "m_max": 25})
    free_counts = {2: 0, 3: 0}
    for i in range(count):
        r = rng.choice([3, 4])
        n = rng.randint(r, 10)
        h = None
        if i % 2:
            h = rg.random_berge_free_hypergraph(rng, n, r, rng.choice([2, 3]), 25)
        if h is None:
            h = rg.random_hypergraph(rng, n, r, rng.randint(0, 25))
        res = gmp_reduce(h)
        problems = reduction_problems(h, res)
        gp = g_prime_value(res.G, h, r)
        if gp != h.m:
            problems.append(f"g'_r = {gp} != |E(H)| = {h.m}")
        under = matching_number(res.G.underlying())
        for k in (2, 3):
            if is_berge_matching_free(h, k + 1):
                free_counts[k] += 1
                if under > k:
                    problems.append(f"Berge-M_{k + 1}-free but reduced graph has matching number {under}")
        rep.add(f"sample={i:04d}", not problems, n=n, r=r, m=h.m, red=len(res.G.red), problems=problems,
                **({"hypergraph": [list(e) for e in h.edges]} if problems else {}))
    rep.notes.append(f"Berge-free subsample sizes: k=2: {free_counts[2]}, k=3: {free_counts[3]}")
    return rep.finish(started)


def suite_tutte_berge(scale: str, seed: int = 0, **_) -> SweepReport:
    started = time.perf_counter()
    count = 1000 if scale == "full" else 150
    rng = random.Random(seed)
    rep = SweepReport("tutte-berge", {"samples": count, "seed": seed, "n_max": 10})
    for i in range(count):
        n = rng.randint(1, 10)
        g = rg.random_graph(rng, n)
        nu, m = max_matching(g)
        problems = []
        oracle = brute_matching_number(g)
        if nu != oracle or len(m) != nu or not m.is_valid_in(g):
            problems.append(f"blossom {nu} vs oracle {oracle}")
        w = tutte_berge_witness(g, nu)
        if w is None or not validate_witness(g, w, nu):
            problems.append("no validating witness at k = nu")
        if nu >= 1:
            if tutte_berge_witness(g, nu - 1) is not None:
                problems.append("witness returned at k = nu - 1")
            if next(iter_witnesses(g, nu - 1), None) is not None:
                problems.append("exhaustive search found a witness at k = nu - 1")
        rep.add(f"sample={i:04d}", not problems, n=n, m=g.m, nu=nu, T=list(w.T) if w else None,
                problems=problems, **({"edges": [list(e) for e in g.edges]} if problems else {}))
    return rep.finish(started)


def suite_stability14(scale: str, seed: int = 0, **_) -> SweepReport:
    started = time.perf_counter()
    count = 500 if scale == "full" else 80
    rng = random.Random(seed)
    rep = SweepReport("stability14", {"samples": count, "seed": seed, "n_max": 14, "k_max": 4, "p,q": [0, 1]})
    dense = 0
    for i in range(count):
        k = rng.randint(1, 4)
        n = rng.randint(2 * k + 2, 14)
        g = rg.random_matching_free_graph(rng, n, k)
        problems, checked = [], []
        emb = stability_embed(g, k, 0, 0)
        if emb is None:
            problems.append("no embedding found")
        else:
            problems += embedding_problems(g, emb, k)
        for p in (0, 1):
            for q in (0, 1):
                if p > k - q:
                    continue
                if g.m <= max(h_value(n, k, p, 2), h_value(n, k, k - q, 2)):
                    continue
                e = stability_embed(g, k, p, q)
                checked.append([p, q, None if e is None else e.t])
                if e is None or embedding_problems(g, e, k):
                    problems.append(f"p={p},q={q}: no validating embedding")
                elif p <= e.t <= k - q:
                    problems.append(f"p={p},q={q}: t={e.t} inside [p, k-q]")
        dense += bool(checked)
        rep.add(f"sample={i:04d}", not problems, n=n, k=k, m=g.m, t=None if emb is None else emb.t,
                c=None if emb is None else list(emb.c.parts), dense_checks=checked, problems=problems,
                **({"edges": [list(e) for e in g.edges]} if problems else {}))
    rep.notes.append(f"{dense} samples exceed max(h_2(n,k,p), h_2(n,k,k-q)) for some (p,q)")
    return rep.finish(started)


def _stability16_hosts(n: int, k: int, q: int, r: int):
    return [(t, make_extremal(n, k, t, r)) for t in range(k - q, k + 1)]


def suite_stability16(scale: str, seed: int = 0, **_) -> SweepReport:
    started = time.perf_counter()
    variants = 100 if scale == "full" else 15
    points = [(3, 0, 2), (4, 0, 3), (5, 1, 3)]
    rng = random.Random(seed)
    rep = SweepReport("stability16", {"kqr": [list(p) for p in points], "n": "3k, 4k", "variants": variants,
                                      "seed": seed})
    rep.notes.append("finite-n evidence only: n is fixed at 3k and 4k, not taken large")

    def check(key, h, k, q, **extra):
        problems = []
        cert = find_stability_set(h, k, q)
        if cert is None:
            problems.append("no stability set found")
            rep.add(key, False, m=h.m, problems=problems, **extra)
            return
        problems += stability_set_problems(h, k, q, cert)
        case = trace_case_check(h, k, cert) if q <= 1 else None
        if case is not None and not case.consistent:
            problems.append(f"trace class {case.classification.kind} inconsistent: {case.reason}")
        rep.add(key, not problems, m=h.m, S=list(cert.S), trace_edges=cert.trace.m,
                trace_class=None if case is None else case.classification.kind, problems=problems, **extra)

    for k, q, r in points:
        for n in (3 * k, 4 * k):
            hosts = _stability16_hosts(n, k, q, r)
            threshold = h_value(n, k, k - q, r)
            for t, h in hosts:
                check(f"k={k},q={q},r={r},n={n:02d},host,t={t}", h, k, q)
            eligible = [(t, h) for t, h in hosts if h.m > threshold + 1]
            if not eligible:
                rep.notes.append(f"k={k},q={q},r={r},n={n}: no host exceeds h_r(n,k,k-q) by two edges; "
                                 "edge-deleted variants are vacuous")
                continue
            for i in range(variants):
                t, h = eligible[i % len(eligible)]
                d = rng.randint(1, h.m - threshold - 1)
                drop = rng.sample(list(h.edges), d)
                check(f"k={k},q={q},r={r},n={n:02d},variant={i:03d}", h.without_edges(drop), k, q, t=t,
                      deleted=d)
    return rep.finish(started)


def suite_transfer(scale: str, seed: int = 0, **_) -> SweepReport:
    started = time.perf_counter()
    count = 200 if scale == "full" else 40
    rng = random.Random(seed)
    rep = SweepReport("transfer", {"samples": count, "seed": seed, "n_max": 12, "k_max": 5, "r": "2..4"})
    ties = 0
    for i in range(count):
        r = rng.randint(2, 4)
        p = rg.random_noncanonical_params(rng, r, 12, 5)
        layout = JoinLayout.canonical(p)
        g = rg.random_coloring(rng, make_H(p))
        expected_steps = sum(c // 2 for c in p.c.parts[1:])
        values = [g_value(g, r)]
        problems, steps = [], 0
        while any(len(b) > 1 for b in layout.blocks[1:]):
            recoloured = recolor_first_block(g, layout)
            v = g_value(recoloured, r)
            if v <= values[-1]:
                ties += v == values[-1]
                problems.append(f"step {steps}: recolour {values[-1]} -> {v} is not strict")
            values.append(v)
            i_block = next(j for j in range(1, len(layout.blocks)) if len(layout.blocks[j]) > 1)
            a, b = sorted(layout.blocks[i_block])[:2]
            g, layout = transfer_step(recoloured, layout, i_block, a, b, r)
            v = g_value(g, r)
            if v <= values[-1]:
                problems.append(f"step {steps}: transfer {values[-1]} -> {v} is not strict")
            if v <= values[-2]:
                problems.append(f"step {steps}: round {values[-2]} -> {v} is not strict")
            values.append(v)
            steps += 1
        canonical = layout.sizes == canonical_c(p.n, p.k, p.t).parts
        if not canonical:
            problems.append(f"terminated at {layout.sizes}, not canonical")
        if steps != expected_steps:
            problems.append(f"{steps} steps, expected {expected_steps}")
        rep.add(f"sample={i:03d}", not problems, params=p.key(), r=r, values=values, steps=steps,
                problems=problems)
    rep.notes.append(f"{ties} recolour steps left g_r unchanged")
    return rep.finish(started)


SUITES: dict[str, Callable[..., SweepReport]] = {
    "formulas": suite_formulas,
    "erdos-gallai": suite_erdos_gallai,
    "theorem13": suite_theorem13,
    "lemma23": suite_lemma23,
    "lemma31": suite_lemma31,
    "inequalities": suite_inequalities,
    "reduction": suite_reduction,
    "tutte-berge": suite_tutte_berge,
    "stability14": suite_stability14,
    "stability16": suite_stability16,
    "transfer": suite_transfer,
}


def run(name: str, scale: str = "quick", **kwargs) -> SweepReport:
    if name not in SUITES:
        raise SuiteError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    if scale not in SCALES:
        raise SuiteError(f"unknown scale {scale!r}; choose quick or full")
    return SUITES[name](scale, **kwargs)
