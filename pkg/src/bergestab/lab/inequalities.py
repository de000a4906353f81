"""Exhaustive integer-grid checks of the binomial inequalities the stability
arguments rest on."""

from __future__ import annotations

import time
from fractions import Fraction

from ..constructions import f_value, h_value
from ..core import binomial
from .report import SweepReport


def _lemma24(p_max: int, r_max: int, rep: SweepReport) -> None:
    # l + C(p-l, r-1) <= C(p, r-1) for 2 <= r <= p-1, equality iff r = 2 or l = 0
    bad_bound, bad_eq, checked = [], [], 0
    for p in range(1, p_max + 1):
        for r in range(2, min(r_max, p - 1) + 1):
            top = binomial(p, r - 1)
            for l in range(0, p + 1):
                lhs = l + binomial(p - l, r - 1)
                checked += 1
                if lhs > top:
                    bad_bound.append([p, r, l])
                predicted = r == 2 or l == 0
                if (lhs == top) != predicted:
                    bad_eq.append([p, r, l])
    rep.add("a:bound", not bad_bound, checked=checked, violations=bad_bound[:20])
    rep.add("a:equality", not bad_eq, checked=checked, violations=bad_eq[:20])


def _lemma25(p_max: int, r_max: int, rep: SweepReport) -> None:
    bad, checked = [], 0
    for p in range(1, p_max + 1):
        for r in range(2, r_max + 1):
            top = max(binomial(p, r - 1), p)
            for l in range(0, p + 1):
                checked += 1
                if l + binomial(p - l, r - 1) > top:
                    bad.append([p, r, l])
    rep.add("b:bound", not bad, checked=checked, violations=bad[:20])


def _endpoints(k_max: int, q_max: int, r_max: int, rep: SweepReport) -> None:
    # max over t in [p, k-q] of h_r and of f_r sits at t = p or t = k-q
    bad, checked = [], 0
    for k in range(1, k_max + 1):
        for n in range(2 * k + 2, 4 * k + 5):
            for r in range(2, r_max + 1):
                hs = [h_value(n, k, t, r) for t in range(k + 1)]
                fs = [f_value(n, k, t, r) for t in range(k + 1)]
                for q in range(0, q_max + 1):
                    for p in range(0, k - q + 1):
                        checked += 1
                        for name, vals in (("h", hs), ("f", fs)):
                            window = vals[p:k - q + 1]
                            if max(window) != max(vals[p], vals[k - q]):
                                bad.append([name, n, k, r, p, q])
    rep.add("c:endpoints", not bad, checked=checked, violations=bad[:20],
            n_range="2k+2 .. 4k+4")


def _claim_chains(k_max: int, q_max: int, r_max: int, rep: SweepReport) -> None:
    """Links of the two displayed chains bounding the per-vertex count when |S| <= k-q-1."""
    links = {name: [] for name in ("5a", "5b", "5c", "6a", "6b", "6c", "6d", "conclusion")}
    checked = 0
    for q in range(0, q_max + 1):
        for k in range(2 * q + 3, k_max + 1):
            for r in range(3, min(r_max, k - q - 1) + 1):
                kq = k - q
                for t in range(0, k + 1):
                    for gamma in range(0, kq):
                        checked += 1
                        point = [k, q, r, t, gamma]
                        base = binomial(gamma, r - 1) - gamma + t
                        if not base <= binomial(kq - 1, r - 1) - (kq - 1) + t:
                            links["5a"].append(point)
                        if not binomial(kq - 1, r - 1) - (kq - 1) + t <= binomial(kq - 1, r - 1) + q + 1:
                            links["5b"].append(point)
                        if not binomial(kq - 1, r - 1) + q + 1 < binomial(kq, r - 1):
                            links["5c"].append(point)
                        half = Fraction(kq * (kq - 1), 2)
                        middle = (k - Fraction(k - 3, 2)) * Fraction(q + 2, 2)
                        if not binomial(kq, r - 1) >= half:
                            links["6a"].append(point)
                        if not half >= middle:
                            links["6b"].append(point)
                        if not middle > k:
                            links["6c"].append(point)
                        if not k >= t:
                            links["6d"].append(point)
                        if not max(base, t) <= binomial(kq, r - 1) - 1:
                            links["conclusion"].append(point)
    for name, bad in links.items():
        # keep one representative per (k, q, r) so the report stays small
        seen, sample = set(), []
        for point in bad:
            if tuple(point[:3]) not in seen:
                seen.add(tuple(point[:3]))
                sample.append(point)
        rep.add(f"d:{name}", not bad, checked=checked, violation_count=len(bad), violations=sample[:20])


def inequality_sweep(p_max: int = 25, r_max: int = 25, k_max: int = 12, q_max: int = 3) -> SweepReport:
    """Grid checks; every failing point is listed as (name of check, tuple)."""
    started = time.perf_counter()
    rep = SweepReport("inequalities", {"p_max": p_max, "r_max": r_max, "k_max": k_max, "q_max": q_max})
    _lemma24(p_max, r_max, rep)
    _lemma25(p_max, r_max, rep)
    _endpoints(k_max, q_max, r_max, rep)
    _claim_chains(k_max, q_max, r_max, rep)
    rep.notes.append("r starts at 2: for r = 1 the left side l + 1 exceeds C(p, 0) = 1")
    rep.notes.append("d: tuples are [k, q, r, t, gamma] with gamma <= k-q-1; 6b/6c are the middle links "
                     "(k-q)(k-q-1)/2 >= (k-(k-3)/2)(q+2)/2 > k")
    return rep.finish(started)
