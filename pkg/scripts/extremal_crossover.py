#!/usr/bin/env python3
"""Which of the two extremal constructions wins, as n grows.

For each (k, r) prints the least n >= 2k+2 from which the star-like
construction H(n,k,k) has more r-cliques than the clique K_{2k+1}, together
with both counts at a few sizes.  For r = 2 the exact Turán number from the
branch-and-bound search is shown next to the formula where it is cheap.

    python scripts/extremal_crossover.py --k-max 6 --r-max 5
"""

from __future__ import annotations

import argparse

from bergestab.constructions import h_value
from bergestab.lab.turan import brute_force_turan


def crossover(k: int, r: int, n_max: int = 400) -> int | None:
    for n in range(2 * k + 2, n_max + 1):
        if h_value(n, k, k, r) > h_value(n, k, 0, r):
            return n
    return None


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--k-max", type=int, default=6)
    ap.add_argument("--r-max", type=int, default=5)
    ap.add_argument("--exact-n-max", type=int, default=8, help="largest n for exact r = 2 searches")
    args = ap.parse_args()

    print(f"{'k':>3} {'r':>3} {'crossover n':>12}   h(2k+2,k,0) h(2k+2,k,k)   h(4k,k,0) h(4k,k,k)")
    for k in range(2, args.k_max + 1):
        for r in range(2, min(args.r_max, k + 1) + 1):
            n0, n1 = 2 * k + 2, 4 * k
            cross = crossover(k, r)
            print(f"{k:>3} {r:>3} {str(cross):>12}   {h_value(n0, k, 0, r):>11} {h_value(n0, k, k, r):>11}"
                  f"   {h_value(n1, k, 0, r):>9} {h_value(n1, k, k, r):>9}")

    print("\nexact graph values (r = 2) against max{h_2(n,k,0), h_2(n,k,k)}")
    for k in range(1, 4):
        for n in range(2 * k + 2, args.exact_n_max + 1):
            res = brute_force_turan(n, 2, k, budget_seconds=30)
            formula = max(h_value(n, k, 0, 2), h_value(n, k, k, 2))
            tag = "exact" if res.exact else "budget"
            print(f"  n={n:>2} k={k}: search {res.value:>3} ({tag}, {res.nodes_explored} nodes)  formula {formula:>3}")


if __name__ == "__main__":
    main()
