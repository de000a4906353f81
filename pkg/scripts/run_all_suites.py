#!/usr/bin/env python3
"""Run every verification suite, write one certificate per suite and print a summary table.

    python scripts/run_all_suites.py --scale full --out results/
"""

from __future__ import annotations

import argparse
import time
from pathlib import Path

from bergestab import catalog
from bergestab.certificates import emit_certificate
from bergestab.lab.suites import SCALES, SUITES, run


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--scale", choices=SCALES, default="quick")
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--out", type=Path, default=Path("results"))
    ap.add_argument("--only", nargs="*", default=None, help="subset of suites")
    args = ap.parse_args()

    args.out.mkdir(parents=True, exist_ok=True)
    names = args.only or list(SUITES)
    failed = 0
    print(f"{'suite':<14} {'verdict':<8} {'entries':>8} {'failing':>8} {'seconds':>8}")
    for name in names:
        started = time.perf_counter()
        rep = run(name, args.scale, seed=args.seed)
        doc = emit_certificate(rep, args.out / f"{name}-{args.scale}.json")
        wall = int((time.perf_counter() - started) * 1000)
        catalog.append(args.out / "catalog.jsonl", catalog.make_record(
            "verify", {"suite": name, "scale": args.scale}, "pass" if rep.passed else "violated",
            {"failures": len(rep.failures)}, doc, wall, args.seed))
        failed += not rep.passed
        print(f"{name:<14} {'PASS' if rep.passed else 'FAIL':<8} {len(rep.entries):>8} "
              f"{len(rep.failures):>8} {wall / 1000:>8.2f}")
    return 1 if failed else 0


if __name__ == "__main__":
    raise SystemExit(main())
