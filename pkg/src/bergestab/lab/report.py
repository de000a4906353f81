from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Any, Callable, Iterable


@dataclass
class SweepReport:
    """Per-grid-point verdicts of one sweep.

    ``entries`` are kept sorted by their ``key`` so that identical grids give
    identical reports; ``wall_time`` is the only field allowed to differ.
    """

    sweep_id: str
    grid: dict[str, Any]
    entries: list[dict[str, Any]] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)
    wall_time: float = 0.0

    def add(self, key: str, ok: bool, **details) -> None:
        entry = {"key": key, "verdict": "pass" if ok else "fail"}
        entry.update(details)
        self.entries.append(entry)

    @property
    def passed(self) -> bool:
        return all(e["verdict"] == "pass" for e in self.entries)

    @property
    def failures(self) -> list[dict[str, Any]]:
        return [e for e in self.entries if e["verdict"] != "pass"]

    def finish(self, started: float) -> "SweepReport":
        self.entries.sort(key=lambda e: e["key"])
        self.wall_time = round(time.perf_counter() - started, 3)
        return self

    def summary(self) -> str:
        bad = len(self.failures)
        state = "PASS" if bad == 0 else f"FAIL ({bad} of {len(self.entries)})"
        return f"{self.sweep_id}: {state} over {len(self.entries)} grid points"

    def to_json(self) -> dict[str, Any]:
        return {
            "kind": "SweepReport",
            "sweep_id": self.sweep_id,
            "grid": self.grid,
            "entries": self.entries,
            "notes": self.notes,
            "passed": self.passed,
            "wall_time_ms": int(self.wall_time * 1000),
        }


def map_grid(fn: Callable, points: Iterable, workers: int = 1) -> list:
    """Evaluate ``fn`` on every grid point, in parallel when ``workers > 1``.

    Results come back in input order either way, so report assembly does not
    depend on scheduling.
    """
    points = list(points)
    if workers <= 1 or len(points) < 2:
        return [fn(p) for p in points]
    from concurrent.futures import ProcessPoolExecutor

    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, points))


def counterexample(kind: str, **payload) -> dict[str, Any]:
    return {"kind": kind, **payload}
