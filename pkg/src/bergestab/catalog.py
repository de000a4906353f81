"""Append-only JSONL results catalog.

Each command run appends one record; nothing is ever rewritten.  Appends hold
an exclusive ``flock`` on the file, so concurrent writers interleave whole
lines only.
"""

from __future__ import annotations

import fcntl
import json
import os
from datetime import datetime, timezone
from pathlib import Path
from typing import Any, Optional, Union

from .certificates import canonical, digest


def make_record(command: str, params: dict, verdict: str, values: Any, certificate: Optional[dict],
                wall_time_ms: int, seed: int) -> dict:
    return canonical({
        "timestamp": datetime.now(timezone.utc).isoformat(timespec="seconds"),
        "command": command,
        "params": params,
        "verdict": verdict,
        "values": values,
        "certificate_sha256": None if certificate is None else digest(certificate),
        "wall_time_ms": wall_time_ms,
        "seed": seed,
    })


def append(path: Union[str, Path], record: dict) -> None:
    line = json.dumps(canonical(record), sort_keys=True, separators=(",", ":")) + "\n"
    fd = os.open(path, os.O_WRONLY | os.O_APPEND | os.O_CREAT, 0o644)
    try:
        fcntl.flock(fd, fcntl.LOCK_EX)
        os.write(fd, line.encode())
        os.fsync(fd)
    finally:
        fcntl.flock(fd, fcntl.LOCK_UN)
        os.close(fd)


def read(path: Union[str, Path]) -> list[dict]:
    with open(path) as fh:
        return [json.loads(line) for line in fh if line.strip()]
