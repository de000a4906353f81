"""The extremal constructions K(c), H(n,k,t,c), H(n,k,t), their clique
hypergraphs, and the closed forms h_r and f_r.

Vertex layout is fixed: the K_t side occupies ``0..t-1`` and the cliques of
K(c) follow on consecutive labels, largest first.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from itertools import combinations

from .core import Graph, Hypergraph, binomial, clique_hypergraph


class ParamsError(ValueError):
    """Invalid construction parameters; ``violations`` lists every failed constraint."""

    def __init__(self, violations: list[str]):
        super().__init__("; ".join(violations))
        self.violations = violations


@dataclass(frozen=True)
class CompositionVector:
    """Non-increasing sequence of odd positive parts."""

    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(int(c) for c in self.parts)
        problems = []
        if not parts:
            problems.append("composition vector needs at least one part")
        if any(c < 1 or c % 2 == 0 for c in parts):
            problems.append(f"parts {parts} must all be odd and positive")
        if any(a < b for a, b in zip(parts, parts[1:])):
            problems.append(f"parts {parts} must be non-increasing")
        if problems:
            raise ParamsError(problems)
        object.__setattr__(self, "parts", parts)

    @classmethod
    def of(cls, *parts: int) -> "CompositionVector":
        return cls(tuple(sorted(parts, reverse=True)))

    @property
    def alpha(self) -> int:
        return sum(self.parts)

    @property
    def beta(self) -> int:
        return sum(c // 2 for c in self.parts)

    @property
    def m(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __len__(self):
        return len(self.parts)


def alpha_beta(c: CompositionVector) -> tuple[int, int]:
    return c.alpha, c.beta


@dataclass(frozen=True)
class ConstructionParams:
    n: int
    k: int
    t: int
    c: CompositionVector

    @classmethod
    def of(cls, n: int, k: int, t: int, parts) -> "ConstructionParams":
        c = parts if isinstance(parts, CompositionVector) else CompositionVector(tuple(parts))
        return cls(n, k, t, c)

    def is_canonical(self) -> bool:
        return self.c == canonical_c(self.n, self.k, self.t)

    def key(self) -> str:
        return f"n={self.n},k={self.k},t={self.t},c={','.join(map(str, self.c.parts))}"


def validate_params(p: ConstructionParams, relaxed: bool = False) -> list[str]:
    """Every violated constraint of ``p``; an empty list means the parameters are valid.

    ``relaxed`` drops the standing requirement n >= 2k+2 (the Erdős–Gallai
    regime only needs n >= 2k+1, and the formula identity is checked there).
    """
    out = []
    if not 0 <= p.t <= p.k:
        out.append(f"t={p.t} must satisfy 0 <= t <= k={p.k}")
    if p.t + p.c.alpha != p.n:
        out.append(f"t + alpha(c) = {p.t + p.c.alpha} != n = {p.n}")
    if p.t + p.c.beta != p.k:
        out.append(f"t + beta(c) = {p.t + p.c.beta} != k = {p.k}")
    if not relaxed and p.n < 2 * p.k + 2:
        out.append(f"n = {p.n} < 2k+2 = {2 * p.k + 2}")
    return out


def require_valid(p: ConstructionParams, relaxed: bool = False) -> None:
    problems = validate_params(p, relaxed)
    if problems:
        raise ParamsError(problems)


def block_layout(t: int, c: CompositionVector) -> tuple[tuple[int, ...], tuple[tuple[int, ...], ...]]:
    """The K_t vertices and the vertex blocks of the cliques of K(c) in the canonical layout."""
    core = tuple(range(t))
    blocks = []
    start = t
    for size in c.parts:
        blocks.append(tuple(range(start, start + size)))
        start += size
    return core, tuple(blocks)


def make_K(c: CompositionVector) -> Graph:
    _, blocks = block_layout(0, c)
    return Graph(c.alpha, tuple(e for b in blocks for e in combinations(b, 2)))


def make_H(p: ConstructionParams, relaxed: bool = False) -> Graph:
    """The join K_t + K(c) on n vertices."""
    require_valid(p, relaxed)
    core, blocks = block_layout(p.t, p.c)
    edges = list(combinations(core, 2))
    edges.extend((u, v) for u in core for v in range(p.t, p.n))
    edges.extend(e for b in blocks for e in combinations(b, 2))
    return Graph(p.n, tuple(edges))


def canonical_c(n: int, k: int, t: int) -> CompositionVector:
    """(2k-2t+1, 1, ..., 1) with n-2k-1+t trailing ones."""
    if not 0 <= t <= k:
        raise ParamsError([f"t={t} must satisfy 0 <= t <= k={k}"])
    ones = n - 2 * k - 1 + t
    if ones < 0:
        raise ParamsError([f"n={n} too small for k={k}, t={t}: {ones} trailing ones"])
    return CompositionVector((2 * k - 2 * t + 1,) + (1,) * ones)


def canonical_params(n: int, k: int, t: int) -> ConstructionParams:
    return ConstructionParams(n, k, t, canonical_c(n, k, t))


def h_value(n: int, k: int, t: int, r: int) -> int:
    return binomial(2 * k + 1 - t, r) + (n - 2 * k - 1 + t) * binomial(t, r - 1)


def f_value(n: int, k: int, t: int, r: int) -> int:
    return binomial(2 * k + 1 - t, r) + (n - 2 * k - 1 + t) * t


def h_f_values(n: int, k: int, t: int, r: int) -> tuple[int, int]:
    """(h_r(n,k,t), f_r(n,k,t)) from the closed forms, never from a graph."""
    if not 0 <= t <= k:
        raise ParamsError([f"t={t} must satisfy 0 <= t <= k={k}"])
    if r < 2:
        raise ParamsError([f"r={r} must be >= 2"])
    return h_value(n, k, t, r), f_value(n, k, t, r)


def make_extremal(n: int, k: int, s: int, r: int, relaxed: bool = False) -> Hypergraph:
    """The r-clique hypergraph of H(n,k,s)."""
    if r > k - 1:
        warnings.warn(f"r={r} > k-1={k - 1}: outside the Turán-number regime", stacklevel=2)
    g = make_H(canonical_params(n, k, s), relaxed)
    return clique_hypergraph(g, r)


def enumerate_compositions(total: int, beta: int, max_part: int | None = None):
    """All non-increasing odd compositions of ``total`` with the given beta."""
    if max_part is None:
        max_part = total
    if total == 0:
        if beta == 0:
            yield ()
        return
    top = min(max_part, total, 2 * beta + 1)
    if top % 2 == 0:
        top -= 1
    for first in range(top, 0, -2):
        rest_beta = beta - first // 2
        if rest_beta < 0:
            continue
        for rest in enumerate_compositions(total - first, rest_beta, first):
            yield (first,) + rest
