"""Text formats.

``.hg``: header ``r n m`` then m lines of r sorted 0-based vertex indices.
With ``multi`` the lines may have any length >= 2 and may repeat (a trace
hypergraph); r = 2 files parse to :class:`Graph` unless ``kind`` says otherwise.

``.rb``: header ``rb n m`` then m lines ``u v C`` with C in {R, B}.
"""

from __future__ import annotations

from pathlib import Path
from typing import Union

from .core import Graph, Hypergraph, MultiTraceHypergraph, RedBlueGraph, pair

Parsed = Union[Graph, Hypergraph, MultiTraceHypergraph, RedBlueGraph]
KINDS = ("auto", "graph", "hypergraph", "multi", "redblue")


class ParseError(ValueError):
    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


def _tokens(line: str) -> list[tuple[str, int]]:
    out, col = [], 0
    for tok in line.split():
        col = line.index(tok, col)
        out.append((tok, col + 1))
        col += len(tok)
    return out


def _int(tok: str, lineno: int, col: int, what: str) -> int:
    try:
        value = int(tok)
    except ValueError:
        raise ParseError(f"{what} {tok!r} is not an integer", lineno, col) from None
    if value < 0:
        raise ParseError(f"{what} {value} is negative", lineno, col)
    return value


def _body(lines: list[str], m: int) -> list[tuple[int, str]]:
    body = [(i + 2, ln) for i, ln in enumerate(lines[1:]) if ln.strip()]
    if len(body) != m:
        where = body[m][0] if len(body) > m else len(lines) + 1
        raise ParseError(f"header declares {m} edges but the body has {len(body)}", where)
    return body


def _parse_hg(lines: list[str], kind: str, multi: bool) -> Parsed:
    head = _tokens(lines[0])
    if len(head) != 3:
        raise ParseError("header must be 'r n m'", 1)
    r, n, m = (_int(tok, 1, col, name) for (tok, col), name in zip(head, ("r", "n", "m")))
    if multi or kind == "multi":
        multi = True
    elif r < 2:
        raise ParseError(f"r = {r} must be at least 2", 1, head[0][1])
    seen = set()
    edges = []
    for lineno, ln in _body(lines, m):
        toks = _tokens(ln)
        if not multi and len(toks) != r:
            raise ParseError(f"expected {r} vertices, found {len(toks)}", lineno)
        if multi and len(toks) < 2:
            raise ParseError("trace edges need at least 2 vertices", lineno)
        verts = []
        for tok, col in toks:
            v = _int(tok, lineno, col, "vertex")
            if v >= n:
                raise ParseError(f"vertex {v} out of range 0..{n - 1}", lineno, col)
            if v in verts:
                raise ParseError(f"vertex {v} repeated (loop)", lineno, col)
            if verts and v < verts[-1]:
                raise ParseError("vertices must be sorted ascending", lineno, col)
            verts.append(v)
        e = tuple(verts)
        if e in seen and not multi:
            raise ParseError(f"duplicate edge {' '.join(map(str, e))}", lineno)
        seen.add(e)
        edges.append(e)
    if multi:
        return MultiTraceHypergraph(n, tuple(edges))
    if kind == "graph" or (kind == "auto" and r == 2):
        if r != 2:
            raise ParseError(f"a graph file needs r = 2, found r = {r}", 1, head[0][1])
        return Graph(n, tuple(edges))
    if r > n:
        raise ParseError(f"r = {r} exceeds n = {n}", 1, head[0][1])
    return Hypergraph(n, r, tuple(edges))


def _parse_rb(lines: list[str]) -> RedBlueGraph:
    head = _tokens(lines[0])
    if len(head) != 3 or head[0][0] != "rb":
        raise ParseError("header must be 'rb n m'", 1)
    n = _int(head[1][0], 1, head[1][1], "n")
    m = _int(head[2][0], 1, head[2][1], "m")
    red, blue, seen = [], [], set()
    for lineno, ln in _body(lines, m):
        toks = _tokens(ln)
        if len(toks) != 3:
            raise ParseError("expected 'u v C'", lineno)
        u = _int(toks[0][0], lineno, toks[0][1], "vertex")
        v = _int(toks[1][0], lineno, toks[1][1], "vertex")
        for x, (_, col) in ((u, toks[0]), (v, toks[1])):
            if x >= n:
                raise ParseError(f"vertex {x} out of range 0..{n - 1}", lineno, col)
        if u == v:
            raise ParseError(f"loop at vertex {u}", lineno, toks[1][1])
        colour = toks[2][0]
        if colour not in ("R", "B"):
            raise ParseError(f"colour {colour!r} must be R or B", lineno, toks[2][1])
        p = pair(u, v)
        if p in seen:
            raise ParseError(f"duplicate pair {p[0]} {p[1]}", lineno)
        seen.add(p)
        (red if colour == "R" else blue).append(p)
    return RedBlueGraph(n, tuple(red), tuple(blue))


def parse_text(text: str, kind: str = "auto", multi: bool = False) -> Parsed:
    if kind not in KINDS:
        raise ValueError(f"kind must be one of {KINDS}")
    lines = text.splitlines()
    if not lines or not lines[0].strip():
        raise ParseError("missing header", 1)
    first = lines[0].split()
    if kind == "redblue" or (kind == "auto" and first and first[0] == "rb"):
        return _parse_rb(lines)
    return _parse_hg(lines, kind, multi)


def parse(path: Union[str, Path], kind: str = "auto", multi: bool = False) -> Parsed:
    return parse_text(Path(path).read_text(), kind, multi)


def emit(obj: Parsed) -> str:
    """The text form of ``obj``; ``parse_text(emit(x))`` gives back ``x``."""
    if isinstance(obj, RedBlueGraph):
        rows = sorted([(e, "R") for e in obj.red] + [(e, "B") for e in obj.blue])
        body = [f"{u} {v} {c}" for (u, v), c in rows]
        head = f"rb {obj.n} {len(rows)}"
    elif isinstance(obj, Graph):
        body = [f"{u} {v}" for u, v in obj.edges]
        head = f"2 {obj.n} {obj.m}"
    elif isinstance(obj, Hypergraph):
        body = [" ".join(map(str, e)) for e in obj.edges]
        head = f"{obj.r} {obj.n} {obj.m}"
    elif isinstance(obj, MultiTraceHypergraph):
        body = [" ".join(map(str, e)) for e in obj.edges]
        r = max((len(e) for e in obj.edges), default=2)
        head = f"{r} {obj.n} {obj.m}"
    else:
        raise TypeError(f"cannot emit {type(obj).__name__}")
    return "\n".join([head] + body) + "\n"


def write(obj: Parsed, path: Union[str, Path]) -> None:
    Path(path).write_text(emit(obj))
