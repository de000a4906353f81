"""Canonical JSON certificates and their validator.

Documents are emitted with sorted keys and no floating point; integers beyond
2^53 become decimal strings so that every consumer reads them exactly.  A
missing result is the document ``{"verdict": "none"}``.
"""

from __future__ import annotations

import hashlib
import json
from fractions import Fraction
from pathlib import Path
from typing import Any, Optional, Union

from .berge import BergeWitness, M2Classification, ReductionResult, contains_berge_matching, reduction_problems
from .constructions import CompositionVector
from .core import Hypergraph, MultiTraceHypergraph, RedBlueGraph
from .lab.report import SweepReport
from .lab.stability import StabilityEmbedding, StabilitySet, embedding_problems, stability_set_problems
from .lab.turan import TuranResult
from .matching import Matching, TutteBergeWitness, validate_witness

SAFE_INT = 2**53
NONE_DOCUMENT = {"verdict": "none"}


class CertificateError(ValueError):
    pass


def canonical(x: Any) -> Any:
    """Plain JSON data with exact numbers: big ints as strings, fractions as 'p/q'."""
    if isinstance(x, bool) or x is None or isinstance(x, str):
        return x
    if isinstance(x, int):
        return str(x) if abs(x) > SAFE_INT else x
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, float):
        raise CertificateError(f"floating-point value {x!r} in a certificate")
    if isinstance(x, dict):
        return {str(k): canonical(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [canonical(v) for v in x]
    raise CertificateError(f"cannot serialise {type(x).__name__}")


def _lists(edges) -> list[list[int]]:
    return [list(e) for e in edges]


def to_document(result: Any, **context) -> dict:
    """The certificate document for ``result``; ``context`` (e.g. k, q, n) is stored alongside."""
    if result is None:
        return dict(NONE_DOCUMENT)
    if isinstance(result, BergeWitness):
        doc = {"kind": "BergeWitness", "pairs": _lists(result.pairs), "edges": _lists(result.edges),
               "edge_indices": list(result.edge_indices)}
    elif isinstance(result, TutteBergeWitness):
        doc = {"kind": "TutteBergeWitness", "T": list(result.T), "components": _lists(result.components),
               "bound": result.bound}
    elif isinstance(result, Matching):
        doc = {"kind": "Matching", "size": len(result), "pairs": _lists(result.pairs)}
    elif isinstance(result, ReductionResult):
        doc = {"kind": "ReductionResult", "n": result.G.n, "red": _lists(result.G.red),
               "blue": _lists(sorted(result.G.blue)), "E": _lists(result.E),
               "rep": [[list(e), list(result.rep[e])] for e in result.E]}
    elif isinstance(result, M2Classification):
        doc = {"kind": "M2Classification", "class": result.kind, "vertices": list(result.vertices)}
    elif isinstance(result, (StabilityEmbedding, StabilitySet, TuranResult, SweepReport)):
        doc = result.to_json()
    elif isinstance(result, dict):
        doc = dict(result)
    else:
        raise CertificateError(f"no certificate form for {type(result).__name__}")
    if context:
        doc["context"] = context
    return canonical(doc)


def dumps(doc: dict) -> str:
    return json.dumps(canonical(doc), sort_keys=True, separators=(",", ":"), ensure_ascii=False) + "\n"


def digest(doc: dict) -> str:
    return hashlib.sha256(dumps(doc).encode()).hexdigest()


def emit_certificate(result: Any, path: Union[str, Path], **context) -> dict:
    doc = to_document(result, **context)
    Path(path).write_text(dumps(doc))
    return doc


def load(path: Union[str, Path]) -> dict:
    try:
        return json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise CertificateError(f"not JSON: {exc}") from None


def _int(x) -> int:
    return int(x) if isinstance(x, str) else x


def from_document(doc: dict) -> Any:
    """Rebuild the value a document was made from (None for the none-verdict)."""
    kind = doc.get("kind")
    if kind is None and doc.get("verdict") == "none":
        return None
    if kind == "BergeWitness":
        return BergeWitness(tuple(map(tuple, doc["pairs"])), tuple(map(tuple, doc["edges"])), tuple(doc["edge_indices"]))
    if kind == "TutteBergeWitness":
        return TutteBergeWitness(tuple(doc["T"]), tuple(map(tuple, doc["components"])))
    if kind == "Matching":
        return Matching(tuple(map(tuple, doc["pairs"])))
    if kind == "ReductionResult":
        g = RedBlueGraph(doc["n"], tuple(map(tuple, doc["red"])), tuple(map(tuple, doc["blue"])))
        rep = {tuple(e): tuple(p) for e, p in doc["rep"]}
        return ReductionResult(g, tuple(map(tuple, doc["E"])), rep)
    if kind == "M2Classification":
        return M2Classification(doc["class"], tuple(doc["vertices"]))
    if kind == "StabilityEmbedding":
        return StabilityEmbedding(doc["t"], CompositionVector(tuple(doc["c"])),
                                  {int(v): x for v, x in doc["injection"].items()}, tuple(doc["T"]))
    if kind == "StabilitySet":
        trace = MultiTraceHypergraph(doc["n"], tuple(map(tuple, doc["trace"])))
        return StabilitySet(tuple(doc["S"]), trace, doc["forbidden_matching"])
    if kind == "TuranResult":
        p = doc["params"]
        return TuranResult(p["n"], p["r"], p["k"], _int(doc["value"]),
                           Hypergraph(p["n"], p["r"], tuple(map(tuple, doc["witness"]))),
                           _int(doc["nodes_explored"]), doc["exact"])
    if kind == "SweepReport":
        rep = SweepReport(doc["sweep_id"], doc["grid"], list(doc["entries"]), list(doc["notes"]))
        rep.wall_time = doc["wall_time_ms"] / 1000
        return rep
    raise CertificateError(f"unknown certificate kind {kind!r}")


_REQUIRED = {
    "BergeWitness": ("pairs", "edges", "edge_indices"),
    "TutteBergeWitness": ("T", "components", "bound"),
    "Matching": ("size", "pairs"),
    "ReductionResult": ("n", "red", "blue", "E", "rep"),
    "M2Classification": ("class", "vertices"),
    "StabilityEmbedding": ("t", "c", "T", "injection"),
    "StabilitySet": ("n", "S", "trace", "forbidden_matching", "verdict"),
    "TuranResult": ("params", "value", "witness", "nodes_explored", "exact"),
    "SweepReport": ("sweep_id", "grid", "entries", "notes", "passed", "wall_time_ms"),
}


def validate_document(doc: dict, instance: Optional[Any] = None) -> list[str]:
    """Structural checks, then a semantic re-check against ``instance`` when given.

    The empty list means the certificate is valid.
    """
    if not isinstance(doc, dict):
        return ["certificate is not a JSON object"]
    if doc.get("kind") is None:
        return [] if doc == NONE_DOCUMENT else ["document has neither a kind nor the none verdict"]
    kind = doc["kind"]
    if kind not in _REQUIRED:
        return [f"unknown kind {kind!r}"]
    missing = [k for k in _REQUIRED[kind] if k not in doc]
    if missing:
        return [f"missing fields: {', '.join(missing)}"]
    try:
        value = from_document(doc)
    except (ValueError, TypeError, KeyError) as exc:
        return [f"malformed {kind}: {exc}"]
    ctx = doc.get("context", {})
    out: list[str] = []
    if kind == "SweepReport":
        keys = [e.get("key") for e in doc["entries"]]
        if keys != sorted(keys):
            out.append("entries are not sorted by key")
        if any(e.get("verdict") not in ("pass", "fail") for e in doc["entries"]):
            out.append("entry verdict outside {pass, fail}")
        if doc["passed"] != all(e.get("verdict") == "pass" for e in doc["entries"]):
            out.append("passed flag disagrees with entries")
    elif kind == "TutteBergeWitness" and doc["bound"] != value.bound:
        out.append("bound disagrees with T and components")
    elif kind == "Matching" and doc["size"] != len(value):
        out.append("size disagrees with pairs")
    elif kind == "BergeWitness":
        out += value.problems()
    elif kind == "TuranResult":
        if value.witness.m != value.value:
            out.append("witness size differs from value")
        if contains_berge_matching(value.witness, value.k + 1) is not None:
            out.append("witness contains the forbidden matching")
    if instance is None or out:
        return out
    if kind == "BergeWitness":
        out += value.problems(instance)
    elif kind == "TutteBergeWitness":
        k = ctx.get("k", value.bound)
        if not validate_witness(instance, value, k):
            out.append("witness does not certify the bound on this graph")
    elif kind == "Matching":
        if not value.is_valid_in(instance):
            out.append("pairs are not a matching of this graph")
    elif kind == "ReductionResult":
        out += reduction_problems(instance, value)
    elif kind == "StabilityEmbedding":
        if "k" not in ctx:
            out.append("context.k is required to check an embedding")
        else:
            out += embedding_problems(instance, value, ctx["k"])
    elif kind == "StabilitySet":
        if "k" not in ctx or "q" not in ctx:
            out.append("context.k and context.q are required to check a stability set")
        else:
            out += stability_set_problems(instance, ctx["k"], ctx["q"], value)
    return out


def validate_text(text: str, instance: Optional[Any] = None) -> list[str]:
    """Like :func:`validate_document`, and the text must be the canonical rendering."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        return [f"not JSON: {exc}"]
    out = validate_document(doc, instance)
    if isinstance(doc, dict) and text != dumps(doc):
        out.insert(0, "text is not in canonical form (sorted keys, compact separators)")
    return out
