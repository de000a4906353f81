"""Command-line interface.

Every command prints its result document (canonical JSON) on stdout and a
one-line summary on stderr.  Exit codes: 0 the checked property holds, 1 it
is violated (the counterexample is the emitted certificate), 2 bad invocation.
"""

from __future__ import annotations

import argparse
import sys
import time
from typing import Any, Optional

from . import catalog, certificates, io
from .berge import classify_m2_free, contains_berge_matching, gmp_reduce, reduction_problems, trace_hypergraph
from .constructions import (
    ConstructionParams,
    ParamsError,
    canonical_c,
    f_value,
    h_value,
    make_H,
)
from .core import Graph, GraphError, Hypergraph, clique_hypergraph, count_cliques
from .lab import suites
from .lab.colorings import EnumerationTooLarge, coloring_sweep
from .lab.stability import embedding_problems, find_stability_set, stability_embed, stability_set_problems
from .lab.turan import brute_force_turan
from .matching import max_matching, tutte_berge_witness

EXIT_OK, EXIT_VIOLATED, EXIT_USAGE = 0, 1, 2


class Usage(Exception):
    pass


class Outcome:
    def __init__(self, ok: bool, doc: dict, summary: str, values: Any = None, params: Optional[dict] = None):
        self.ok, self.doc, self.summary, self.values, self.params = ok, doc, summary, values, params or {}


def _ints(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not a comma-separated list of integers") from None


def _load(args, kind: str = "auto"):
    try:
        return io.parse(args.input, kind=kind, multi=args.multi)
    except OSError as exc:
        raise Usage(f"cannot read {args.input}: {exc.strerror}") from None


def _graph(args) -> Graph:
    g = _load(args)
    if isinstance(g, Hypergraph) and g.r == 2:
        g = g.as_graph()
    if not isinstance(g, Graph):
        raise Usage(f"{args.input} is not a graph (r = 2) file")
    return g


def _hypergraph(args):
    h = _load(args, "multi" if args.multi else "hypergraph")
    if not hasattr(h, "edges") or isinstance(h, Graph):
        raise Usage(f"{args.input} is not a hypergraph file")
    return h


def _params(args) -> ConstructionParams:
    c = args.c if args.c else canonical_c(args.n, args.k, args.t).parts
    return ConstructionParams.of(args.n, args.k, args.t, c)


# ---------------------------------------------------------------------------
# commands


def cmd_construct(args) -> Outcome:
    p = _params(args)
    g = make_H(p, relaxed=args.relaxed_n)
    obj = g if args.r == 2 else clique_hypergraph(g, args.r)
    text = io.emit(obj)
    if args.write:
        with open(args.write, "w") as fh:
            fh.write(text)
    values = {"edges": obj.m, "h": h_value(p.n, p.k, p.t, args.r), "f": f_value(p.n, p.k, p.t, args.r),
              "canonical": p.is_canonical()}
    doc = {"kind": "Construction", "params": {"n": p.n, "k": p.k, "t": p.t, "c": list(p.c.parts), "r": args.r},
           **values, "edges_list": [list(e) for e in obj.edges]}
    return Outcome(True, doc, f"H({p.key()}) r={args.r}: {obj.m} edges", values, doc["params"])


def cmd_count(args) -> Outcome:
    g = _graph(args)
    value = count_cliques(g, args.r)
    doc = {"kind": "CliqueCount", "r": args.r, "n": g.n, "count": value}
    return Outcome(True, doc, f"{value} cliques of size {args.r}", value, {"r": args.r})


def cmd_berge_check(args) -> Outcome:
    h = _load(args, "multi" if args.multi else "hypergraph")
    if isinstance(h, Graph):
        h = Hypergraph.from_graph(h)
    w = contains_berge_matching(h, args.s)
    doc = certificates.to_document(w, s=args.s)
    free = w is None
    return Outcome(free, doc, f"Berge-M_{args.s}: {'none' if free else 'found'}", {"free": free}, {"s": args.s})


def cmd_matching(args) -> Outcome:
    g = _graph(args)
    nu, m = max_matching(g)
    ok = args.k is None or nu <= args.k
    doc = certificates.to_document(m, nu=nu)
    return Outcome(ok, doc, f"matching number {nu}", nu, {"k": args.k})


def cmd_tutte_berge(args) -> Outcome:
    g = _graph(args)
    w = tutte_berge_witness(g, args.k)
    if w is None:
        nu, m = max_matching(g)
        doc = certificates.to_document(m, k=args.k, nu=nu)
        return Outcome(False, doc, f"no witness: matching of size {nu} > k = {args.k}", None, {"k": args.k})
    doc = certificates.to_document(w, k=args.k)
    return Outcome(True, doc, f"T = {list(w.T)}, bound {w.bound} <= {args.k}", w.bound, {"k": args.k})


def cmd_reduce(args) -> Outcome:
    h = _hypergraph(args)
    if not isinstance(h, Hypergraph):
        raise Usage("reduce needs a uniform hypergraph")
    res = gmp_reduce(h)
    problems = reduction_problems(h, res)
    doc = certificates.to_document(res, problems=problems)
    return Outcome(not problems, doc, f"|E| = {len(res.E)} red pairs, {len(res.G.blue)} blue pairs",
                   {"E": len(res.E)}, {})


def cmd_trace(args) -> Outcome:
    h = _hypergraph(args)
    tr = trace_hypergraph(h, args.S)
    cls = classify_m2_free(tr)
    doc = {"kind": "Trace", "S": list(args.S), "n": tr.n, "trace": [list(e) for e in tr.edges],
           "classification": certificates.to_document(cls)}
    if args.write:
        io.write(tr, args.write)
    return Outcome(True, doc, f"trace has {tr.m} edges, class {cls.kind}", {"m": tr.m, "class": cls.kind},
                   {"S": list(args.S)})


def cmd_turan(args) -> Outcome:
    res = brute_force_turan(args.n, args.r, args.k, args.budget_nodes, args.budget_seconds)
    doc = certificates.to_document(res)
    state = "exact" if res.exact else "budget exhausted, lower bound"
    return Outcome(True, doc, f"ex_{args.r}({args.n}, M_{args.k + 1}) = {res.value} ({state})",
                   {"value": res.value, "exact": res.exact}, {"n": args.n, "r": args.r, "k": args.k})


def cmd_colorings(args) -> Outcome:
    if args.input:
        g = _graph(args)
        reference: Any = "complete"
        if g.m != g.n * (g.n - 1) // 2:
            raise Usage("a graph input must be complete; use --n/--k/--t[/--c] for constructions")
    elif args.k is None:
        g, reference = Graph.complete(args.n), "complete"
    else:
        reference = _params(args)
        g = make_H(reference, relaxed=args.relaxed_n)
    try:
        rep = coloring_sweep(g, args.r, reference)
    except EnumerationTooLarge as exc:
        raise Usage(str(exc)) from None
    doc = certificates.to_document(rep)
    return Outcome(rep.passed, doc, rep.summary(), {"max_g": rep.entries[0]["max_g"]}, rep.grid)


def cmd_stability_embed(args) -> Outcome:
    g = _graph(args)
    try:
        emb = stability_embed(g, args.k, args.p, args.q)
    except ValueError as exc:
        raise Usage(str(exc)) from None
    params = {"k": args.k, "p": args.p, "q": args.q}
    if emb is None:
        return Outcome(False, certificates.to_document(None, **params), "no embedding found")
    problems = embedding_problems(g, emb, args.k)
    dense = g.m > max(h_value(g.n, args.k, args.p, 2), h_value(g.n, args.k, args.k - args.q, 2))
    outside = not args.p <= emb.t <= args.k - args.q
    ok = not problems and (outside or not dense)
    doc = certificates.to_document(emb, n=g.n, **params)
    return Outcome(ok, doc, f"t = {emb.t}, c = {list(emb.c.parts)}"
                   + ("" if outside else " (t inside [p, k-q])"), {"t": emb.t}, params)


def cmd_stability_set(args) -> Outcome:
    h = _hypergraph(args)
    if not isinstance(h, Hypergraph):
        raise Usage("stability-set needs a uniform hypergraph")
    cert = find_stability_set(h, args.k, args.q)
    params = {"k": args.k, "q": args.q}
    if cert is None:
        return Outcome(False, certificates.to_document(None, **params),
                       "no stability set found at this scale (not a refutation)")
    problems = stability_set_problems(h, args.k, args.q, cert)
    doc = certificates.to_document(cert, **params)
    return Outcome(not problems, doc, f"S = {list(cert.S)}, trace Berge-M_{cert.forbidden_size}-free",
                   {"S": list(cert.S)}, params)


def cmd_verify(args) -> Outcome:
    kwargs = {"seed": args.seed, "budget_nodes": args.budget_nodes, "budget_seconds": args.budget_seconds}
    try:
        rep = suites.run(args.suite, args.scale, **kwargs)
    except suites.SuiteError as exc:
        raise Usage(str(exc)) from None
    doc = certificates.to_document(rep)
    if not rep.passed and not args.out:
        args.out = f"{args.suite}-{args.scale}-counterexample.json"
    return Outcome(rep.passed, doc, rep.summary(), {"failures": len(rep.failures), "entries": len(rep.entries)},
                   {"suite": args.suite, "scale": args.scale})


def cmd_validate(args) -> Outcome:
    try:
        with open(args.certificate) as fh:
            text = fh.read()
    except OSError as exc:
        raise Usage(f"cannot read {args.certificate}: {exc.strerror}") from None
    instance = _load(args, args.kind) if args.input else None
    problems = certificates.validate_text(text, instance)
    doc = {"kind": "Validation", "certificate": args.certificate, "problems": problems, "valid": not problems}
    return Outcome(not problems, doc, "valid" if not problems else f"invalid: {problems[0]}")


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--relaxed-n", action="store_true", help="allow n = 2k+1 in constructions")
    common.add_argument("--budget-nodes", type=int, default=None, help="node budget for exact searches")
    common.add_argument("--budget-seconds", type=float, default=None, help="wall-clock budget for exact searches")
    common.add_argument("--multi", action="store_true", help="read .hg input as a multi-trace hypergraph")
    common.add_argument("--catalog", default=None, help="append a JSONL record to this catalog")
    common.add_argument("--seed", type=int, default=0, help="seed for randomised suites (default 0)")
    common.add_argument("--out", "-o", default=None, help="write the result document to this path")

    parser = argparse.ArgumentParser(prog="bergestab", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, help_text):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.set_defaults(fn=fn)
        return p

    def construction_args(p, required=True):
        p.add_argument("--n", type=int, required=required)
        p.add_argument("--k", type=int, required=required)
        p.add_argument("--t", type=int, default=0)
        p.add_argument("--c", type=_ints, default=None, help="odd parts, e.g. 5,3,1 (default canonical)")

    p = add("construct", cmd_construct, "build H(n,k,t,c) or its r-clique hypergraph")
    construction_args(p)
    p.add_argument("--r", type=int, default=2)
    p.add_argument("--write", default=None, help="write the .hg text to this path")

    p = add("count", cmd_count, "count r-cliques of a graph")
    p.add_argument("input")
    p.add_argument("--r", type=int, required=True)

    p = add("berge-check", cmd_berge_check, "search a Berge-M_s; exit 1 with the witness if one exists")
    p.add_argument("input")
    p.add_argument("--s", type=int, required=True)

    p = add("matching", cmd_matching, "maximum matching; exit 1 if larger than --k")
    p.add_argument("input")
    p.add_argument("--k", type=int, default=None)

    p = add("tutte-berge", cmd_tutte_berge, "Tutte–Berge witness for nu <= k")
    p.add_argument("input")
    p.add_argument("--k", type=int, required=True)

    p = add("reduce", cmd_reduce, "red-blue reduction of an r-graph")
    p.add_argument("input")

    p = add("trace", cmd_trace, "trace hypergraph over S and its Berge-M_2 classification")
    p.add_argument("input")
    p.add_argument("--S", type=_ints, required=True, help="comma-separated vertex set")
    p.add_argument("--write", default=None, help="write the trace as a multi .hg file")

    p = add("turan", cmd_turan, "exact Turán number of (Berge-)M_{k+1} by branch and bound")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--k", type=int, required=True)

    p = add("colorings", cmd_colorings, "exhaustive colouring sweep of K_n or H(n,k,t,c)")
    p.add_argument("input", nargs="?", default=None)
    construction_args(p, required=False)
    p.add_argument("--r", type=int, required=True)

    p = add("stability-embed", cmd_stability_embed, "embed an M_{k+1}-free graph into some H(n,k,t,c)")
    p.add_argument("input")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--p", type=int, default=0)
    p.add_argument("--q", type=int, default=0)

    p = add("stability-set", cmd_stability_set, "find S whose trace is Berge-M_{k+1-|S|}-free")
    p.add_argument("input")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--q", type=int, default=0)

    p = add("verify", cmd_verify, "run a verification suite")
    p.add_argument("suite", help=", ".join(suites.SUITES))
    p.add_argument("--scale", choices=suites.SCALES, default="quick")

    p = add("validate", cmd_validate, "validate a certificate, optionally against its input instance")
    p.add_argument("certificate")
    p.add_argument("--input", default=None)
    p.add_argument("--kind", choices=io.KINDS, default="auto")
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    if args.command == "colorings" and args.input is None and args.n is None:
        print("colorings: give a complete-graph file or --n", file=sys.stderr)
        return EXIT_USAGE
    started = time.perf_counter()
    try:
        outcome = args.fn(args)
    except (Usage, io.ParseError, ParamsError, GraphError, suites.SuiteError) as exc:
        print(f"{args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    wall_ms = int((time.perf_counter() - started) * 1000)
    text = certificates.dumps(outcome.doc)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    verdict = "pass" if outcome.ok else "violated"
    print(f"{args.command}: {outcome.summary} [{verdict}]" + (f" -> {args.out}" if args.out else ""), file=sys.stderr)
    if args.catalog:
        params = dict(outcome.params)
        if getattr(args, "input", None):
            params["input"] = args.input
        catalog.append(args.catalog, catalog.make_record(args.command, params, verdict, outcome.values,
                                                         outcome.doc, wall_ms, args.seed))
    return EXIT_OK if outcome.ok else EXIT_VIOLATED


if __name__ == "__main__":
    sys.exit(main())
