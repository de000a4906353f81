from __future__ import annotations

import json
import warnings
from fractions import Fraction

import pytest

from bergestab.berge import classify_m2_free, contains_berge_matching, gmp_reduce
from bergestab.certificates import (
    CertificateError,
    canonical,
    digest,
    dumps,
    emit_certificate,
    from_document,
    load,
    to_document,
    validate_document,
    validate_text,
)
from bergestab.constructions import canonical_params, make_extremal, make_H
from bergestab.core import Graph, Hypergraph, MultiTraceHypergraph
from bergestab.lab.stability import find_stability_set, stability_embed
from bergestab.lab.suites import run
from bergestab.lab.turan import brute_force_turan
from bergestab.matching import max_matching, tutte_berge_witness

P4 = Graph(4, ((0, 1), (1, 2), (2, 3)))
PAIRS = Hypergraph(7, 3, ((1, 2, 3), (4, 5, 6)))


def _cases():
    h = make_extremal(12, 4, 4, 3)
    g = make_H(canonical_params(9, 4, 1), relaxed=True)
    return [
        (contains_berge_matching(PAIRS, 2), PAIRS, {}),
        (tutte_berge_witness(P4, 2), P4, {"k": 2}),
        (max_matching(P4)[1], P4, {}),
        (gmp_reduce(PAIRS), PAIRS, {}),
        (classify_m2_free(MultiTraceHypergraph(5, ((0, 1), (0, 2)))), None, {}),
        (stability_embed(g, 4, 0, 0), g, {"k": 4}),
        (find_stability_set(h, 4, 0), h, {"k": 4, "q": 0}),
        (brute_force_turan(6, 2, 2), None, {}),
        (run("formulas", "quick"), None, {}),
    ]


@pytest.mark.parametrize("index", range(9))
def test_round_trip_and_validation(index):
    value, instance, ctx = _cases()[index]
    doc = to_document(value, **ctx)
    text = dumps(doc)
    assert json.loads(text) == doc
    assert to_document(from_document(doc), **ctx) == doc
    assert validate_document(doc, instance) == []
    assert validate_text(text, instance) == []


def test_none_document():
    assert to_document(None) == {"verdict": "none"} == to_document(None, k=3)
    assert from_document({"verdict": "none"}) is None
    assert validate_document({"verdict": "none"}) == []


def test_exact_numbers():
    assert canonical(2**60) == str(2**60) and canonical(2**53) == 2**53
    assert canonical(Fraction(7, 2)) == "7/2"
    with pytest.raises(CertificateError):
        canonical(0.5)
    with pytest.raises(CertificateError):
        dumps({"x": [1.0]})


def test_tampering_is_detected():
    doc = to_document(contains_berge_matching(PAIRS, 2))
    doc["pairs"][0] = [1, 4]
    assert validate_document(doc, PAIRS)
    tb = to_document(tutte_berge_witness(P4, 2), k=2)
    tb["bound"] = 1
    assert validate_document(tb, P4)
    tb = to_document(tutte_berge_witness(P4, 2), k=1)
    assert validate_document(tb, P4)
    tr = to_document(brute_force_turan(6, 2, 2))
    tr["value"] = 11
    assert validate_document(tr)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        s = to_document(find_stability_set(make_extremal(12, 4, 4, 3), 4, 0))
    assert validate_document(s, make_extremal(12, 4, 4, 3)) == ["context.k and context.q are required to check a stability set"]
    assert validate_document({"kind": "Matching"}) and validate_document({"kind": "Mystery"})


def test_text_form_must_be_canonical():
    doc = to_document(tutte_berge_witness(P4, 2))
    assert validate_text(json.dumps(doc, indent=2), P4)
    assert validate_text("not json")


def test_files_and_digest(tmp_path):
    w = tutte_berge_witness(P4, 2)
    doc = emit_certificate(w, tmp_path / "c.json", k=2)
    assert load(tmp_path / "c.json") == doc
    assert digest(doc) == digest(json.loads(dumps(doc))) and len(digest(doc)) == 64
    (tmp_path / "bad.json").write_text("{")
    with pytest.raises(CertificateError):
        load(tmp_path / "bad.json")
