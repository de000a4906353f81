from __future__ import annotations

import json

import pytest

from bergestab.catalog import read
from bergestab.cli import main


@pytest.fixture
def files(tmp_path):
    (tmp_path / "p4.hg").write_text("2 4 3\n0 1\n1 2\n2 3\n")
    (tmp_path / "pairs.hg").write_text("3 7 2\n1 2 3\n4 5 6\n")
    (tmp_path / "dup.hg").write_text("2 4 2\n0 1\n0 1\n")
    return tmp_path


def _run(capsys, argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


def test_tutte_berge_exit_codes(files, capsys):
    code, out, err = _run(capsys, ["tutte-berge", files / "p4.hg", "--k", "2"])
    assert code == 0 and json.loads(out)["T"] == [1, 2] and "[pass]" in err
    code, out, _ = _run(capsys, ["tutte-berge", files / "p4.hg", "--k", "1"])
    assert code == 1 and json.loads(out)["kind"] == "Matching"


def test_berge_check(files, capsys):
    code, out, _ = _run(capsys, ["berge-check", files / "pairs.hg", "--s", "2"])
    assert code == 1 and json.loads(out)["pairs"] == [[1, 2], [4, 5]]
    code, out, _ = _run(capsys, ["berge-check", files / "pairs.hg", "--s", "3"])
    assert code == 0 and json.loads(out) == {"verdict": "none"}


def test_usage_errors(files, capsys):
    assert _run(capsys, ["verify", "nonsense"])[0] == 2
    assert _run(capsys, ["tutte-berge", files / "p4.hg"])[0] == 2
    assert _run(capsys, ["matching", files / "dup.hg"])[0] == 2
    assert _run(capsys, ["matching", files / "dup.hg", "--multi"])[0] == 2
    assert _run(capsys, ["count", files / "missing.hg", "--r", "3"])[0] == 2
    assert _run(capsys, ["construct", "--n", "9", "--k", "4", "--t", "1"])[0] == 2
    assert _run(capsys, ["colorings", "--r", "3"])[0] == 2
    assert _run(capsys, [])[0] == 2


def test_construct_and_count(files, capsys):
    path = files / "h.hg"
    code, out, _ = _run(capsys, ["construct", "--n", "13", "--k", "6", "--t", "3", "--c", "5,3,1,1",
                                 "--relaxed-n", "--write", path])
    assert code == 0 and json.loads(out)["edges"] == 46
    code, out, _ = _run(capsys, ["count", path, "--r", "2"])
    assert code == 0 and json.loads(out)["count"] == 46


def test_certificate_round_trip_through_validate(files, capsys):
    cert = files / "w.json"
    assert _run(capsys, ["tutte-berge", files / "p4.hg", "--k", "2", "--out", cert])[0] == 0
    assert _run(capsys, ["validate", cert, "--input", files / "p4.hg"])[0] == 0
    doc = json.loads(cert.read_text())
    doc["T"] = [0]
    cert.write_text(json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n")
    code, out, _ = _run(capsys, ["validate", cert, "--input", files / "p4.hg"])
    assert code == 1 and json.loads(out)["problems"]


def test_stability_commands(files, capsys):
    path = files / "core.hg"
    _run(capsys, ["construct", "--n", "12", "--k", "4", "--t", "4", "--r", "3", "--write", path])
    code, out, _ = _run(capsys, ["stability-set", path, "--k", "4", "--q", "0"])
    assert code == 0 and json.loads(out)["S"] == [0, 1, 2, 3]
    code, out, _ = _run(capsys, ["stability-embed", files / "p4.hg", "--k", "2"])
    assert code == 0 and json.loads(out)["kind"] == "StabilityEmbedding"
    code, out, _ = _run(capsys, ["trace", path, "--S", "0,1,2"])
    assert code == 0 and json.loads(out)["classification"]["class"] == "star"


def test_other_commands(files, capsys):
    code, out, _ = _run(capsys, ["turan", "--n", "6", "--r", "2", "--k", "2"])
    assert code == 0 and json.loads(out)["value"] == 10
    code, out, _ = _run(capsys, ["colorings", "--n", "5", "--r", "3"])
    assert code == 0 and json.loads(out)["entries"][0]["max_g"] == 10
    code, out, _ = _run(capsys, ["reduce", files / "pairs.hg"])
    assert code == 0 and len(json.loads(out)["E"]) == 2
    code, out, _ = _run(capsys, ["matching", files / "p4.hg", "--k", "1"])
    assert code == 1 and json.loads(out)["size"] == 2


def test_verify_and_catalog(files, capsys, monkeypatch):
    monkeypatch.chdir(files)
    cat = files / "cat.jsonl"
    code, out, _ = _run(capsys, ["verify", "formulas", "--scale", "quick", "--catalog", cat])
    assert code == 0 and json.loads(out)["passed"]
    code, _, err = _run(capsys, ["verify", "inequalities", "--scale", "quick", "--catalog", cat])
    assert code == 1 and (files / "inequalities-quick-counterexample.json").exists()
    rows = read(cat)
    assert [r["verdict"] for r in rows] == ["pass", "violated"]
    assert all(len(r["certificate_sha256"]) == 64 for r in rows)
