from __future__ import annotations

import io
import json
import subprocess
import sys

import pytest

from nonsep.catalog import complete, named
from nonsep.cli import main
from nonsep.graph import delete_edge, parse_graph6, to_graph6
from nonsep.linkless import apex_augment
from conftest import prism


def run(argv, stdin: str | None = None, monkeypatch=None):
    out, err = io.StringIO(), io.StringIO()
    if stdin is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main(argv, out, err)
    lines = [json.loads(line) for line in out.getvalue().splitlines()]
    return code, lines, err.getvalue()


def test_classify_k4(monkeypatch):
    code, lines, _ = run(["classify", "--verify"], "C~\n", monkeypatch)
    assert code == 0
    (obj,) = lines
    assert obj["verdict"] == "member" and obj["case"] == "K4-only"
    assert obj["certificate"]["type"] == "wheel" and obj["verified"]


def test_classify_k1_k23(tmp_path):
    f = tmp_path / "in.g6"
    f.write_text(to_graph6(named("K1+K23")) + "\n")
    code, lines, _ = run(["classify", str(f)])
    assert code == 0
    assert lines[0]["verdict"] == "non-member"
    assert lines[0]["certificate"]["h"] == "K1+K23"


def test_classify_empty_input(monkeypatch):
    assert run(["classify"], "", monkeypatch) == (0, [], "")


def test_classify_parse_error_and_order(monkeypatch):
    code, lines, err = run(["classify", "--summary"], "C~\nnot graph6!\n\nA_\n", monkeypatch)
    assert code == 2
    assert "line 2" in err
    assert [obj.get("line") for obj in lines[:2]] == [1, 4]
    assert lines[-1]["summary"]["member"] == 2


def test_classify_expect(monkeypatch):
    code, _, _ = run(["classify", "--expect", "non-member"], "C~\n", monkeypatch)
    assert code == 1
    code, _, _ = run(["classify", "--expect", "member"], "C~\n", monkeypatch)
    assert code == 0


def test_classify_emit_drawing(monkeypatch):
    code, lines, _ = run(["classify", "--emit-drawing"], to_graph6(prism) + "\n", monkeypatch)
    assert code == 0 and lines[0]["drawing"]["rotation"]
    code, lines, _ = run(["classify", "--emit-drawing"], to_graph6(named("K113")) + "\n", monkeypatch)
    assert lines[0]["drawing"] is None


def test_classify_missing_file():
    code, _, err = run(["classify", "/nonexistent/file.g6"])
    assert code == 2 and "cannot read" in err


def test_crosscheck_small():
    code, (report,), _ = run(["crosscheck", "--n", "5", "--stable"])
    assert code == 0 and report["ok"] and report["mismatches"] == []
    assert report["graphs"] == 1 + 1 + 2 + 6 + 21
    assert "elapsed" not in report


def test_crosscheck_tiny_graphs_are_members():
    code, (report,), _ = run(["crosscheck", "--n", "3", "--include-disconnected", "--stable"])
    assert code == 0 and report["members"] == report["graphs"] == 1 + 2 + 4


def test_crosscheck_detects_injected_fault():
    code, (report,), _ = run(["crosscheck", "--n", "5", "--inject-fault", "--stable"])
    assert code == 1 and report["mismatches"]


def test_crosscheck_is_deterministic():
    a = run(["crosscheck", "--n", "5", "--stable"])
    b = run(["crosscheck", "--n", "5", "--stable", "--jobs", "2"])
    assert a == b


def test_crosscheck_guard():
    assert run(["crosscheck", "--n", "8"])[0] == 3
    assert run(["crosscheck", "--n", "7", "--include-disconnected"])[0] == 3


def test_crosscheck_from_file(tmp_path):
    f = tmp_path / "corpus.g6"
    f.write_text("\n".join(to_graph6(g) for g in [prism, named("K113"), complete(4)]) + "\n")
    code, (report,), _ = run(["crosscheck", "--from", str(f), "--stable"])
    assert code == 0 and report["graphs"] == 3 and report["members"] == 2
    f.write_text("junk?\n")
    assert run(["crosscheck", "--from", str(f)])[0] == 2


def test_linkless_three():
    code, lines, _ = run(["linkless", "--max-len", "3", "--recount"])
    assert code == 0
    (obj,) = lines
    assert (obj["n"], obj["m"]) == (8, 21)
    assert obj["verdict"] == "maximal-linkless" and obj["recount"]
    assert parse_graph6(obj["graph6"]).m == 21


def test_linkless_recount_catches_tampering(tmp_path):
    h = apex_augment(prism)
    f = tmp_path / "h.g6"
    f.write_text(to_graph6(h) + "\n" + to_graph6(delete_edge(h, 0, 1)) + "\n")
    code, lines, err = run(["linkless", "--recount", "--from", str(f)])
    assert code == 1
    assert [obj["verdict"] for obj in lines] == ["maximal-linkless", "failed"]
    assert "edge count" in lines[1]["check"]


def test_console_script():
    proc = subprocess.run(
        [sys.executable, "-m", "nonsep.cli", "classify"], input="C~\n", capture_output=True, text=True
    )
    assert proc.returncode == 0 and json.loads(proc.stdout)["case"] == "K4-only"


def test_bad_arguments():
    with pytest.raises(SystemExit):
        main(["crosscheck", "--jobs", "0"])
