import json
import subprocess
import sys

import pytest

from circbook.cli import EXIT_OK, EXIT_SWEEP, EXIT_USAGE, EXIT_VERIFY, main, thread_budget
from circbook.document import EmbeddingDocument


def run(capsys, *argv):
    code = main(list(map(str, argv)))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize("args,text", [
    ((60, 28, 35), "bundle: 1 × C_4 □^5 C_15"),
    ((14, 5, 7), "union: 1 × C(14,7)"),
    ((24, 4, 12), "union: 4 × C(6,3)"),
    ((20, 4, 10), "prism: 2 × K_2 □ C_5"),
])
def test_classify_text(capsys, args, text):
    code, out, _ = run(capsys, "classify", *args)
    assert code == EXIT_OK and out.strip() == text


def test_classify_json_certify(capsys):
    code, out, _ = run(capsys, "classify", 60, 28, 35, "--json", "--certify")
    data = json.loads(out)
    assert code == EXIT_OK
    assert (data["base"], data["fiber"], data["shift"], data["components"]) == (4, 15, 5, 1)
    assert data["certificate"] == "ok"


def test_classify_bad_jumps(capsys):
    code, _, err = run(capsys, "classify", 10, 3, 7)
    assert code == EXIT_USAGE and "error" in err


def test_embed_stdout_json(capsys):
    code, out, _ = run(capsys, "embed", 12, 6)
    assert code == EXIT_OK and json.loads(out)["pages"] == 4


def test_embed_k5_instance(capsys):
    code, out, _ = run(capsys, "embed", 5, 2)
    assert code == EXIT_OK and json.loads(out)["pages"] == 5


def test_embed_normalizes_jump(capsys):
    code, out, _ = run(capsys, "embed", 67, 47)
    assert code == EXIT_OK and json.loads(out)["jumps"] == [1, 20]


def test_embed_files_and_verify(capsys, tmp_path):
    out_json, svg, dot = tmp_path / "e.json", tmp_path / "fig4.svg", tmp_path / "e.dot"
    code, out, _ = run(capsys, "embed", 14, 5, "--out", out_json, "--svg", svg, "--dot", dot)
    assert code == EXIT_OK and "4 pages" in out
    assert svg.read_text().startswith("<?xml") and dot.exists()
    code, out, _ = run(capsys, "verify", out_json)
    assert code == EXIT_OK and json.loads(out)["valid"] is True


def test_verify_rejects_tampered(capsys, tmp_path):
    path = tmp_path / "e.json"
    run(capsys, "embed", 9, 3, "--out", path)
    doc = EmbeddingDocument.read(path)
    edges = list(doc.edges)
    edges[1] = (edges[1][0], edges[1][1], edges[0][2])
    EmbeddingDocument(doc.n, doc.jumps, doc.route, doc.order, doc.pages, tuple(edges)).write(path)
    code, out, _ = run(capsys, "verify", path)
    assert code == EXIT_VERIFY and json.loads(out)["valid"] is False


def test_verify_missing_file(capsys, tmp_path):
    code, _, _ = run(capsys, "verify", tmp_path / "nope.json")
    assert code == EXIT_USAGE


def test_embed_out_of_range(capsys):
    code, _, _ = run(capsys, "embed", 10, 10)
    assert code == EXIT_USAGE


@pytest.mark.parametrize("n,k,want", [(9, 3, 5), (4, 1, 2), (8, 3, 4)])
def test_oracle(capsys, n, k, want):
    code, out, _ = run(capsys, "oracle", n, k)
    assert code == EXIT_OK and int(out) == want


def test_oracle_too_large(capsys):
    code, _, _ = run(capsys, "oracle", 11, 2)
    assert code == EXIT_USAGE


def test_usage_error():
    with pytest.raises(SystemExit) as exc:
        main(["embed"])
    assert exc.value.code == EXIT_USAGE


def test_sweep_small(capsys, tmp_path, monkeypatch):
    monkeypatch.setenv("CIRC_THREADS", "1")
    report = tmp_path / "r.json"
    code, out, _ = run(capsys, "sweep", "--n-max", 3, "--oracle-max", 3, "--report", report)
    rows = json.loads(report.read_text())["embed_rows"]
    assert code == EXIT_OK and rows == [{"n": 3, "k": 1, "route": "cycle", "pages": 3, "expected": 3, "valid": True}]


def test_sweep_discrepancy(capsys, monkeypatch):
    import circbook.cli as cli

    monkeypatch.setenv("CIRC_THREADS", "1")
    monkeypatch.setattr(cli, "predicted_mbt", lambda spec: 99)
    code, _, _ = run(capsys, "sweep", "--n-max", 5, "--oracle-max", 3)
    assert code == EXIT_SWEEP


def test_sweep_bad_nmax(capsys):
    code, _, _ = run(capsys, "sweep", "--n-max", 2)
    assert code == EXIT_USAGE


def test_thread_budget(monkeypatch):
    monkeypatch.setenv("CIRC_THREADS", "3")
    assert thread_budget() == 3
    monkeypatch.setenv("CIRC_THREADS", "zero")
    assert thread_budget() >= 1


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "circbook", "classify", "14", "5", "7"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and proc.stdout.strip() == "union: 1 × C(14,7)"
