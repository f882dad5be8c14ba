import io
import json
import subprocess
import sys
from pathlib import Path

from boxkit.cli import main
from boxkit.gadgets import build_gadget
from boxkit.graph import complete_graph, cycle_graph, parse_graph, serialize_graph

GOLDEN = Path(__file__).parent / "golden"
C4 = serialize_graph(cycle_graph(4))


def run(capsys, monkeypatch, argv, stdin=""):
    monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def golden(name, text):
    assert text == (GOLDEN / name).read_text()


def test_gadget(capsys, monkeypatch):
    code, out, _ = run(capsys, monkeypatch, ["gadget", "G", "--k", "5"])
    assert code == 0
    g = parse_graph(out)
    assert (g.n, g.m) == (157, 311)
    code, out, _ = run(capsys, monkeypatch, ["gadget", "L2"])
    golden("gadget_L2.txt", out)


def test_boxicity_brute_c4(capsys, monkeypatch):
    code, out, _ = run(capsys, monkeypatch, ["boxicity", "--max-d", "2", "--engine", "brute"], C4)
    assert (code, out) == (0, "2\n")
    code, out, _ = run(capsys, monkeypatch, ["boxicity", "--max-d", "2", "--json"], C4)
    golden("boxicity_c4.json", out)
    assert json.loads(out) == {"boxicity": 2, "status": "decided"}


def test_boxicity_above_cap_and_budget(capsys, monkeypatch):
    code, out, _ = run(capsys, monkeypatch, ["boxicity", "--max-d", "1"], C4)
    assert (code, out) == (1, ">1\n")
    g = serialize_graph(build_gadget("G", 3))
    code, _, _ = run(capsys, monkeypatch, ["boxicity", "--max-d", "3", "--budget", "1s"], g)
    assert code == 3


def test_decide_exit_codes(capsys, monkeypatch):
    code, out, _ = run(capsys, monkeypatch, ["decide", "--d", "1"], C4)
    assert (code, out) == (1, "infeasible\n")
    code, out, _ = run(capsys, monkeypatch, ["decide", "--d", "2", "--json"], C4)
    data = json.loads(out)
    assert code == 0 and data["status"] == "feasible"
    l1 = serialize_graph(build_gadget("L1"))
    code, out, _ = run(capsys, monkeypatch, ["decide", "--d", "2", "--constraint", "RequireBoxInUnion:c,a,b"], l1)
    assert (code, out) == (1, "infeasible\n")


def test_verify_lemma_json(capsys, monkeypatch):
    code, out, _ = run(capsys, monkeypatch, ["verify-lemma", "pendant", "--budget", "60", "--json"])
    data = json.loads(out)
    assert code == 0 and data["verdict"] == "verified" and data["lemma"] == "pendant"
    assert data["queries"][0]["constraints"] == ["RequireBoxInUnion(c, a, b)"]


def test_verify_lemma_budget_exit(capsys, monkeypatch):
    code, out, _ = run(capsys, monkeypatch, ["verify-lemma", "main", "--budget", "0.5"])
    assert code == 3 and "undecided" in out


def test_verify_theorem(capsys, monkeypatch):
    code, out, _ = run(capsys, monkeypatch, ["verify-theorem"])
    assert code == 0 and "11/11 embeddings verified" in out
    code, out, _ = run(capsys, monkeypatch, ["verify-theorem", "--k", "3", "--json"])
    assert json.loads(out)["decomposition"]["verified"] == 7


def test_export_and_import(capsys, monkeypatch, tmp_path):
    cnf = tmp_path / "k2.cnf"
    k2 = serialize_graph(complete_graph(2))
    code, _, _ = run(capsys, monkeypatch, ["export-cnf", "--d", "1", "-o", str(cnf)], k2)
    assert code == 0
    golden("export_k2_d1.cnf", cnf.read_text())
    # every atom true: all endpoints tied, a valid model
    nvars = int(next(l for l in cnf.read_text().splitlines() if l.startswith("p")).split()[2])
    model = tmp_path / "model.txt"
    model.write_text("v " + " ".join(str(v) for v in range(1, nvars + 1)) + " 0\n")
    gfile = tmp_path / "k2.graph"
    gfile.write_text(k2)
    code, out, _ = run(capsys, monkeypatch, ["import-model", "--cnf", str(cnf), "--model", str(model),
                                             "--graph", str(gfile)])
    assert (code, out) == (0, "0 0 0\n1 0 0\n")
    # L0 <= R0 false breaks the encoding
    model.write_text("-1 " + " ".join(str(v) for v in range(2, nvars + 1)) + "\n")
    code, _, err = run(capsys, monkeypatch, ["import-model", "--cnf", str(cnf), "--model", str(model)])
    assert code == 1 and "error" in err


def test_recognize(capsys, monkeypatch):
    g = serialize_graph(build_gadget("G"))
    code, out, _ = run(capsys, monkeypatch, ["recognize"], g)
    assert "series-parallel: yes" in out and "2-tree: yes" in out and "m = 2n-3: yes" in out
    code, out, _ = run(capsys, monkeypatch, ["recognize", "--json"], C4)
    golden("recognize_c4.json", out)
    data = json.loads(out)
    assert data["series_parallel"] and not data["two_tree"] and data["interval"] is False
    code, out, _ = run(capsys, monkeypatch, ["recognize"], serialize_graph(complete_graph(4)))
    assert "series-parallel: no" in out


def test_render(capsys, monkeypatch, tmp_path):
    gfile = tmp_path / "c4.graph"
    gfile.write_text(C4)
    rep = tmp_path / "c4.rep"
    rep.write_text("0 0 0 0 2\n1 0 2 2 2\n2 2 2 0 2\n3 0 2 0 0\n")
    code, out, _ = run(capsys, monkeypatch, ["render", str(gfile), "--rep", str(rep)])
    assert code == 0 and out.count("<rect") == 5
    golden("render_c4.svg", out)
    rep.write_text("0 0 1 0 1 0 1\n1 0 1 0 1 0 1\n2 0 1 0 1 0 1\n3 0 1 0 1 0 1\n")
    code, _, err = run(capsys, monkeypatch, ["render", str(gfile), "--rep", str(rep)])
    assert code == 2 and "rendering supports d <= 2" in err


def test_usage_errors(capsys, monkeypatch):
    assert run(capsys, monkeypatch, ["frobnicate"])[0] == 2
    assert run(capsys, monkeypatch, ["gadget", "G", "--bogus"])[0] == 2
    assert run(capsys, monkeypatch, ["decide", "--d", "2"], "not a graph\n")[0] == 2
    assert run(capsys, monkeypatch, ["decide", "--d", "2", "--constraint", "Nope:1,2"], C4)[0] == 2
    assert run(capsys, monkeypatch, ["boxicity", "--budget", "x=1"], C4)[0] == 2


def test_deterministic(capsys, monkeypatch):
    a = run(capsys, monkeypatch, ["decide", "--d", "2"], C4)
    b = run(capsys, monkeypatch, ["decide", "--d", "2"], C4)
    assert a == b


def test_console_script_entry():
    res = subprocess.run([sys.executable, "-m", "boxkit.cli", "gadget", "L1"], capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout.startswith("# label a 0")
