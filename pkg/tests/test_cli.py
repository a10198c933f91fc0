import subprocess
import sys
from pathlib import Path

import pytest

from compnum.cli import main

GOLDEN = Path(__file__).parent / "golden"
CERTIFIED = sorted(p.stem for p in GOLDEN.glob("*.graph"))

K24 = "".join(f"e {a} {b}\n" for a in "xy" for b in "pqrs")


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize("name", CERTIFIED)
def test_certify_matches_golden(name, tmp_path, capsys):
    out_path = tmp_path / f"{name}.cert"
    code, out, _ = run(capsys, "certify", GOLDEN / f"{name}.graph", "-o", out_path)
    golden = (GOLDEN / f"{name}.cert").read_bytes()
    assert code == 0
    header = golden.split(b"\n", 1)[0].decode()
    assert out == header.replace("certificate k=", "k<=") + "\n"
    assert out_path.read_bytes() == golden


@pytest.mark.parametrize("name", CERTIFIED)
def test_verify_golden(name, capsys):
    code, out, _ = run(capsys, "verify", GOLDEN / f"{name}.graph", GOLDEN / f"{name}.cert")
    assert code == 0 and out.startswith("accept")


def test_expected_headers():
    heads = {n: (GOLDEN / f"{n}.cert").read_text().split("\n", 1)[0] for n in CERTIFIED}
    assert heads["c4"] == "certificate k=2 fallback=0"
    assert heads["housex"] == "certificate k=2 fallback=0"
    assert heads["domino"] == "certificate k=3 fallback=0"


def test_verify_rejects_tampered(tmp_path, capsys):
    text = (GOLDEN / "c4.cert").read_text()
    lines = text.splitlines(keepends=True)
    arc = next(l for l in lines if l.startswith("a "))
    bad = tmp_path / "bad.cert"
    bad.write_text("".join(l for l in lines if l is not arc))
    code, _, err = run(capsys, "verify", GOLDEN / "c4.graph", bad)
    assert code == 1 and "reject clause 3" in err
    bad.write_text(text.replace("k=2", "k=3", 1))
    code, _, err = run(capsys, "verify", GOLDEN / "c4.graph", bad)
    assert code == 1 and "reject clause 1" in err
    # certificate for a different graph
    code, _, err = run(capsys, "verify", GOLDEN / "c5.graph", GOLDEN / "c4.cert")
    assert code == 1


def test_verify_input_errors(tmp_path, capsys):
    code, _, err = run(capsys, "verify", tmp_path / "missing.graph", GOLDEN / "c4.cert")
    assert code == 2 and "error" in err
    broken = tmp_path / "broken.cert"
    broken.write_text("certificate k=two fallback=0\nisolated\n")
    assert run(capsys, "verify", GOLDEN / "c4.graph", broken)[0] == 2
    graph = tmp_path / "loop.graph"
    graph.write_text("e a b\ne a a\n")
    code, _, err = run(capsys, "verify", graph, GOLDEN / "c4.cert")
    assert code == 2 and "line 2" in err


def test_certify_budget_exhausted_writes_nothing(tmp_path, capsys):
    g = tmp_path / "k24.graph"
    g.write_text(K24)
    out_path = tmp_path / "k24.cert"
    code, out, err = run(capsys, "certify", g, "-o", out_path, "--nodes", "1")
    assert code == 3 and out == "" and "budget" in err
    assert not out_path.exists() and not list(tmp_path.glob("*.tmp"))


def test_certify_chordal(tmp_path, capsys):
    g = tmp_path / "k3.graph"
    g.write_text("e a b\ne b c\ne a c\n")
    code, out, _ = run(capsys, "certify", g, "-o", tmp_path / "k3.cert")
    assert code == 0 and out == "k<=1 fallback=0\n"


def test_exact(tmp_path, capsys):
    code, out, _ = run(capsys, "exact", GOLDEN / "c4.graph")
    assert code == 0
    first, rest = out.split("\n", 1)
    assert first == "k=2"
    assert rest and all(l.startswith(("a ", "v ")) for l in rest.splitlines())
    wit = tmp_path / "w.digraph"
    code, out, _ = run(capsys, "exact", GOLDEN / "domino.graph", "-o", wit)
    assert code == 0 and out == "k=3\n" and wit.read_text().startswith("a ")
    code, out, err = run(capsys, "exact", GOLDEN / "c4.graph", "--max-k", "1")
    assert code == 3 and out == ""
    assert run(capsys, "exact", GOLDEN / "c4.graph", "--nodes", "0")[0] == 2


def test_analyze(capsys):
    code, out, _ = run(capsys, "analyze", GOLDEN / "domino.graph")
    assert code == 0
    assert out.splitlines()[:4] == ["holes 2", "hole a b e d", "hole b c f e", "xset 0"]
    assert "shared b e" in out and "false" not in out
    code, out, _ = run(capsys, "analyze", GOLDEN / "wheel5.graph")
    assert "holes 1\n" in out and "xset 0 hub\n" in out


def test_analyze_k4_and_errors(tmp_path, capsys):
    g = tmp_path / "k4.graph"
    g.write_text("".join(f"e {a} {b}\n" for a, b in ["ab", "ac", "ad", "bc", "bd", "cd"]))
    code, out, _ = run(capsys, "analyze", g)
    assert code == 0 and out.startswith("holes 0\nchordal\n")
    g.write_text("edge a b\n")
    assert run(capsys, "analyze", g)[0] == 2


def test_compete(capsys):
    code, out, _ = run(capsys, "compete", GOLDEN / "prey.digraph")
    assert code == 0 and out == (GOLDEN / "prey.expected").read_text()


def test_compete_parse_error(tmp_path, capsys):
    d = tmp_path / "loop.digraph"
    d.write_text("a u > u\n")
    assert run(capsys, "compete", d)[0] == 2


def test_scan_exhaustive_small(capsys):
    code, out, _ = run(capsys, "scan", "--n", "1..5", "--mode", "exhaustive", "--quiet")
    assert code == 0
    assert "graphs=1099\n" in out and "violations=0\n" in out and "budget_exhausted=0\n" in out


@pytest.mark.parametrize("argv", [
    ["--n", "1..7"],
    ["--n", "5..3"],
    ["--n", "x..y"],
    ["--n", "3..5", "--mode", "random", "--p", "1.5"],
    ["--n", "3..5", "--mode", "random", "--samples", "-1"],
    ["--n", "3..5", "--cap", "1"],
    ["--n", "3..5", "--jobs", "0"],
    ["--n", "3..5", "--mode", "bogus"],
])
def test_scan_invalid_config(argv, capsys):
    assert run(capsys, "scan", *argv)[0] == 2


def test_scan_seed7_is_stable(capsys):
    argv = ["scan", "--n", "8..8", "--mode", "random", "--samples", "200", "--seed", "7"]
    first = run(capsys, *argv)
    second = run(capsys, *argv)
    assert first[0] == 0 and first == second
    assert first[1] == (GOLDEN / "scan_seed7.txt").read_text()
    assert run(capsys, *argv, "--jobs", "2")[1] == first[1]


def test_scan_budget_exhausted_exit(capsys):
    code, out, _ = run(capsys, "scan", "--n", "4..4", "--nodes", "1", "--quiet")
    assert code == 3 and "violations=0" in out and "budget_exhausted=0" not in out


def test_module_entry_point(tmp_path):
    out = subprocess.run([sys.executable, "-m", "compnum", "certify", str(GOLDEN / "c4.graph"),
                          "-o", str(tmp_path / "c4.cert")], capture_output=True, text=True)
    assert out.returncode == 0 and out.stdout == "k<=2 fallback=0\n"
    assert (tmp_path / "c4.cert").read_bytes() == (GOLDEN / "c4.cert").read_bytes()
    out = subprocess.run([sys.executable, "-m", "compnum"], capture_output=True, text=True)
    assert out.returncode == 2
