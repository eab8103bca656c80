import io
import json
import os
import subprocess
import sys

import pytest

from weylchar.cli import main
from weylchar.document import document_to_table, dumps

A4_MULTS = ["0", "1", "1", "1", "2", "2", "2", "3", "3", "4"]
S5_TEXT = "1/120*x1^5 + 1/6*x1^3*x2 + 1/2*x1^2*x3 + 1/2*x1*x2^2 + x1*x4 + x2*x3 + x5"


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def run_process(*argv, env=None):
    full_env = dict(os.environ)
    full_env.pop("WEYLCHAR_CACHE_DIR", None)
    full_env.update(env or {})
    return subprocess.run(
        [sys.executable, "-m", "weylchar", *argv], capture_output=True, text=True, env=full_env
    )


@pytest.fixture(autouse=True)
def _no_cache_env(monkeypatch):
    monkeypatch.delenv("WEYLCHAR_CACHE_DIR", raising=False)
    monkeypatch.delenv("WEYLCHAR_FAULT_INJECT", raising=False)


def test_character_json_a4_case():
    code, text = run("character", "--n", "5", "--dynkin", "4,1,0,0", "--format", "json")
    assert code == 0
    doc = json.loads(text)
    assert doc["algebra"] == "A4"
    assert doc["rank_n"] == 5
    assert doc["weight_m"] == 6
    assert doc["dominant"] == {"partition": [5, 1, 0, 0, 0], "dynkin": [4, 1, 0, 0]}
    assert [r["multiplicity"] for r in doc["rows"]] == A4_MULTS
    assert [r["orbit_size"] for r in doc["rows"]] == ["5", "20", "20", "10", "30", "60", "10", "20", "30", "5"]
    assert doc["dimension"] == "420"


def test_character_trivial():
    code, text = run("character", "--n", "2", "--dynkin", "0", "--format", "json")
    doc = json.loads(text)
    assert code == 0
    assert len(doc["rows"]) == 1
    assert doc["dimension"] == "1"


def test_character_adjoint_a2():
    code, text = run("character", "--n", "3", "--partition", "2,1,0", "--format", "json")
    doc = json.loads(text)
    assert code == 0
    assert doc["dimension"] == "8"
    nonzero = [r for r in doc["rows"] if r["multiplicity"] != "0"]
    assert [(r["partition"], r["multiplicity"]) for r in nonzero] == [([2, 1, 0], "1"), ([0, 0, 0], "2")]


def test_character_text_format():
    code, text = run("character", "--n", "5", "--dynkin", "4,1,0,0")
    assert code == 0
    lines = text.splitlines()
    assert lines[0].split("|")[0].strip() == "partition"
    assert [c.strip() for c in lines[0].split("|")] == ["partition", "dynkin", "multiplicity", "orbit_size"]
    assert len(lines) == 1 + 10 + 1
    assert "dimension 420" in lines[-1]
    # columns are aligned
    assert len({line.index("|") for line in lines[:-1]}) == 1


def test_json_round_trip():
    _, text = run("character", "--n", "4", "--partition", "3,1,1,0", "--format", "json")
    doc = json.loads(text)
    assert dumps(doc) == text
    table = document_to_table(doc)
    assert table.dominant.partition == (3, 1, 1, 0)


def test_schur_outputs():
    assert run("schur", "--generic", "--degree", "5") == (0, S5_TEXT + "\n")
    assert run("schur", "--generic", "--degree", "0") == (0, "1\n")
    code, text = run("schur", "--n", "5", "--degree", "6")
    assert code == 0
    assert text == (
        "-1/72*x1^6 + 1/3*x1^4*x2 - 2/3*x1^3*x3 - 1/2*x1^2*x2^2 + 2*x1^2*x4"
        " + 2*x1*x2*x3 + 2*x2*x4 + x3^2 + 2*x1\n"
    )


@pytest.mark.parametrize("n,q,size", [(5, "3,2,1,0,0", 60), (2, "2,0", 2), (3, "0,0,0", 1)])
def test_orbit(n, q, size):
    code, text = run("orbit", "--n", str(n), "--partition", q)
    lines = text.splitlines()
    assert code == 0
    assert lines[-1] == f"size {size}"
    assert len(lines) - 1 == size == len(set(lines[:-1]))
    assert lines[0] == "(" + q + ")"


def test_verify_small():
    code, text = run("verify", "--n-max", "2", "--m-max", "2")
    assert code == 0
    assert text.splitlines()[-1].endswith("0 failed")
    assert all(line.startswith("PASS") for line in text.splitlines()[:-1])


def test_verify_kostka_only():
    code, text = run("verify", "--n-max", "3", "--m-max", "4", "--oracle", "kostka")
    assert code == 0
    assert "[kostka]" in text


def test_verify_printed_recursion_report():
    code, text = run("verify", "--n-max", "3", "--m-max", "4", "--oracle", "kostka", "--printed-recursion")
    assert code == 0
    assert "printed-recursion:" in text


@pytest.mark.parametrize("oracle", ["kostka", "freudenthal", "weyl"])
def test_verify_fault_injection(monkeypatch, oracle):
    monkeypatch.setenv("WEYLCHAR_FAULT_INJECT", oracle)
    code, text = run("verify", "--n-max", "3", "--m-max", "3")
    assert code == 2
    assert "FAIL" in text


@pytest.mark.parametrize("argv", [
    ["character", "--n", "5", "--dynkin", "4,1,0"],
    ["character", "--n", "5", "--dynkin", "4,x,0,0"],
    ["character", "--n", "3", "--partition", "1,2,0"],
    ["character", "--n", "1", "--dynkin", ""],
    ["character", "--n", "3"],
    ["character", "--n", "3", "--dynkin", "1,0", "--partition", "1,0,0"],
    ["schur", "--degree", "3"],
    ["schur", "--generic", "--degree", "-1"],
    ["orbit", "--n", "3", "--partition", "1,0"],
    ["verify", "--n-max", "7", "--m-max", "2"],
    ["verify", "--n-max", "3", "--m-max", "11"],
    ["frobnicate"],
])
def test_usage_errors_exit_one(argv, capsys):
    try:
        code = main(argv, out=io.StringIO())
    except SystemExit as exc:
        code = exc.code
    assert code == 1
    assert capsys.readouterr().err


def test_subprocess_determinism_and_exit_codes():
    argv = ["character", "--n", "5", "--dynkin", "4,1,0,0", "--format", "json"]
    first, second = run_process(*argv), run_process(*argv)
    assert first.returncode == second.returncode == 0
    assert first.stdout == second.stdout
    assert first.stderr == ""
    bad = run_process("character", "--n", "5", "--dynkin", "nope")
    assert bad.returncode == 1
    assert bad.stdout == ""
    assert "usage" in bad.stderr
    faulty = run_process("verify", "--n-max", "2", "--m-max", "2", env={"WEYLCHAR_FAULT_INJECT": "kostka"})
    assert faulty.returncode == 2
