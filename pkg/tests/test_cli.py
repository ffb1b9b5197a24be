import json

import pytest

from bfvd.cli import run_cli

C4 = "p bfvd 4 4\ne 1 2\ne 1 4\ne 2 3\ne 3 4\nparam 1 2 2\n"


@pytest.fixture
def c4_file(tmp_path):
    f = tmp_path / "c4.txt"
    f.write_text(C4)
    return str(f)


def test_solve_oracle(c4_file, capsys):
    assert run_cli(["solve", "--algo", "oracle", "--input", c4_file]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out[0] == "YES" and len(out[1].split()) == 3


def test_solve_json(c4_file, capsys):
    assert run_cli(["solve", "--algo", "degen", "--input", c4_file, "--json", "--k", "1"]) == 0
    rec = json.loads(capsys.readouterr().out)
    assert rec["answer"] == "no" and rec["witness"] is None


def test_solve_fvs_file(tmp_path, capsys):
    f = tmp_path / "k23.txt"
    f.write_text("p bfvd 5 6\ne 1 3\ne 1 4\ne 1 5\ne 2 3\ne 2 4\ne 2 5\nparam 2 3 1\n")
    d = tmp_path / "d.txt"
    d.write_text("1  # one hub\n")
    assert run_cli(["solve", "--algo", "fvn", "--input", str(f), "--fvs-file", str(d)]) == 0
    assert capsys.readouterr().out.startswith("YES")


def test_stats_on_tree(tmp_path, capsys):
    f = tmp_path / "t.txt"
    f.write_text("p bfvd 4 3\ne 1 2\ne 2 3\ne 2 4\nparam 1 1 0\n")
    assert run_cli(["stats", "--input", str(f)]) == 0
    out = capsys.readouterr().out
    assert "d=1" in out and "fen=0" in out and "fvs=0" in out


def test_enumerate(c4_file, capsys):
    assert run_cli(["enumerate", "--input", c4_file]) == 0
    assert capsys.readouterr().out.splitlines() == ["1 | 2", "2 | 2", "3 | 2", "4 | 2"]


def test_kernelize_round_trips_reduced_instance(c4_file, capsys):
    assert run_cli(["kernelize", "--mode", "bfvd", "--input", c4_file, "--i", "2"]) == 0
    assert capsys.readouterr().out == C4.replace("param 1 2 2", "param 2 2 2")


def test_kernelize_bdd(tmp_path, capsys):
    f = tmp_path / "star.txt"
    f.write_text("p wbdd 4 3 1 0\ne 1 2\ne 1 3\ne 1 4\n")
    assert run_cli(["kernelize", "--mode", "bdd", "--input", str(f)]) == 0
    out = capsys.readouterr().out
    assert out.startswith("# decided: no\np wbdd")
    assert run_cli(["kernelize", "--mode", "bdd", "--input", str(f), "--k", "1", "--json"]) == 0
    rec = json.loads(capsys.readouterr().out)
    assert rec["decided"] == "yes" and rec["n"] == 0


def test_charm_table(capsys):
    status = run_cli(["charm-table", "--r", "2"])
    out, err = capsys.readouterr()
    lines = out.splitlines()
    assert len(lines) == 244
    assert lines[-1].startswith("# patterns 243, distinct matrices 47, unmatched 68")
    assert lines[0] == "-2,-2,-2,-2,-2 | " + lines[0].split(" | ")[1] + " | " + lines[0].split(" | ")[2]
    assert status == 3 and "no shorter equivalent" in err


def test_charm_table_kernel_window(capsys):
    assert run_cli(["charm-table", "--r", "3", "--window", "10"]) == 0
    assert capsys.readouterr().out.splitlines()[-1].startswith("# patterns 6561, distinct matrices 58, unmatched 0")


def test_reduce_bdd(tmp_path, capsys):
    f = tmp_path / "tri.txt"
    f.write_text("p wbdd 3 3 1 1\ne 1 2\ne 1 3\ne 2 3\n")
    assert run_cli(["reduce-bdd", "--i", "2", "--input", str(f)]) == 0
    out = capsys.readouterr().out
    assert out.startswith("p bfvd 15 ") and out.rstrip().endswith("param 2 5 1")


@pytest.mark.parametrize("argv,code", [
    (["solve", "--input", "/nonexistent"], 2),
    (["solve", "--bogus"], 2),
    (["frobnicate"], 2),
    (["reduce-bdd", "--i", "2"], 2),
])
def test_usage_errors(argv, code, capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", __import__("io").StringIO("p bfvd 1 0\nparam 1 1 0\n"))
    assert run_cli(argv) == code


def test_parse_error_exit(tmp_path, capsys):
    f = tmp_path / "bad.txt"
    f.write_text("p bfvd 2 1\ne 1 1\nparam 1 1 0\n")
    assert run_cli(["solve", "--input", str(f)]) == 2
    assert "line 2" in capsys.readouterr().err


def test_contract_error_exit(tmp_path, capsys):
    f = tmp_path / "big.txt"
    f.write_text("p bfvd 20 0\nparam 1 1 0\n")
    assert run_cli(["solve", "--algo", "oracle", "--input", str(f)]) == 3


def test_timeout_exit(tmp_path, capsys):
    g = "\n".join(f"e {u} {v}" for u in range(1, 13) for v in range(u + 1, 13) if (u + v) % 3)
    m = g.count("\n") + 1
    f = tmp_path / "dense.txt"
    f.write_text(f"p bfvd 12 {m}\n{g}\nparam 3 3 3\n")
    assert run_cli(["solve", "--algo", "branch", "--input", str(f), "--timeout-ms", "1", "--json"]) == 4
    assert json.loads(capsys.readouterr().out)["status"] == "timeout"


def test_bench_cli(capsys):
    assert run_cli(["bench", "--family", "gadget", "--seeds", "3", "--no-time", "--json"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) > 3 and lines[-1].startswith("# runs 3, disagreements 0")


def test_selftest(capsys):
    assert run_cli(["selftest"]) == 0
    assert "FAIL" not in capsys.readouterr().out
