import csv
import json
import subprocess
import sys

import pytest

from twinvol.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_count_d3_sigma1(capsys):
    code, out, _ = run(capsys, "count", "--group", "D:3", "--aut", "1,1", "--format", "json")
    assert code == 0
    assert json.loads(out)["m_closed"] == 1


def test_count_equality_case(capsys):
    code, out, _ = run(capsys, "count", "--group", "D:6", "--aut", "5,0", "--format", "json", "--brute-force")
    rec = json.loads(out)
    assert code == 0
    assert rec["m_closed"] == rec["m_brute"] == 8 and rec["equality"] is True
    assert rec["S"][:6] == ["e", "r", "r^2", "r^3", "r^4", "r^5"]


def test_count_renderings_agree(capsys):
    _, text, _ = run(capsys, "count", "--group", "D:12", "--aut", "5,0", "--brute-force")
    _, js, _ = run(capsys, "count", "--group", "D:12", "--aut", "5,0", "--brute-force", "--format", "json")
    _, cs, _ = run(capsys, "count", "--group", "D:12", "--aut", "5,0", "--brute-force", "--format", "csv")
    rec = json.loads(js)
    row = next(csv.DictReader(cs.splitlines()))
    assert int(row["m_closed"]) == int(row["m_brute"]) == rec["m_closed"] == rec["m_brute"] == 10
    assert f"m={rec['m_closed']} T={rec['T']}" in text
    assert f"brute force: {rec['m_brute']}" in text


def test_count_abelian(capsys):
    code, out, _ = run(capsys, "count", "--group", "Z:3", "--format", "json")
    rec = json.loads(out)
    assert code == 0 and rec["m_brute"] == 1 and rec["T"] == 3 and rec["S"] == ["0"]
    code, out, _ = run(capsys, "count", "--group", "Z:3xZ:3", "--aut", "2,0,0,2", "--format", "json")
    assert json.loads(out)["m_brute"] == 9


def test_congruence(capsys):
    code, out, _ = run(capsys, "congruence", "--a", "2", "--c", "1", "--n", "4")
    assert code == 0 and json.loads(out)["solvable"] is False
    _, out, _ = run(capsys, "congruence", "--a", "4", "--c", "-2", "--n", "6")
    assert json.loads(out)["solutions"] == [1, 4]


def test_aut_list(capsys):
    code, out, _ = run(capsys, "aut-list", "--group", "D:6")
    lines = out.splitlines()
    assert code == 0 and lines[0].startswith("convention:")
    assert lines[1:-1] == ["(1,0)", "(1,1)", "(1,2)", "(1,3)", "(1,4)", "(1,5)",
                           "(5,0)", "(5,1)", "(5,2)", "(5,3)", "(5,4)", "(5,5)"]
    _, out, _ = run(capsys, "aut-list", "--group", "D:3", "--format", "json")
    doc = json.loads(out)
    assert doc["automorphisms"][1] == {"u": 1, "v": 1} and "convention" in doc


def test_indicators(capsys):
    code, out, _ = run(capsys, "indicators", "--group", "D:5", "--format", "json")
    rows = json.loads(out)
    assert code == 0 and [r["epsilon"] for r in rows] == [1, 1, 1, 1]
    assert all(t["integral"] for r in rows for t in r["twisted"])
    _, out, _ = run(capsys, "indicators", "--group", "D:5", "--aut", "1,1", "--format", "json")
    assert json.loads(out)[0]["twisted"][0]["integral"] is False
    _, out, _ = run(capsys, "indicators", "--group", "D:3")
    assert out.splitlines()[0].split()[:3] == ["irrep", "degree", "eps"]


def test_table1(capsys, tmp_path):
    code, out, err = run(capsys, "table1", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and "PASS" in err
    assert [r["m_closed"] for r in doc["records"]] == [4, 1, 1, 4, 4, 4]
    path = tmp_path / "t1.csv"
    assert main(["table1", "--format", "csv", "--output", str(path)]) == 0
    assert len(path.read_text().splitlines()) == 7


def test_verify_dihedral_files_deterministic(tmp_path, capsys):
    outs = []
    for i in range(2):
        for fmt in ("json", "csv"):
            path = tmp_path / f"run{i}.{fmt}"
            assert main(["verify", "dihedral", "--max-l", "20", "--format", fmt, "-o", str(path)]) == 0
            outs.append(path.read_bytes())
    capsys.readouterr()
    assert outs[0] == outs[2] and outs[1] == outs[3]
    assert json.loads(outs[0])["summary"]["violations"] == 0


def test_verify_orders_and_indicators(capsys):
    code, out, err = run(capsys, "verify", "orders", "--primes", "2,3")
    assert code == 0 and "violations=0" in out
    code, out, _ = run(capsys, "verify", "indicators", "--max-l", "5", "--format", "csv")
    assert code == 0 and out.startswith("group,kind,u,v,lhs,rhs,ok")


def test_violations_exit_1(monkeypatch, capsys):
    from twinvol import harness

    monkeypatch.setattr(harness, "degree_sum", lambda g: 1)
    code, out, err = run(capsys, "verify", "dihedral", "--max-l", "4")
    assert code == 1 and "VIOLATION" in out and "FAIL" in err


@pytest.mark.parametrize(
    "argv, token",
    [
        (["count", "--group", "Q:6"], "Q:6"),
        (["count", "--group", "D:6", "--aut", "2,0"], "2,0"),
        (["count", "--group", "D:6", "--aut", "a,b"], "a,b"),
        (["count", "--group", "D:2"], "l=2"),
        (["verify", "orders", "--primes", "4"], "4"),
        (["verify", "dihedral", "--max-l", "2"], "max_l"),
        (["congruence", "--a", "1", "--c", "1", "--n", "0"], "--n"),
    ],
)
def test_usage_errors(capsys, argv, token):
    code, _, err = run(capsys, *argv)
    assert code == 2
    assert token in err


def test_argparse_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["verify", "orders", "--primes", "x,y"])
    assert exc.value.code == 2


def test_no_color(monkeypatch):
    from twinvol.cli import _color

    class Tty:
        def isatty(self):
            return True

    monkeypatch.delenv("NO_COLOR", raising=False)
    assert _color("PASS", "32", Tty()) != "PASS"
    monkeypatch.setenv("NO_COLOR", "1")
    assert _color("PASS", "32", Tty()) == "PASS"


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "twinvol", "count", "--group", "D:3", "--aut", "1,1"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and "m=1" in proc.stdout
