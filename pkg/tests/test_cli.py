import json

import pytest

from copthrottle import pursuit
from copthrottle.cli import run


@pytest.fixture(autouse=True)
def restore_budget():
    old = pursuit.get_budget()
    yield
    pursuit.set_budget(old)
    pursuit._solve_cached.cache_clear()


def _json(capsys):
    return json.loads(capsys.readouterr().out)


def test_compute_thc_family(capsys):
    assert run(["compute", "thc", "--family", "path", "n=10"]) == 0
    out = _json(capsys)
    assert out["thc"] == 4 and out["k"] == 2
    assert run(["compute", "thc", "--family", "stellated_wheel", "m=10"]) == 0
    assert _json(capsys)["thc"] == 3


def test_compute_various_invariants(capsys):
    assert run(["compute", "captset", "--family", "figure3_unicyclic", "--cops", "7,8"]) == 0
    assert _json(capsys)["captset"] == 2
    assert run(["compute", "captk", "--family", "h7", "--k", "1"]) == 0
    assert _json(capsys)["captk"] == 3
    assert run(["compute", "thplus", "--family", "path", "n=9"]) == 0
    assert _json(capsys)["thplus"] == 4
    assert run(["compute", "burn", "--family", "figure4_tree"]) == 0
    assert _json(capsys)["burn"] == 2
    assert run(["compute", "copnumber", "--family", "petersen"]) == 0
    assert _json(capsys)["copnumber"] == 3
    assert run(["compute", "radk", "--family", "path", "n=9", "--k", "2"]) == 0
    assert _json(capsys)["radk"] == 2


def test_infinity_is_a_string(capsys):
    assert run(["compute", "girth", "--graph6", "@"]) == 0
    assert _json(capsys)["girth"] == "inf"
    assert run(["compute", "captset", "--family", "cycle", "n=4", "--cops", "0"]) == 0
    assert _json(capsys)["captset"] == "inf"


def test_table_output(capsys):
    assert run(["compute", "gamma", "--graph6", "@", "--table"]) == 0
    out = capsys.readouterr().out
    assert out.splitlines()[-1].split() == ["witness", "[0]"]


def test_file_and_stdin_input(tmp_path, capsys, monkeypatch):
    f = tmp_path / "g.txt"
    f.write_text("# a path\n3\n0 1\n1 2\n")
    assert run(["compute", "gamma", "--file", str(f)]) == 0
    assert _json(capsys)["gamma"] == 1
    import io

    monkeypatch.setattr("sys.stdin", io.StringIO("Bw\n"))
    assert run(["compute", "z"]) == 0
    assert _json(capsys)["z"] == 2  # K_3


def test_family_emit(capsys):
    assert run(["family", "cycle", "n=4"]) == 0
    assert capsys.readouterr().out.strip() == "Cl"
    assert run(["family", "path", "n=3", "--emit", "edges"]) == 0
    assert capsys.readouterr().out.split("\n")[0] == "3"


def test_classify(capsys):
    assert run(["classify", "--family", "path", "n=10"]) == 0
    out = _json(capsys)
    assert out["class"] == 4 and out["trigger"] == "algorithm2"


def test_trace(tmp_path, capsys):
    out = tmp_path / "f.json"
    assert run(["trace", "forcing", "--family", "path", "n=9", "--set", "3,6", "--out", str(out)]) == 0
    data = json.loads(out.read_text())
    assert data["propagation_time"] == 3
    out = tmp_path / "g.json"
    assert run(["trace", "game", "--family", "path", "n=7", "--cops", "3", "--out", str(out)]) == 0
    assert json.loads(out.read_text())["value"] == 3


def test_verify_formulas(capsys):
    assert run(["verify", "formulas"]) == 0
    data = _json(capsys)
    assert data["summary"]["fail"] == 0


def test_usage_errors(capsys):
    assert run(["compute", "foo", "--graph6", "@"]) == 2
    assert run(["compute", "gamma", "--graph6", "@@@"]) == 2
    assert run(["compute", "captk", "--graph6", "@"]) == 2
    assert run(["compute", "gamma", "--family", "nosuch"]) == 2
    assert run(["compute", "gamma", "--family", "path", "n=-1"]) == 2
    assert run(["compute", "captset", "--graph6", "@", "--cops", "5"]) == 2
    assert "error" in capsys.readouterr().err


def test_budget_exit_code(capsys):
    assert run(["compute", "thc", "--family", "hypercube", "m=6", "--budget", "1000"]) == 3
    assert "budget" in capsys.readouterr().err.lower()
