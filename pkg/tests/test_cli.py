import json

import pytest

from numrad.cli import main


def test_radius_l4_example(capsys):
    assert main(["radius", "--space", "lp:4", "--dim", "2",
                 "--matrix", "[[0,0],[1,0]]"]) == 0
    out = capsys.readouterr().out
    assert "0.569876764" in out
    assert "witness" in out


def test_radius_identity(capsys):
    assert main(["radius", "--space", "l2", "--dim", "2", "--matrix", "I"]) == 0
    assert "v(T) = 1" in capsys.readouterr().out


def test_check_nr_parallel_counterexample(capsys):
    code = main(["check", "nr-parallel", "--space", "lp:4", "--dim", "2",
                 "--a", "[[0,0],[1,0]]", "--b", "[[0,1],[1,0]]"])
    assert code == 1
    assert "verdict=False" in capsys.readouterr().out


def test_check_nr_birkhoff_identity_pair():
    assert main(["check", "nr-birkhoff", "--space", "l2", "--dim", "2",
                 "--a", "I", "--b", "I"]) == 1


def test_check_parallel_l1_vectors():
    assert main(["check", "parallel", "--space", "l1", "--dim", "2",
                 "--x", "[1,0]", "--y", "[0,1]"]) == 0


def test_check_daugavet():
    assert main(["check", "daugavet", "--space", "l2", "--dim", "2",
                 "--a", "I"]) == 0


def test_complex_matrix_entries():
    # [re, im] pairs for complex entries
    assert main(["radius", "--space", "l2", "--dim", "2", "--field", "complex",
                 "--matrix", "[[[0,1],[0,0]],[[0,0],[0,1]]]"]) == 0


def test_usage_errors(capsys):
    assert main(["radius", "--space", "lp:4", "--dim", "2",
                 "--matrix", "[[0,0],[1,0]"]) == 2  # malformed JSON
    assert main(["radius", "--space", "l3", "--dim", "2",
                 "--matrix", "I"]) == 2  # bad space
    assert main(["check", "nr-parallel", "--space", "l2", "--dim", "2",
                 "--x", "[1,0]", "--y", "[0,1]"]) == 2  # wrong operand kind
    assert main(["check", "parallel", "--space", "l2", "--dim", "2",
                 "--x", "[1,0]", "--y", "[0,1,2]"]) == 2  # wrong dim
    assert main(["verify", "nosuch"]) == 2
    assert main(["check", "nosuch", "--x", "[1,0]", "--y", "[0,1]"]) == 2
    capsys.readouterr()


def test_seed_env_fallback(monkeypatch, capsys):
    monkeypatch.setenv("NUMRAD_SEED", "17")
    assert main(["verify", "examples"]) == 0
    monkeypatch.setenv("NUMRAD_SEED", "notanint")
    assert main(["verify", "examples"]) == 2
    capsys.readouterr()


def test_report_schema(tmp_path, capsys):
    path = tmp_path / "r.json"
    assert main(["check", "nr-parallel", "--space", "lp:4", "--dim", "2",
                 "--a", "[[0,0],[1,0]]", "--b", "[[0,1],[1,0]]",
                 "--report", str(path)]) == 1
    capsys.readouterr()
    rep = json.loads(path.read_text())
    assert set(rep) == {"command", "config", "results", "seed", "version",
                        "timestamp"}
    r = rep["results"][0]
    assert r["id"] == "nr-parallel"
    assert r["verdict"] is False
    assert r["gap"] < -1e-3
    assert set(r["witness"]) == {"x", "xstar", "lambda_or_alpha", "attained"}


def test_sweep_flag(tmp_path, capsys):
    path = tmp_path / "r.json"
    assert main(["check", "parallel", "--space", "l2", "--dim", "2",
                 "--x", "[1,0]", "--y", "[0,1]", "--sweep",
                 "--report", str(path)]) == 1
    capsys.readouterr()
    rep = json.loads(path.read_text())
    assert len(rep["results"][0]["sweep"]) == 2  # real case: lambda = +-1


def test_config_file(tmp_path, capsys):
    cfgfile = tmp_path / "cfg.json"
    cfgfile.write_text(json.dumps({"space": "lp:4", "dim": 2, "grid": 1024}))
    assert main(["radius", "--config", str(cfgfile),
                 "--matrix", "[[0,0],[1,0]]"]) == 0
    assert "0.5698767" in capsys.readouterr().out
    cfgfile.write_text(json.dumps({"bogus_key": 1}))
    assert main(["radius", "--config", str(cfgfile), "--matrix", "I"]) == 2
    capsys.readouterr()


def test_verify_report_deterministic(tmp_path, capsys):
    p1, p2 = tmp_path / "a.json", tmp_path / "b.json"
    assert main(["verify", "examples", "tpt", "--seed", "42",
                 "--report", str(p1)]) == 0
    assert main(["verify", "examples", "tpt", "--seed", "42",
                 "--report", str(p2)]) == 0
    capsys.readouterr()
    a = json.loads(p1.read_text())
    b = json.loads(p2.read_text())
    a.pop("timestamp"), b.pop("timestamp")
    assert a == b
