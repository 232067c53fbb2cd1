import io
import json
import subprocess
import sys

import pytest

from cyclicrank import cli


def run(*argv):
    out = io.StringIO()
    code = cli.main(list(argv), out)
    return code, out.getvalue()


def test_report_json():
    code, text = run("report", "--n", "2", "--m", "6", "--k", "1", "--format", "json")
    assert code == 0
    doc = json.loads(text)
    assert doc["g"] == 2 and doc["rk_K"] == 1 and doc["singular_fibers"] == 5


def test_report_precondition_exit(capsys):
    code, _ = run("report", "--n", "3", "--m", "8", "--k", "1")
    assert code == 2
    assert "n must divide m" in capsys.readouterr().err


def test_report_certified():
    code, text = run("report", "--n", "3", "--m", "9", "--k", "2", "--certify", "oracle",
                     "--branch", "0,1,2,3,4,5,6,7,8", "--format", "json")
    assert code == 0
    doc = json.loads(text)
    assert doc["certified_by_oracle"] and doc["rk_K"] == 3


def test_report_moving_positions_and_csv():
    code, text = run("report", "--n", "2", "--m", "8", "--k", "2", "--certify", "all",
                     "--moving", "3,5", "--format", "csv")
    assert code == 0
    header, row = text.strip().splitlines()
    assert dict(zip(header.split(","), row.split(",")))["rk_K"] == "1"


def test_oracle_mismatch_exit(monkeypatch):
    from cyclicrank import oracle
    monkeypatch.setattr(oracle, "kernel_dimension", lambda B: 99)
    code, _ = run("report", "--n", "2", "--m", "6", "--k", "1", "--certify", "oracle")
    assert code == 3


def test_cd():
    code, text = run("cd", "--n", "7", "--format", "json")
    doc = json.loads(text)
    assert code == 0 and doc["rk_U"] == doc["rk_K"] == 4
    assert run("cd", "--n", "6")[0] == 2
    assert json.loads(run("cd", "--n", "13", "--format", "json")[1])["rk_U"] == 8


def test_hurwitz_commands(capsys):
    code, text = run("hurwitz", "--tuple", "(1 2);(1 2);(1 2);(1 2);(1 2);(1 2)", "--k", "1")
    assert code == 0 and json.loads(text)["N"] == 1
    code, text = run("hurwitz", "--cyclic", "3,9", "--k", "1")
    assert code == 0 and set(json.loads(text)) == {"N", "image_order", "kernel_index",
                                                    "policy"}
    code, _ = run("hurwitz", "--tuple", "(1 2;(1 2)")
    assert code == 2
    assert "malformed cycle" in capsys.readouterr().err
    assert run("hurwitz", "--cyclic", "3,8")[0] == 2


def test_sweep(tmp_path):
    cfg = tmp_path / "grid.json"
    cfg.write_text(json.dumps({"n": [2, 3], "m": {"min": 6, "max": 9}, "k": [1, 2],
                               "certify": "rigidity",
                               "branch": {"rule": "progression", "start": "1/2", "step": 1}}))
    code, text = run("sweep", str(cfg))
    assert code == 0
    lines = text.splitlines()
    assert lines[0] == cli.SWEEP_HEADER
    assert lines[1].split(",") == cli.SWEEP_COLUMNS
    rows = lines[2:]
    assert len(rows) == 16
    assert rows[0].startswith("2,6,1,2,1,1,false,5,")
    assert any("skipped: n | m" in r for r in rows)
    assert any("skipped: k < m/n" in r for r in rows)
    # deterministic and independent of parallelism
    out = tmp_path / "out.csv"
    assert run("sweep", str(cfg), "--jobs", "2", "--output", str(out))[0] == 0
    assert out.read_text() == text


def test_sweep_bad_config(tmp_path):
    cfg = tmp_path / "bad.json"
    cfg.write_text("{not json")
    assert run("sweep", str(cfg))[0] == 2


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "cyclicrank", "cd", "--n", "5", "--format",
                          "json"], capture_output=True, text=True)
    assert res.returncode == 0
    assert json.loads(res.stdout)["g"] == 4
