import json
import os
import subprocess
import sys

import pytest

from conftest import c6_long_chord
from planecolor.cli import SCHEMA, run
from planecolor.rotg import format_rotg, read_rotg


@pytest.fixture
def files(tmp_path):
    out = {}
    for name in ("fig1a", "fig1b"):
        p = tmp_path / f"{name}.rotg"
        assert run(["catalog", "emit", name, "-o", str(p)]) == 0
        out[name] = p
    p = tmp_path / "chord.rotg"
    p.write_text(format_rotg(c6_long_chord()))
    out["chord"] = p
    return out


def test_check_exit_codes(files, capsys):
    assert run(["check", str(files["fig1b"]), "--phi", "1,2,1,2,1,2"]) == 11
    assert capsys.readouterr().out.strip() == "FailsB color=1 u=1,3,5 t=7,9,8"
    assert run(["check", str(files["fig1a"]), "--phi", "1,2,1,2,1,2"]) == 10
    assert capsys.readouterr().out.strip() == "FailsA edge=1,3"
    assert run(["check", str(files["fig1b"]), "--phi", "1,2,3,1,2,3"]) == 0
    assert capsys.readouterr().out.strip() == "Extends"


def test_check_follows_listed_outer_order(tmp_path, files, capsys):
    text = files["fig1b"].read_text().replace("outer: 1 2 3 4 5 6", "outer: 2 3 4 5 6 1")
    p = tmp_path / "shift.rotg"
    p.write_text(text)
    # r2..r6, r1 coloured 2,1,2,1,2,1: same colouring as before
    assert run(["check", str(p), "--phi", "2,1,2,1,2,1"]) == 11


def test_check_outside_class(files, capsys):
    assert run(["check", str(files["chord"]), "--phi", "1,2,3,1,2,3"]) == 4
    assert "NotInClass oracle_extends=false" in capsys.readouterr().out


def test_usage_and_input_errors(tmp_path, files, capsys):
    assert run([]) == 2
    assert run(["check", str(files["fig1b"]), "--phi", "1,2,3"]) == 2
    assert run(["check", str(files["fig1b"]), "--phi", "1,2,x,1,2,3"]) == 2
    assert run(["check", str(files["fig1b"]), "--phi", "1,2,4,1,2,3"]) == 2
    assert run(["verify", "--outer", "7", "--max-n", "8"]) == 2
    assert run(["critical", "--outer", "5", "--max-n", "8", "--workers", "0"]) == 2
    assert run(["check", str(tmp_path / "missing.rotg"), "--phi", "1"]) == 3
    bad = tmp_path / "bad.rotg"
    bad.write_text("vertices 2\nrot 1: 2\n")
    assert run(["classify", str(bad)]) == 3
    bad.write_text("vertices 3\nrot 1: 2 3\nrot 2: 3 1\nrot 3: 1 2\nbogus\n")
    assert run(["classify", str(bad)]) == 3
    path = tmp_path / "path.rotg"
    path.write_text("vertices 3\nrot 1: 2\nrot 2: 1 3\nrot 3: 2\nouter: 1 2 3 2\n")
    assert run(["classify", str(path)]) == 0
    assert run(["check", str(path), "--phi", "1,2,3,2"]) == 4


def test_catalog_emit_round_trip(files, capsys):
    assert run(["catalog", "emit", "fig1b", "-o", "-"]) == 0
    text = capsys.readouterr().out
    assert text == files["fig1b"].read_text()
    assert read_rotg(files["fig1b"]).num_edges == 12


def test_classify(files, capsys):
    assert run(["classify", str(files["fig1a"])]) == 0
    assert capsys.readouterr().out.strip() == "Fig1a"
    assert run(["classify", str(files["fig1b"]), "--details"]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out[0] == "Fig1b" and "critical=true" in out[1] and "in_class=true" in out[1]
    assert run(["classify", str(files["chord"])]) == 0
    assert capsys.readouterr().out.strip() == "Other"


def test_verify_report(tmp_path, capsys):
    rep = tmp_path / "r.json"
    assert run(["verify", "--outer", "6", "--max-n", "9", "--report", str(rep)]) == 0
    data = json.loads(rep.read_text())
    assert data["schema"] == SCHEMA and data["command"] == "verify"
    assert data["zero_disagreements"] and data["disagreements"] == []
    assert data["graph_count"] == data["by_outer"]["6"]["graphs"] > 0
    assert data["precoloring_count"] == 729 * data["graph_count"]
    assert "disagreements=0" in capsys.readouterr().out


def test_critical_and_enumerate(tmp_path, capsys):
    rep = tmp_path / "c.json"
    assert run(["critical", "--outer", "6", "--max-n", "9", "--report", str(rep),
                "--emit-dir", str(tmp_path / "crit")]) == 0
    data = json.loads(rep.read_text())
    assert data["graph_count"] == 2 and sorted(data["classification"]) == ["Fig1a", "Fig1b"]
    assert len(list((tmp_path / "crit").glob("*.rotg"))) == 2
    capsys.readouterr()
    assert run(["enumerate", "--outer", "6", "--max-n", "6", "--min-triangles", "1",
                "--out-dir", str(tmp_path / "fam")]) == 0
    assert capsys.readouterr().out.startswith("graphs: 1")
    (only,) = (tmp_path / "fam").glob("*.rotg")
    assert run(["classify", str(only)]) == 0
    assert capsys.readouterr().out.strip() == "Fig1a"


def test_discharge(files, capsys):
    assert run(["discharge", str(files["fig1b"])]) == 0
    first = capsys.readouterr().out.splitlines()[0]
    assert first == "n2=3 n3=3 initial=1 final=1 identity=1 ok=true"
    assert run(["discharge", str(files["fig1b"]), "--triangle", "1,2,3"]) == 4
    assert run(["discharge", str(files["chord"])]) == 4


def test_console_script(files):
    env = dict(os.environ)
    out = subprocess.run([sys.executable, "-m", "planecolor.cli", "check", str(files["fig1b"]),
                          "--phi", "1,2,1,2,1,2"], capture_output=True, text=True, env=env)
    assert out.returncode == 11 and out.stdout.startswith("FailsB")
