import json

import pytest

from pbcomplex.cli import run
from pbcomplex.complex import boundary_of_simplex, dump_complex, load_complex, projective_plane, reduced_homology
from pbcomplex.graph_core import dump_graph, theta
from pbcomplex.verify import VerificationReport


def test_con_x_report(tmp_path, capsys):
    out = tmp_path / "r.json"
    assert run(["con-x", "--max-edges", "4", "--max-labels", "2", "--out", str(out)]) == 0
    rep = VerificationReport.from_json(json.loads(out.read_text()))
    assert rep.passed and rep.instances > 0
    assert "PASS con-x" in capsys.readouterr().out


def test_homology_command(tmp_path, capsys):
    p = tmp_path / "triangle.cplx"
    p.write_text("0 1\n1 2\n0 2\n")
    assert run(["homology", "--complex", str(p)]) == 0
    assert capsys.readouterr().out.strip() == '{"1":{"betti":1,"torsion":[]}}'
    q = tmp_path / "rp2.cplx"
    dump_complex(projective_plane(), q)
    assert run(["homology", "--complex", str(q), "--collapse"]) == 0
    assert json.loads(capsys.readouterr().out) == {"1": {"betti": 0, "torsion": [2]}}


def test_cm_check_command(tmp_path, capsys):
    p = tmp_path / "t.cplx"
    dump_complex(boundary_of_simplex(3), p)
    assert run(["cm-check", "--complex", str(p)]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["is_cm"] and data["dimension"] == 2


def test_whitehead_command(capsys):
    assert run(["whitehead", "--rank", "2", "--word", "xyXY", "--primitive"]) == 0
    assert capsys.readouterr().out.strip() == "false"
    assert run(["whitehead", "--rank", "2", "--word", "x", "--word", "xy"]) == 0
    assert capsys.readouterr().out.strip() == "true"
    assert run(["whitehead", "--rank", "2", "--word", "xxy", "--minimize"]) == 0
    assert json.loads(capsys.readouterr().out)["length"] == 1


def test_graph_info(tmp_path, capsys):
    p = tmp_path / "g.json"
    dump_graph(theta(), p)
    assert run(["graph-info", "--graph", str(p)]) == 0
    info = json.loads(capsys.readouterr().out)
    assert info["rank"] == 2 and info["nontrees"] == 3 and info["signature"] == "WedgeOfSpheres(0, 2)"


def test_truncation_files_round_trip(tmp_path):
    out = tmp_path / "b3.json"
    assert run(["b3-probe", "--max-len", "1", "--out", str(out)]) == 0
    K = load_complex(tmp_path / "b3.cplx")
    side = json.loads((tmp_path / "b3.vertices.json").read_text())
    assert set(side["vertices"]) == set(K.vertices)
    assert reduced_homology(K).betti(2) == 1
    rep = VerificationReport.from_json(json.loads(out.read_text()))
    assert rep.passed
    assert run(["farey", "--max-len", "2", "--out", str(tmp_path / "f.json")]) == 0
    assert len(load_complex(tmp_path / "f.cplx").vertices) == 8


def test_jobs_do_not_change_output(tmp_path, capsys):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert run(["core-retract", "--max-edges", "4", "--max-labels", "3", "--jobs", "1", "--out", str(a)]) == 0
    out1 = capsys.readouterr().out
    assert run(["core-retract", "--max-edges", "4", "--max-labels", "3", "--jobs", "8", "--out", str(b)]) == 0
    out8 = capsys.readouterr().out
    assert a.read_bytes() == b.read_bytes() and out1 == out8


def test_inflation_seed_echoed(tmp_path):
    out = tmp_path / "i.json"
    assert run(["inflation-cm", "--trials", "10", "--seed", "3", "--out", str(out)]) == 0
    assert json.loads(out.read_text())["params"] == {"trials": 10, "seed": 3}


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["bogus"],
        ["con-x", "--max-edges", "0"],
        ["con-x", "--unknown-flag"],
        ["farey", "--max-len", "9"],
        ["whitehead", "--rank", "2"],
        ["whitehead", "--rank", "2", "--word", "xq"],
        ["homology", "--complex", "/nonexistent/file.cplx"],
    ],
)
def test_usage_errors_exit_two(argv, capsys):
    assert run(argv) == 2


def test_verification_failure_exit_code(monkeypatch, capsys):
    from pbcomplex import cli

    bad = VerificationReport("con-x", {}, instances=1, failures=[{"instance": {}, "expected": 0, "observed": 1}])
    monkeypatch.setitem(cli.GRAPH_SWEEPS, "con-x", lambda *a, **k: bad)
    assert run(["con-x"]) == 1


def test_module_entry_point():
    import subprocess
    import sys

    r = subprocess.run([sys.executable, "-m", "pbcomplex", "whitehead", "--rank", "2", "--word", "xy"], capture_output=True, text=True)
    assert r.returncode == 0 and r.stdout.strip() == "true"
