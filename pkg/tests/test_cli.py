import io
import json
import subprocess
import sys

import pytest

from invambig import __version__
from invambig.cli import main
from invambig.groups import catalog, parse_group
from invambig.iafun import decide_existence


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), stdout=out)
    return code, out.getvalue()


def run_json(*argv):
    code, text = run(*argv)
    return code, json.loads(text)


def test_group_decide():
    code, rep = run_json("group-decide", "Z8")
    assert code == 0 and rep["status"] == "ok" and rep["version"] == __version__
    assert rep["payload"]["exists"] is False and rep["payload"]["non_s_count"] == 6
    assert isinstance(rep["elapsed_ms"], int)


def test_group_decide_oracle():
    code, rep = run_json("group-decide", "A4", "--oracle")
    assert code == 0 and rep["payload"]["exists"] is True and rep["payload"]["oracle_exists"] is True


def test_curve_decide_and_census():
    code, rep = run_json("curve-decide", "E(7;a=1,b=0)")
    assert code == 0 and rep["payload"]["exists"] is False and rep["payload"]["nq"] == 3
    code, rep = run_json("curve-census", "E(5;a=-1,b=0)")
    assert rep["payload"]["total"] == 8 and rep["payload"]["roots"] == 3


def test_verify_bad_witness(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"group": "Z5", "table": [0, 1, 2, 3, 4]}))
    code, rep = run_json("group-verify", "Z5", "--witness", str(bad))
    assert code == 1 and rep["status"] == "fail"
    assert rep["payload"]["worst_input"] == 1


def test_construct_writes_file(tmp_path):
    path = tmp_path / "w.json"
    code, rep = run_json("group-construct", "Z5", "--out", str(path))
    assert code == 0 and rep["payload"]["table"] == [0, 2, 4, 1, 3]
    assert json.loads(path.read_text())["table"] == [0, 2, 4, 1, 3]
    code, rep = run_json("group-verify", "Z5", "--witness", str(path))
    assert code == 0 and rep["payload"]["passed"] is True


def test_construct_without_witness():
    code, rep = run_json("group-construct", "Q8")
    assert code == 0 and rep["payload"]["table"] is None


@pytest.mark.parametrize("spec", [s for s in catalog(400) if decide_existence(parse_group(s)).exists])
def test_round_trip(spec, tmp_path):
    code, text = run("group-construct", spec)
    assert code == 0
    path = tmp_path / "report.json"
    path.write_text(text)  # the full report is accepted as a witness too
    code, rep = run_json("group-verify", spec, "--witness", str(path))
    assert code == 0 and rep["payload"]["passed"], rep


def test_round_trip_through_stdin(monkeypatch):
    _, text = run("group-construct", "Z2xZ6")
    monkeypatch.setattr(sys, "stdin", io.StringIO(text))
    code, rep = run_json("group-verify", "Z2xZ6", "--witness", "-")
    assert code == 0 and rep["payload"]["passed"]


def test_witness_for_other_group_rejected(tmp_path):
    _, text = run("group-construct", "Z5")
    path = tmp_path / "w.json"
    path.write_text(text)
    code, rep = run_json("group-verify", "Z6", "--witness", str(path))
    assert code == 2 and rep["status"] == "error"


@pytest.mark.parametrize(
    "argv",
    [
        ("group-decide", "Z8"),
        ("group-construct", "A4"),
        ("curve-decide", "E(49;a=1,b=0)"),
        ("cont-check", "gl-pingpong", "--n", "3", "--samples", "500", "--seed", "42", "--tol", "1e-6"),
        ("cont", "check", "lattice", "--samples", "300", "--seed", "1"),
        ("registry", "SO(6)"),
    ],
)
def test_identical_invocations_identical_payloads(argv):
    a, b = run_json(*argv)[1], run_json(*argv)[1]
    a.pop("elapsed_ms"), b.pop("elapsed_ms")
    assert json.dumps(a, sort_keys=True) == json.dumps(b, sort_keys=True)


def test_cont_check():
    code, rep = run_json("cont", "check", "gl-pingpong", "--n", "3", "--samples", "1000", "--seed", "42", "--tol", "1e-6")
    assert code == 0 and rep["payload"]["passed"] and rep["payload"]["seed"] == 42
    code, rep = run_json("cont-check", "torus-even", "--k", "6", "--samples", "200")
    assert code == 0 and rep["payload"]["tol"] == 1e-12
    code, rep = run_json("cont-check", "gl-pingpong", "--samples", "200", "--tol", "1e-30")
    assert code == 1 and rep["status"] == "fail"
    code, rep = run_json("cont-check", "inversion-differential", "--n", "3")
    assert code == 0 and rep["payload"]["max_error"] <= 1e-5


def test_registry_listing():
    code, rep = run_json("registry")
    assert code == 0 and len(rep["payload"]["entries"]) >= 20


def test_curve_scan_csv():
    code, text = run("curve-scan", "--a", "1", "--b", "0", "--qmin", "5", "--qmax", "50")
    assert code == 0
    lines = text.splitlines()
    assert lines[0] == "q,a,b,total,roots,nq,exists"
    exists = {int(r.split(",")[0]): r.split(",")[-1] for r in lines[1:]}
    for q in (7, 11, 19, 23, 31, 43, 47):
        assert exists[q] == "false"
    for q in (5, 13, 17, 49):
        assert exists[q] == "true"


def test_curve_scan_examples():
    _, text = run("curve-scan", "--a", "-1", "--b", "0", "--qmin", "5", "--qmax", "199")
    rows = text.splitlines()[1:]
    assert rows and all(r.endswith(",true") for r in rows)


def test_curve_scan_empty_range():
    code, text = run("curve-scan", "--a", "1", "--b", "0", "--qmin", "24", "--qmax", "24")
    assert code == 0 and text == "q,a,b,total,roots,nq,exists\n"


def test_curve_scan_formats(tmp_path):
    _, text = run("curve-scan", "--a", "1", "--b", "0", "--qmax", "13", "--format", "json")
    rows = json.loads(text)
    assert [r["q"] for r in rows] == [5, 7, 11, 13]
    _, text = run("curve-scan", "--a", "1", "--b", "0", "--qmax", "13", "--format", "table")
    assert len(text.splitlines()) == 5
    out = tmp_path / "scan.csv"
    _, text = run("curve-scan", "--a", "1", "--b", "0", "--qmax", "13", "--out", str(out))
    assert out.read_text() == text


def test_curve_scan_bad_range():
    code, rep = run_json("curve-scan", "--a", "1", "--b", "0", "--qmax", str(2**21))
    assert code == 2 and rep["payload"]["error"] == "BadRange"


@pytest.mark.parametrize(
    "argv",
    [
        ("group-decide", "Q9"),
        ("frobnicate", "Z5"),
        ("curve-decide", "E(5;a=0,b=0)"),
        ("curve-decide", "E(9;a=1,b=1)"),
        ("group-verify", "Z5"),
        ("group-verify", "Z5", "--witness", "/nonexistent/witness.json"),
        ("cont-check", "klein-bottle"),
        ("cont-check", "inversion-differential", "--h", "1e-2"),
        ("group-decide", "Z30", "--oracle"),
        ("registry", "Klein"),
    ],
)
def test_errors_exit_2(argv, capsys):
    code, rep = run_json(*argv)
    assert code == 2 and rep["status"] == "error"
    assert "error" in capsys.readouterr().err


def test_console_script_exit_code():
    proc = subprocess.run(
        [sys.executable, "-m", "invambig", "group-decide", "Z8"], capture_output=True, text=True, check=False
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["payload"]["exists"] is False
    proc = subprocess.run([sys.executable, "-m", "invambig", "group-decide", "Q9"], capture_output=True, text=True)
    assert proc.returncode == 2 and proc.stderr
