import json
import math
import subprocess
import sys

import numpy as np
import pytest

from qfourier import analysis
from qfourier.circuit import gate_census, full_decompose, qasm_gate_lines
from qfourier.cli import main
from qfourier.compiler import assemble, compile_plan, load_plan, square_wave_series


@pytest.fixture
def sq_files(tmp_path):
    series = tmp_path / "sq.json"
    series.write_text(json.dumps(square_wave_series().to_dict()))
    plan = tmp_path / "plan.json"
    assert main(["compile", "--series", str(series), "--out", str(plan)]) == 0
    return series, plan


def test_compile_writes_plan(sq_files, capsys):
    _, plan = sq_files
    loaded = load_plan(plan)
    assert loaded.C == pytest.approx(compile_plan(square_wave_series()).C, rel=1e-15)
    assert [s.n for s in loaded.slots] == [1, 3, 5, 7]


def test_compile_errors(tmp_path):
    empty = tmp_path / "e.json"
    empty.write_text(json.dumps({"terms": []}))
    assert main(["compile", "--series", str(empty), "--out", str(tmp_path / "o.json")]) == 2
    bad = tmp_path / "b.json"
    bad.write_text("{not json")
    assert main(["compile", "--series", str(bad), "--out", str(tmp_path / "o.json")]) == 2
    assert main(["compile", "--series", str(tmp_path / "missing.json"), "--out", "x"]) == 2


def test_pinned_c_infeasible(sq_files, tmp_path, capsys):
    series, _ = sq_files
    rc = main(["compile", "--series", str(series), "--out", str(tmp_path / "p.json"), "--pin-c", "0.5"])
    assert rc == 3
    assert "infeasible" in capsys.readouterr().err


def test_sweep_csv(sq_files, tmp_path):
    _, plan = sq_files
    out = tmp_path / "s.csv"
    assert main(["sweep", "--plan", str(plan), "--xmin", "0", "--xmax", str(math.pi),
                 "--steps", "64", "--out", str(out)]) == 0
    lines = out.read_text().splitlines()
    assert lines[0].split(",") == list(analysis.SWEEP_COLUMNS)
    assert len(lines) == 65
    data = np.array([[float(v) for v in ln.split(",")] for ln in lines[1:]])
    assert np.abs(data[:, 1] - data[:, 4]).max() <= 1e-9
    inproc = analysis.sweep(load_plan(plan), 0.0, math.pi, 64).to_csv()
    assert out.read_text() == inproc


def test_sweep_bad_range(sq_files, tmp_path):
    _, plan = sq_files
    assert main(["sweep", "--plan", str(plan), "--xmin", "1", "--xmax", "1", "--steps", "4"]) == 2
    out = tmp_path / "two.csv"
    assert main(["sweep", "--plan", str(plan), "--xmin", "0", "--xmax", "1", "--steps", "2",
                 "--out", str(out)]) == 0
    assert len(out.read_text().splitlines()) == 3


def test_shots_json(sq_files, capsys):
    _, plan = sq_files
    assert main(["shots", "--plan", str(plan), "--x", "0.7", "--shots", "8192", "--seed", "1"]) == 0
    rec = json.loads(capsys.readouterr().out)
    assert rec["shots"] == 8192 and rec["seed"] == 1
    assert abs(rec["ones"] / 8192 - rec["p_exact"]) <= 0.02


def test_superpose(tmp_path, capsys):
    out = tmp_path / "sp.csv"
    assert main(["superpose", "--x0", "3.4", "--x1", "0.2", "--sweep", "theta", "--steps", "8",
                 "--out", str(out)]) == 0
    assert len(out.read_text().splitlines()) == 9
    assert main(["superpose", "--x0", "3.4", "--x1", "0.2", "--sweep", "x1", "--steps", "1"]) == 2


def test_gatecount(sq_files, capsys):
    _, plan = sq_files
    assert main(["gatecount", "--plan", str(plan)]) == 0
    counts = json.loads(capsys.readouterr().out)
    assert counts == gate_census(assemble(load_plan(plan))).as_dict()
    assert main(["gatecount", "--plan", str(plan), "--decomposed"]) == 0
    assert json.loads(capsys.readouterr().out)["total"] > counts["total"]


def test_export_qasm_single_slot(tmp_path):
    series = tmp_path / "one.json"
    series.write_text(json.dumps({"terms": [{"n": 1, "a": 0.5, "b": 0.3}]}))
    plan = tmp_path / "p.json"
    assert main(["compile", "--series", str(series), "--out", str(plan)]) == 0
    out = tmp_path / "c.qasm"
    assert main(["export-qasm", "--plan", str(plan), "--out", str(out)]) == 0
    text = out.read_text()
    assert text.startswith("OPENQASM 2.0;")
    loaded = load_plan(plan)
    last = loaded.layout.readout
    lines = qasm_gate_lines(text)
    assert sum(1 for ln in lines if ln.startswith("ry") and ln.endswith(f"q[{last}];")) >= 1
    assert f"measure q[{last}]" in text


def test_export_lines_match_census(sq_files, tmp_path):
    _, plan = sq_files
    out = tmp_path / "c.qasm"
    assert main(["export-qasm", "--plan", str(plan), "--out", str(out)]) == 0
    n_lines = len(qasm_gate_lines(out.read_text()))
    p = load_plan(plan)
    from qfourier.compiler import encode_input
    circ = encode_input(p.layout, 0.0).compose(assemble(p))
    assert n_lines == gate_census(full_decompose(circ)).total


def test_entry_point_runs():
    r = subprocess.run([sys.executable, "-m", "qfourier.cli", "--help"], capture_output=True, text=True)
    assert r.returncode == 0 and "compile" in r.stdout
