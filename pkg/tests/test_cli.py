import csv
import io
import json
import subprocess
import sys

import numpy as np
import pytest

from bqst import cli
from bqst.verify import CheckResult


def run_cli(capsys, *argv):
    code = cli.run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def csv_rows(text):
    body = [line for line in text.splitlines() if not line.startswith("#")]
    return list(csv.DictReader(io.StringIO("\n".join(body))))


def comments(text):
    return dict(line[2:].split("=", 1) for line in text.splitlines() if line.startswith("# ") and "=" in line[2:].split(" ")[0])


def test_spectrum_uniform_rows(capsys):
    code, out, _ = run_cli(capsys, "spectrum", "--n", "11", "--x", "1", "--y", "1")
    assert code == 0
    rows = csv_rows(out)
    assert len(rows) == 11
    assert list(rows[0]) == ["m", "q", "omega", "density", "velocity"]
    for row in rows:
        assert float(row["q"]) == pytest.approx(np.pi * float(row["m"]) / 12, abs=1e-11)
    assert out.startswith("# bqst spectrum schema_version=1\n")


def test_spectrum_even_chain_half_integer_labels(capsys):
    _, out, _ = run_cli(capsys, "spectrum", "--n", "6", "--x", "0.5", "--y", "0.8")
    assert [r["m"] for r in csv_rows(out)] == ["-2.5", "-1.5", "-0.5", "0.5", "1.5", "2.5"]


def test_optimize_report(capsys):
    code, out, _ = run_cli(capsys, "optimize", "--n", "51", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["schema_version"] == cli.SCHEMA_VERSION
    assert doc["config"]["n"] == 51
    assert doc["results"]["rows"][0]["u_opt"] == pytest.approx(0.99270, abs=5e-4)


def test_optimize_fixed_y(capsys):
    _, out, _ = run_cli(capsys, "optimize", "--n", "51", "--fix-y", "1")
    row = csv_rows(out)[0]
    assert row["mode"] == "fixed_y" and float(row["fix_y"]) == 1.0
    assert float(row["u_opt"]) == pytest.approx(0.9493, abs=5e-4)


def test_asymptotic_optimize(capsys):
    code, out, _ = run_cli(capsys, "asymptotic", "--optimize")
    assert code == 0
    assert float(csv_rows(out)[0]["u_inf"]) == pytest.approx(0.987153, abs=1e-5)
    meta = comments(out)
    assert float(meta["summary.delay_coeff"]) == pytest.approx(3.239, abs=0.005)


def test_asymptotic_point(capsys):
    _, out, _ = run_cli(capsys, "asymptotic", "--tau", "0.15545", "--sigma", "3.1645", "--format", "json")
    row = json.loads(out)["results"]["rows"][0]
    assert row["u_inf"] == pytest.approx(0.987153, abs=1e-5)


def test_amplitude_summary_and_window(capsys):
    code, out, _ = run_cli(capsys, "amplitude", "--n", "51", "--x", "0.4322", "--y", "0.7338", "--window", "50,70")
    assert code == 0
    meta = comments(out)
    assert float(meta["summary.peak"]) == pytest.approx(0.99270, abs=5e-5)
    rows = csv_rows(out)
    assert float(rows[0]["t"]) == 50.0 and float(rows[-1]["t"]) <= 70.0


def test_fidelity_map_rows(capsys):
    _, out, _ = run_cli(capsys, "fidelity-map", "--n", "21", "--x", "0.2:1:5", "--y", "0.2:1:4")
    rows = csv_rows(out)
    assert len(rows) == 20
    assert [float(r["x"]) for r in rows[:5]] == pytest.approx(np.linspace(0.2, 1.0, 5))
    assert len({r["y"] for r in rows[:5]}) == 1


@pytest.mark.parametrize("flag", ["--perfect", "--uniform"])
def test_dynamics_frames(capsys, flag):
    _, out, _ = run_cli(capsys, "dynamics", "--n", "9", flag, "--t-max", "4", "--dt", "1")
    rows = csv_rows(out)
    assert len(rows) == 5 and len(rows[0]) == 10
    assert float(rows[0]["u_1"]) == 1.0


def test_verify_passes(capsys):
    code, out, err = run_cli(capsys, "verify", "--n-max", "40", "--cases", "5")
    assert code == 0
    assert err.count("PASS") == 7 and "FAIL" not in err


def test_verify_failure_exit_code(capsys, monkeypatch):
    monkeypatch.setattr(cli, "run_checks", lambda **kw: [CheckResult("forced", 1.0, 1e-9)])
    code, _, err = run_cli(capsys, "verify")
    assert code == 2
    assert "FAIL forced" in err


@pytest.mark.parametrize(
    "argv",
    [
        ["spectrum", "--n", "11", "--x", "1.5", "--y", "1"],
        ["spectrum", "--n", "11", "--x", "1", "--y", "1", "--bogus"],
        ["frobnicate"],
        [],
        ["asymptotic"],
        ["asymptotic", "--optimize", "--tau", "0.1"],
        ["dynamics", "--n", "9", "--t-max", "3"],
        ["amplitude", "--n", "11", "--x", "0.5", "--y", "0.5", "--window", "5,5"],
        ["fidelity-map", "--n", "11", "--x", "0.2:1", "--y", "0.2:1:3"],
        ["optimize", "--n", "11", "--fix-y", "0.5", "--constrain-Y"],
    ],
)
def test_errors_exit_one(capsys, argv):
    code, out, err = run_cli(capsys, *argv)
    assert code == 1
    assert out == "" and err


def test_domain_error_names_field(capsys):
    _, _, err = run_cli(capsys, "spectrum", "--n", "11", "--x", "1.5", "--y", "1")
    assert "x:" in err


def test_output_file_and_determinism(tmp_path, capsys):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    args = ["fidelity-map", "--n", "31", "--x", "0.1:1:7", "--y", "0.1:1:7", "--format", "json"]
    assert cli.run(args + ["-o", str(a), "--threads", "1"]) == 0
    assert cli.run(args + ["-o", str(b), "--threads", "6"]) == 0
    assert a.read_bytes() == b.read_bytes()
    assert capsys.readouterr().out == ""


def test_float_formatting():
    assert cli.fmt(0.1 + 0.2) == 0.3
    assert cli.fmt(np.float64(1.0 / 3.0)) == 0.333333333333
    assert cli.fmt(np.int64(7)) == 7 and isinstance(cli.fmt(np.int64(7)), int)
    assert cli.fmt(np.bool_(True)) is True


def test_console_script_subprocess_is_byte_identical():
    cmd = [sys.executable, "-m", "bqst.cli", "spectrum", "--n", "25", "--x", "0.3", "--y", "0.6"]
    first = subprocess.run(cmd, capture_output=True, check=True).stdout
    second = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert first == second and first.count(b"\n") == 25 + 7  # 6 metadata lines + header
