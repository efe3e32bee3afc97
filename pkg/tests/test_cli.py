import json
import subprocess
import sys

import pytest

from qflag.cli import main, parse_field_spec, parse_polynomial
from qflag.emfield import RealPoly


def run_cli(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


# -- verify -----------------------------------------------------------------

def test_verify_roots_report(capsys):
    code, out, _ = run_cli(["verify", "roots", "--seed", "7"], capsys)
    assert code == 0
    doc = json.loads(out)
    assert doc["spec_version"] == 1
    assert doc["suite"] == "roots"
    assert doc["passed"] is True
    assert all(c["passed"] for c in doc["checks"])


def test_verify_reports_failure_exit_code(capsys):
    # an impossible tolerance forces a check failure and exit code 1
    code, out, _ = run_cli(["verify", "roots", "--seed", "7",
                            "--tol", "roots.counts_and_closure=-1"], capsys)
    assert code == 1
    doc = json.loads(out)
    assert doc["passed"] is False


def test_verify_unknown_suite_is_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["verify", "nonsense"])
    assert exc.value.code == 2
    capsys.readouterr()


def test_verify_deterministic(tmp_path, capsys):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert main(["verify", "em", "--seed", "5", "--out", str(a)]) == 0
    assert main(["verify", "em", "--seed", "5", "--out", str(b)]) == 0
    capsys.readouterr()
    assert a.read_bytes() == b.read_bytes()


# -- lb ------------------------------------------------------------------------

def test_lb_csv_table(capsys):
    code, out, _ = run_cli(["lb", "--ell", "1", "--big-n", "0",
                            "--samples", "10"], capsys)
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "omega,value,residual_scaled"
    assert len(lines) == 11
    assert all("." in cell for cell in lines[1].split(",")[:2])


def test_lb_json_metadata(capsys):
    code, out, _ = run_cli(["lb", "--ell", "1", "--big-n", "0",
                            "--samples", "50", "--format", "json"], capsys)
    assert code == 0
    doc = json.loads(out)
    assert doc["theta"] == 1.0
    assert doc["N"] == 0 and doc["ell"] == "1"
    assert doc["max_scaled_residual"] < 1e-8
    assert len(doc["table"]) == 50


def test_lb_f0_table_contains_equator_zero(capsys):
    # odd sample count puts a grid point at the equator where f0 vanishes
    code, out, _ = run_cli(["lb", "--ell", "0", "--big-n", "0",
                            "--samples", "201", "--format", "json"], capsys)
    assert code == 0
    doc = json.loads(out)
    assert doc["kind"] == "f0"
    values = [abs(row[1]) for row in doc["table"]]
    assert min(values) < 1e-6


def test_lb_half_integer_and_domain_error(capsys):
    code, out, _ = run_cli(["lb", "--ell", "3/2", "--big-n", "0",
                            "--format", "json"], capsys)
    assert code == 0
    assert json.loads(out)["theta_squared"] == 2.5
    code, _, err = run_cli(["lb", "--ell", "1/2", "--big-n", "0"], capsys)
    assert code == 3
    assert "error" in err


def test_lb_rejects_non_half_integer(capsys):
    code, _, err = run_cli(["lb", "--ell", "0.3", "--big-n", "0"], capsys)
    assert code == 3
    assert "half-integer" in err


def test_lb_deterministic(tmp_path, capsys):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    main(["lb", "--ell", "2", "--big-n", "1", "--out", str(a)])
    main(["lb", "--ell", "2", "--big-n", "1", "--out", str(b)])
    capsys.readouterr()
    assert a.read_bytes() == b.read_bytes()


# -- roots ----------------------------------------------------------------------

def test_roots_json(capsys):
    code, out, _ = run_cli(["roots", "3"], capsys)
    assert code == 0
    doc = json.loads(out)
    assert doc["count"] == 18
    assert len(doc["roots"]) == 18
    assert [2, 0, 0] in doc["roots"]


def test_roots_csv_projection(capsys):
    code, out, _ = run_cli(["roots", "1", "--format", "csv"], capsys)
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "c0,c1"
    assert sorted(lines[1:]) == ["-2,0", "2,0"]


def test_roots_domain_error(capsys):
    code, _, err = run_cli(["roots", "0"], capsys)
    assert code == 3
    assert "error" in err


# -- em ---------------------------------------------------------------------------

def test_polynomial_parser():
    assert parse_polynomial("x1") == RealPoly.x(1)
    assert parse_polynomial("x0*x3") == RealPoly.x(0) * RealPoly.x(3)
    two = RealPoly.constant(2)
    assert parse_polynomial("x1^2 - 2") == \
        RealPoly.x(1) * RealPoly.x(1) - two
    assert parse_polynomial("-(x2 + 1) * 3") == \
        -(RealPoly.x(2) + RealPoly.constant(1)) * 3
    assert parse_polynomial("x0**2") == RealPoly.x(0) * RealPoly.x(0)
    assert parse_polynomial("1/2 * x1") == RealPoly.x(1) * 0.5


def test_field_spec():
    psi = parse_field_spec(["A1=x1", "A0=x0*x3"])
    assert psi.components[1] == RealPoly.x(1)
    assert psi.components[0] == RealPoly.x(0) * RealPoly.x(3)
    assert psi.components[2].is_zero()


def test_em_command(capsys):
    code, out, _ = run_cli(["em", "A1=x1"], capsys)
    assert code == 0
    doc = json.loads(out)
    assert doc["scalar"] == [{"coefficient": "-1", "exponents": [0, 0, 0, 0]}]
    assert doc["electric"] == [[], [], []]
    assert doc["magnetic"] == [[], [], []]


def test_em_curl_example(capsys):
    code, out, _ = run_cli(["em", "A1=-x2", "A2=x1"], capsys)
    assert code == 0
    doc = json.loads(out)
    assert doc["magnetic"][2] == [{"coefficient": "2",
                                   "exponents": [0, 0, 0, 0]}]
    assert doc["display"]["scalar"] == "0"


def test_em_bad_spec(capsys):
    code, _, err = run_cli(["em", "A7=x1"], capsys)
    assert code == 3
    code, _, err = run_cli(["em", "A1=x9"], capsys)
    assert code == 3


# -- evolve ------------------------------------------------------------------------

def test_evolve_table(capsys):
    code, out, _ = run_cli(["evolve", "--n", "2", "--split", "1",
                            "--steps", "5", "--t-max", "2.0",
                            "--seed", "3"], capsys)
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0].startswith("t,norm_sq,component0_norm")
    assert len(lines) == 6
    norms = [float(line.split(",")[1]) for line in lines[1:]]
    assert max(norms) - min(norms) < 1e-9


def test_evolve_deterministic(tmp_path, capsys):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    main(["evolve", "--seed", "4", "--steps", "10", "--out", str(a)])
    main(["evolve", "--seed", "4", "--steps", "10", "--out", str(b)])
    capsys.readouterr()
    assert a.read_bytes() == b.read_bytes()


# -- console entry point --------------------------------------------------------------

def test_module_entry_point_subprocess():
    proc = subprocess.run(
        [sys.executable, "-m", "qflag.cli", "roots", "2"],
        capture_output=True, text=True, timeout=120)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["count"] == 8
