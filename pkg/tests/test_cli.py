import json

import pytest

from spincas.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_gamma_command(capsys):
    code, out, err = run(capsys, "gamma", "--r", "2")
    assert code == 0
    payload = json.loads(out)
    assert payload["ok"] is True
    assert payload["summary"]["fail"] == 0
    assert "wall time" in err


def test_oracle_command(capsys):
    code, out, _ = run(capsys, "oracle", "--r", "2")
    assert code == 0
    payload = json.loads(out)
    assert all(record["ok"] for record in payload["records"])


def test_invariants_command(capsys):
    code, out, _ = run(capsys, "invariants", "--r", "2")
    assert code == 0
    assert json.loads(out)["ok"] is True


def test_spectra_tables_csv(capsys):
    code, out, _ = run(capsys, "spectra", "--r", "4", "--format", "csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "sector,k,eigenvalue,multiplicity"
    assert "pp,0,-7/12,1" in lines
    assert "pm,1,-7/24,8" in lines
    assert "rho,4,1/12,70" in lines
    # sorted by (sector, k)
    assert lines[1:] == sorted(lines[1:], key=lambda s: (s.split(",")[0], int(s.split(",")[1])))


def test_spectra_tables_known_rows(capsys):
    _, out, _ = run(capsys, "spectra", "--r", "5", "--tables")
    assert "rho,5,5/64,252" in out
    _, out, _ = run(capsys, "spectra", "--r", "2", "--tables")
    assert "pm,1,0,4" in out


def test_colour_command(capsys):
    code, out, _ = run(
        capsys, "colour", "--r", "2", "--L", "2", "--sector", "pp", "--closure", "full"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["total"] == "3/16"
    assert payload["cross_check"] is True


def test_colour_partial(capsys):
    code, out, _ = run(
        capsys, "colour", "--r", "2", "--L", "2", "--sector", "pp", "--closure", "partial"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["total"] == "3/32"
    assert payload["is_identity_multiple"] is True


def test_ybe_single_point(capsys):
    code, out, _ = run(capsys, "ybe", "--r", "2", "--u", "2/3", "--v", "5/7")
    assert code == 0
    payload = json.loads(out)
    assert payload["points"] == [{"u": "2/3", "v": "5/7", "pass": True}]
    assert payload["failures"] == []


def test_ybe_full_mode(capsys):
    code, out, _ = run(
        capsys, "ybe", "--r", "2", "--mode", "full", "--u", "1/3", "--v", "1/7"
    )
    assert code == 0
    assert json.loads(out)["failures"] == []


def test_ybe_missing_v_is_usage_error(capsys):
    code, _, err = run(capsys, "ybe", "--r", "2", "--u", "2/3")
    assert code == 2
    assert "usage error" in err


def test_unknown_command_is_usage_error(capsys):
    code, _, _ = run(capsys, "definitely-not-a-command")
    assert code == 2


def test_bad_rank_is_usage_error(capsys):
    code, _, err = run(capsys, "report", "--r", "9")
    assert code == 2
    assert "usage error" in err


def test_io_error_exit_code(capsys, tmp_path):
    missing_dir = tmp_path / "does" / "not" / "exist" / "report.json"
    code, _, err = run(capsys, "gamma", "--r", "2", "--out", str(missing_dir))
    assert code == 3
    assert "i/o error" in err


def test_out_file_and_env_dir(capsys, tmp_path, monkeypatch):
    target = tmp_path / "direct.json"
    code, out, _ = run(capsys, "gamma", "--r", "2", "--out", str(target))
    assert code == 0
    assert out == ""
    assert json.loads(target.read_text())["ok"] is True

    monkeypatch.setenv("SPINCAS_OUT", str(tmp_path))
    code, out, _ = run(capsys, "spectra", "--r", "2", "--format", "csv")
    assert code == 0
    assert (tmp_path / "spectra-r2.csv").read_text().startswith("sector,k,")


def test_report_determinism(capsys):
    """Identical invocations produce byte-identical artifacts."""
    _, first, _ = run(capsys, "report", "--r", "2", "--suites", "gamma,spectra")
    _, second, _ = run(capsys, "report", "--r", "2", "--suites", "gamma,spectra")
    assert first == second
    assert "wall time" not in first


def test_report_csv_format(capsys):
    code, out, _ = run(
        capsys, "report", "--r", "2", "--suites", "gamma", "--format", "csv"
    )
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "suite,r,record,check,status,witness"
    assert all(line.startswith("gamma,2,") for line in lines[1:])


def test_jobs_flag_accepted(capsys):
    code, _, _ = run(capsys, "gamma", "--r", "2", "--jobs", "4")
    assert code == 0


def test_empty_suites_report(capsys):
    code, out, _ = run(capsys, "report", "--r", "2", "--suites", "")
    assert code == 0
    payload = json.loads(out)
    assert payload["records"] == []
    assert payload["summary"]["pass"] == 0
