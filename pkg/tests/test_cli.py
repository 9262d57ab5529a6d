import json
import math

import pytest

from lcmoments.cli import OutputRecord, main


def _run(capsys, argv):
    code = main(argv)
    out = capsys.readouterr().out.strip()
    return code, json.loads(out) if out else None


def test_output_record_round_trip():
    record = OutputRecord(
        command="scan",
        inputs={"p": 4.0, "grid": 100},
        outputs={"argopt_t": 0.0, "opt_value": 2.354},
        tolerances={"value": 1e-8},
        status="ok",
    )
    assert OutputRecord.from_json(record.to_json()) == record


def test_p0_command(capsys):
    code, payload = _run(capsys, ["p0"])
    assert code == 0
    assert 2.9414 < payload["outputs"]["p0"] < 2.9415
    assert abs(payload["outputs"]["residual"]) < 1e-12


def test_constant_commands(capsys):
    code, payload = _run(capsys, ["constant", "--which", "lp-l2-lower", "--p", "1"])
    assert code == 0
    assert payload["outputs"]["value"] == pytest.approx(1.0 / math.sqrt(2.0), rel=1e-12)

    code, payload = _run(capsys, ["constant", "--which", "lp-lq", "--p", "1", "--q", "2"])
    assert code == 0
    assert payload["outputs"]["value"] == pytest.approx(1.0 / math.sqrt(2.0), rel=1e-12)


def test_constant_domain_error_exit_code(capsys):
    assert main(["constant", "--which", "lp-l1-lower", "--p", "3"]) == 2


def test_scan_command_with_csv(tmp_path, capsys):
    path = tmp_path / "profile.csv"
    code, payload = _run(capsys, ["scan", "--p", "4", "--grid", "200", "--csv", str(path)])
    assert code == 0
    assert payload["outputs"]["argopt_t"] == 0.0
    assert payload["outputs"]["opt_value"] == pytest.approx(0.5 * math.e * 9.0**0.25, abs=1e-8)
    lines = path.read_text().strip().splitlines()
    assert lines[0] == "t,value"
    assert len(lines) == 201


def test_moment_command_normalized(capsys):
    code, payload = _run(capsys, ["moment", "--p", "2", "--t", "0.5", "--normalized"])
    assert code == 0
    scale = payload["outputs"]["scale"]
    assert payload["outputs"]["moment"] == pytest.approx(1.25 / scale**2, rel=1e-10)


def test_slice_requires_n_at_least_two_for_volume(capsys):
    assert main(["slice", "--weights", "1,-1", "--volume"]) == 2


def test_slice_strict_validation(capsys):
    # unnormalised weights fail without --project
    assert main(["slice", "--weights", "1,0,-1", "--volume"]) == 2


def test_slice_with_projection(capsys):
    code, payload = _run(capsys, ["slice", "--weights", "1,0,-1", "--project", "--volume"])
    assert code == 0
    assert payload["outputs"]["density_at_zero"] == pytest.approx(1.0 / math.sqrt(2.0), abs=1e-8)
    assert payload["outputs"]["volume"] == pytest.approx(math.sqrt(1.5), abs=1e-8)


def test_slice_json_weights(capsys):
    code, payload = _run(capsys, ["slice", "--weights", "[0.7071067811865476, -0.7071067811865476]"])
    assert code == 0
    assert payload["outputs"]["density_at_zero"] == pytest.approx(1.0 / math.sqrt(2.0), abs=1e-8)


def test_crossings_command(capsys):
    code, payload = _run(capsys, ["crossings", "--t", "0.5"])
    assert code == 0
    assert payload["outputs"]["report_upper"]["pattern"] == "+-+-"
    assert len(payload["outputs"]["report_lower"]["crossings"]) == 3


def test_max_section_command(capsys):
    code, payload = _run(capsys, ["max-section", "--n", "2", "--restarts", "20", "--seed", "4"])
    assert code == 0
    assert payload["outputs"]["value"] == pytest.approx(1.0 / math.sqrt(2.0), abs=1e-6)


def test_env_var_supplies_seed(capsys, monkeypatch):
    monkeypatch.setenv("LCMOMENTS_SEED", "777")
    code, payload = _run(capsys, ["max-section", "--n", "2", "--restarts", "20"])
    assert code == 0
    assert payload["inputs"]["seed"] == 777


def test_verify_constants_suite(capsys):
    code, payload = _run(capsys, ["verify", "--suite", "constants"])
    assert code == 0
    assert all(record["status"] == "ok" for record in payload)


def test_tol_override(capsys):
    code, payload = _run(capsys, ["--tol", "1e-9", "p0"])
    assert code == 0
    assert 2.9414 < payload["outputs"]["p0"] < 2.9415


def test_config_file_overrides(tmp_path, capsys):
    cfg = tmp_path / "quad.cfg"
    cfg.write_text("rel_tol = 1e-9\nmax_refinements = 150\n")
    code, payload = _run(capsys, ["--config", str(cfg), "p0"])
    assert code == 0

    bad = tmp_path / "bad.cfg"
    bad.write_text("unknown_key = 1\n")
    assert main(["--config", str(bad), "p0"]) == 2


def test_unknown_subcommand_exit_code(capsys):
    assert main(["no-such-command"]) == 2
