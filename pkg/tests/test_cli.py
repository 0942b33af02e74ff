import json

import pytest

from rigs.cli import main
from rigs.harness import SweepConfig, read_csv
from rigs.model import WeightSpec, build_weights, regime

SPEC = WeightSpec(n=300, kind="uniform", c=2.0, m=300)


@pytest.fixture
def spec_path(tmp_path):
    path = tmp_path / "spec.json"
    path.write_text(json.dumps(SPEC.to_json()))
    return str(path)


@pytest.fixture
def sample_path(tmp_path, spec_path):
    out = tmp_path / "sample.json"
    assert main(["sample", "--spec", spec_path, "--seed", "5",
                 "--out", str(out)]) == 0
    return str(out)


def test_sample_writes_valid_json(sample_path):
    obj = json.loads(open(sample_path).read())
    assert obj["n"] == 300 and obj["seed"] == 5
    assert len(obj["attrs"]) == 300


def test_components_output(sample_path, capsys):
    assert main(["components", "--in", sample_path]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["n"] == 300
    assert sum(out["sizes_topk"]) <= 300
    assert out["largest"] >= out["second"]


def test_discover_output(sample_path, spec_path, capsys):
    assert main(["discover", "--in", sample_path, "--spec", spec_path,
                 "--start", "0", "--max-steps", "3"]) == 0
    out = capsys.readouterr().out
    assert "component_size=" in out and "terminated_at=" in out


def test_extinction_output(spec_path, capsys):
    assert main(["extinction", "--spec", spec_path]) == 0
    out = json.loads(capsys.readouterr().out)
    assert 0.0 < out["rho"] < 1.0 and out["converged"]


def test_gw_sim_output(spec_path, capsys):
    assert main(["gw-sim", "--spec", spec_path, "--runs", "500",
                 "--seed", "1"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["runs"] == 500
    assert out["frequency"] == out["extinct"] / 500


def test_sweep_and_verify(tmp_path, capsys):
    cfg = SweepConfig(n=400, m=400, c_min=0.5, c_max=2.0, points=4, trials=4,
                      master_seed=3)
    cfg_path = tmp_path / "cfg.json"
    cfg_path.write_text(json.dumps(cfg.to_json()))
    csv_path = tmp_path / "out.csv"
    report_path = tmp_path / "report.json"
    assert main(["sweep", "--config", str(cfg_path), "--out-csv",
                 str(csv_path), "--out-report", str(report_path)]) == 0
    records = read_csv(csv_path)
    assert len(records) == 16
    report = json.loads(report_path.read_text())
    assert set(report) == {"config", "hypotheses", "verification", "gap_scan"}
    assert report["gap_scan"]["complete"]

    hyp_path = tmp_path / "hyp.json"
    hyp_path.write_text(json.dumps(report["hypotheses"]))
    capsys.readouterr()
    code = main(["verify", "--csv", str(csv_path),
                 "--hypotheses", str(hyp_path)])
    out = json.loads(capsys.readouterr().out)
    assert code == (0 if out["passed"] else 1)


def test_sweep_timing_changes_csv(tmp_path):
    cfg = SweepConfig(n=400, m=400, c_min=2.0, c_max=2.0, points=1, trials=2)
    cfg_path = tmp_path / "cfg.json"
    cfg_path.write_text(json.dumps(cfg.to_json()))
    plain, timed = tmp_path / "plain.csv", tmp_path / "timed.csv"
    main(["sweep", "--config", str(cfg_path), "--out-csv", str(plain),
          "--out-report", str(tmp_path / "r1.json")])
    main(["sweep", "--config", str(cfg_path), "--out-csv", str(timed),
          "--out-report", str(tmp_path / "r2.json"), "--timing"])
    assert all(r.wall_time_ms == 0 for r in read_csv(plain))


def test_verify_failure_exit_code(tmp_path, capsys):
    csv_path = tmp_path / "bad.csv"
    csv_path.write_text(
        "c,n,m,trial,seed,L1,L2,rho_pred,giant_frac_pred,wall_ms\n"
        "0.5,10000,10000,0,1,9999,9000,1.0,0.0,0\n"
    )
    hyp = regime(build_weights(WeightSpec(n=10**4, kind="uniform", c=0.5,
                                          m=10**4)))
    hyp_path = tmp_path / "hyp.json"
    hyp_path.write_text(json.dumps(hyp.to_json()))
    assert main(["verify", "--csv", str(csv_path),
                 "--hypotheses", str(hyp_path)]) == 1


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as exc:
        main(["sample", "--spec"])
    assert exc.value.code == 2


def test_unknown_command_exit_code():
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2
