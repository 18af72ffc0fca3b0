"""End-to-end CLI behavior: configs, verbs, exit codes, determinism."""

import json
import math

import numpy as np
import pytest

from sweepsense import cli
from sweepsense.core import FrequencyPlan, NoiseConfig, Scene, Target
from sweepsense.dispersion import LinearSineDispersion
from sweepsense.fingerprint import PositionGrid
from sweepsense.synth import AntennaModel


def base_config(**overrides):
    cfg = {
        "plan": {"f_min_hz": 60e9, "f_max_hz": 66e9, "n_points": 32},
        "dispersion": {"kind": "linear_sine", "theta_max_deg": 60.0},
        "antenna": {"length_m": 0.012, "two_way": True},
        "scene": {
            "targets": [{"x_m": 0.0, "y_m": 0.0, "z_m": 3.0, "alpha_re": 1.0, "alpha_im": 0.0}],
            "snr_db": "noiseless",
            "seed": 7,
        },
        "grid": {
            "x_min_m": -0.25, "x_max_m": 0.25, "nx": 3,
            "y_min_m": -0.25, "y_max_m": 0.25, "ny": 3,
            "z_min_m": 2.75, "z_max_m": 3.25, "nz": 3,
        },
        "architectures": [
            {
                "name": "FaA-Single", "rf_chains": 1, "physical_size_m": 0.12,
                "bandwidth_hz": 6e9, "n_samples": 128, "aperture_kind": "virtual",
                "f_ref_hz": 63e9, "power_mw": 850.0, "cost_usd": 55.0,
                "fov_deg": 60.0, "eta_reference": 926.0,
            },
            {
                "name": "FaA-Dual", "rf_chains": 2, "physical_size_m": 0.12,
                "bandwidth_hz": 6e9, "n_samples": 64, "aperture_kind": "virtual",
                "f_ref_hz": 63e9, "power_mw": 1400.0, "cost_usd": 90.0,
                "fov_deg": 60.0, "eta_reference": 231.0,
            },
            {
                "name": "1T3R-MIMO", "rf_chains": 4, "physical_size_m": 0.12,
                "bandwidth_hz": 6e9, "n_samples": 4, "aperture_kind": "physical",
                "f_ref_hz": 60e9, "power_mw": 1600.0, "cost_usd": 100.0,
                "fov_deg": 60.0, "eta_reference": 58.0,
            },
        ],
    }
    cfg.update(overrides)
    return cfg


@pytest.fixture
def config_path(tmp_path):
    def write(cfg, name="config.json"):
        path = tmp_path / name
        path.write_text(json.dumps(cfg))
        return str(path)

    return write


class TestSimulate:
    def test_writes_expected_rows(self, tmp_path, config_path):
        out = tmp_path / "meas.csv"
        rc = cli.main(["simulate", "--config", config_path(base_config()), "--out", str(out)])
        assert rc == 0
        lines = out.read_text().splitlines()
        assert lines[0] == "m,f_hz,theta_deg,sx_re,sx_im,sy_re,sy_im"
        assert len(lines) == 1 + 32

    def test_full_plan_row_count(self, tmp_path, config_path):
        cfg = base_config()
        cfg["plan"]["n_points"] = 128
        out = tmp_path / "meas.csv"
        assert cli.main(["simulate", "--config", config_path(cfg), "--out", str(out)]) == 0
        assert len(out.read_text().splitlines()) == 1 + 128

    def test_empty_scene_noiseless_all_zero(self, tmp_path, config_path):
        cfg = base_config()
        cfg["scene"]["targets"] = []
        out = tmp_path / "meas.csv"
        assert cli.main(["simulate", "--config", config_path(cfg), "--out", str(out)]) == 0
        for line in out.read_text().splitlines()[1:]:
            cells = line.split(",")
            assert all(float(v) == 0.0 for v in cells[3:])

    def test_byte_identical_reruns_with_noise(self, tmp_path, config_path):
        cfg = base_config()
        cfg["scene"]["snr_db"] = 5.0
        path = config_path(cfg)
        out1, out2 = tmp_path / "a.csv", tmp_path / "b.csv"
        assert cli.main(["simulate", "--config", path, "--out", str(out1)]) == 0
        assert cli.main(["simulate", "--config", path, "--out", str(out2)]) == 0
        assert out1.read_bytes() == out2.read_bytes()

    def test_seed_override_changes_noise(self, tmp_path, config_path):
        cfg = base_config()
        cfg["scene"]["snr_db"] = 5.0
        path = config_path(cfg)
        out1, out2 = tmp_path / "a.csv", tmp_path / "b.csv"
        cli.main(["simulate", "--config", path, "--out", str(out1)])
        cli.main(["simulate", "--config", path, "--out", str(out2), "--seed", "123"])
        assert out1.read_bytes() != out2.read_bytes()

    def test_unknown_key_exits_2(self, tmp_path, config_path, capsys):
        cfg = base_config()
        cfg["plan"]["bogus"] = 1
        rc = cli.main(["simulate", "--config", config_path(cfg), "--out", str(tmp_path / "x.csv")])
        assert rc == 2
        assert "bogus" in capsys.readouterr().err

    def test_unknown_section_exits_2(self, tmp_path, config_path):
        cfg = base_config()
        cfg["extra_section"] = {}
        rc = cli.main(["simulate", "--config", config_path(cfg), "--out", str(tmp_path / "x.csv")])
        assert rc == 2

    def test_missing_section_exits_2(self, tmp_path, config_path):
        cfg = base_config()
        del cfg["scene"]
        rc = cli.main(["simulate", "--config", config_path(cfg), "--out", str(tmp_path / "x.csv")])
        assert rc == 2

    def test_invalid_json_exits_2(self, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text("{not json")
        rc = cli.main(["simulate", "--config", str(path), "--out", str(tmp_path / "x.csv")])
        assert rc == 2


class TestLocalizeFlow:
    def test_on_grid_target_recovered(self, tmp_path, config_path, capsys):
        path = config_path(base_config())
        meas = tmp_path / "meas.csv"
        assert cli.main(["simulate", "--config", path, "--out", str(meas)]) == 0
        out = tmp_path / "loc.json"
        rc = cli.main(
            ["localize", "--config", path, "--measurement", str(meas), "--out", str(out)]
        )
        assert rc == 0
        payload = json.loads(out.read_text())
        assert payload["estimate"] == pytest.approx([0.0, 0.0, 3.0], abs=1e-12)
        assert payload["score"] == pytest.approx(1.0, abs=1e-9)
        assert payload["dictionary_size"] == 27
        assert payload["grid_index"] == 13  # center of the 3x3x3 grid

    def test_exported_dictionary_reused(self, tmp_path, config_path):
        path = config_path(base_config())
        meas = tmp_path / "meas.csv"
        dict_csv = tmp_path / "dict.csv"
        cli.main(["simulate", "--config", path, "--out", str(meas)])
        assert cli.main(["dict", "--config", path, "--out", str(dict_csv)]) == 0
        out1, out2 = tmp_path / "a.json", tmp_path / "b.json"
        cli.main(["localize", "--config", path, "--measurement", str(meas), "--out", str(out1)])
        cli.main(
            [
                "localize", "--config", path, "--measurement", str(meas),
                "--dict", str(dict_csv), "--out", str(out2),
            ]
        )
        a, b = json.loads(out1.read_text()), json.loads(out2.read_text())
        assert a["grid_index"] == b["grid_index"]
        assert a["estimate"] == pytest.approx(b["estimate"], abs=1e-9)

    def test_m_mismatch_exits_2(self, tmp_path, config_path, capsys):
        path = config_path(base_config())
        meas = tmp_path / "meas.csv"
        cli.main(["simulate", "--config", path, "--out", str(meas)])
        smaller = base_config()
        smaller["plan"]["n_points"] = 16
        rc = cli.main(
            [
                "localize", "--config", config_path(smaller, "small.json"),
                "--measurement", str(meas), "--out", str(tmp_path / "x.json"),
            ]
        )
        assert rc == 2

    def test_malformed_measurement_names_line(self, tmp_path, config_path, capsys):
        path = config_path(base_config())
        meas = tmp_path / "meas.csv"
        cli.main(["simulate", "--config", path, "--out", str(meas)])
        lines = meas.read_text().splitlines()
        lines[5] = "oops"
        meas.write_text("\n".join(lines) + "\n")
        rc = cli.main(
            ["localize", "--config", path, "--measurement", str(meas),
             "--out", str(tmp_path / "x.json")]
        )
        assert rc == 2
        assert "line 6" in capsys.readouterr().err

    def test_degenerate_measurement_exits_3(self, tmp_path, config_path):
        cfg = base_config()
        cfg["scene"]["targets"] = []
        path = config_path(cfg)
        meas = tmp_path / "zeros.csv"
        cli.main(["simulate", "--config", path, "--out", str(meas)])
        rc = cli.main(
            ["localize", "--config", path, "--measurement", str(meas),
             "--out", str(tmp_path / "x.json")]
        )
        assert rc == 3


class TestProbe:
    def test_range_probe_mechanics(self, tmp_path, config_path, capsys):
        path = config_path(base_config())
        out = tmp_path / "probe.csv"
        rc = cli.main(
            ["probe", "--config", path, "--axis", "range", "--span", "0.2",
             "--steps", "41", "--out", str(out)]
        )
        assert rc == 0
        summary = json.loads(capsys.readouterr().out)
        assert summary["offset_unit"] == "m"
        lines = out.read_text().splitlines()
        assert lines[0] == "offset,similarity"
        assert len(lines) == 42
        offsets = [float(l.split(",")[0]) for l in lines[1:]]
        sims = [float(l.split(",")[1]) for l in lines[1:]]
        mid = offsets.index(min(offsets, key=abs))
        assert sims[mid] == pytest.approx(1.0, abs=1e-12)

    def test_azimuth_probe_reports_degrees_and_radians(self, tmp_path, config_path, capsys):
        path = config_path(base_config())
        out = tmp_path / "probe.csv"
        rc = cli.main(
            ["probe", "--config", path, "--axis", "azimuth", "--span", "30.0",
             "--steps", "121", "--out", str(out)]
        )
        assert rc == 0
        summary = json.loads(capsys.readouterr().out)
        assert summary["offset_unit"] == "deg"
        if summary["half_power_width"] is not None:
            assert summary["half_power_width_rad"] == pytest.approx(
                math.radians(summary["half_power_width"]), rel=1e-9
            )
        offsets = [float(l.split(",")[0]) for l in out.read_text().splitlines()[1:]]
        assert max(offsets) == pytest.approx(30.0, rel=1e-9)

    def test_bad_axis_exits_2(self, tmp_path, config_path):
        rc = cli.main(
            ["probe", "--config", config_path(base_config()), "--axis", "spiral",
             "--span", "1.0", "--out", str(tmp_path / "x.csv")]
        )
        assert rc == 2


class TestCompare:
    def test_report_rows_and_echo(self, tmp_path, config_path, capsys):
        out = tmp_path / "report.json"
        rc = cli.main(["compare", "--config", config_path(base_config()), "--out", str(out)])
        assert rc == 0
        payload = json.loads(out.read_text())
        names = [r["name"] for r in payload["rows"]]
        assert names == ["FaA-Single", "FaA-Dual", "1T3R-MIMO"]
        assert payload["rows"][0]["eta_reference"] == 926.0
        assert payload["rows"][0]["eta_computed"] == pytest.approx(533.3333, rel=1e-6)
        assert payload["r_query_m"] == 3.0
        assert all(r["cell_volume_m3"] > 0 for r in payload["rows"])
        assert "FaA-Single" in capsys.readouterr().out

    def test_missing_architectures_exits_2(self, tmp_path, config_path):
        cfg = base_config()
        del cfg["architectures"]
        rc = cli.main(["compare", "--config", config_path(cfg), "--out", str(tmp_path / "x.json")])
        assert rc == 2


class TestSweep:
    def test_csv_shape_and_noiseless_zero(self, tmp_path, config_path):
        cfg = base_config()
        out = tmp_path / "sweep.csv"
        rc = cli.main(
            ["sweep", "--config", config_path(cfg), "--snr", "noiseless,20",
             "--trials", "3", "--out", str(out)]
        )
        assert rc == 0
        lines = out.read_text().splitlines()
        assert lines[0] == "snr_db,rmse_m,trials"
        assert len(lines) == 3
        noiseless_row = lines[1].split(",")
        assert noiseless_row[0] == "noiseless"
        assert float(noiseless_row[1]) == 0.0
        assert noiseless_row[2] == "3"

    def test_first_half_errors_stable_when_doubling_trials(self):
        plan = FrequencyPlan(60e9, 66e9, 32)
        model = LinearSineDispersion.for_plan(plan)
        antenna = AntennaModel(length=0.012)
        scene = Scene(
            targets=(Target((0.0, 0.0, 3.0)),), noise=NoiseConfig(snr_db=None, seed=5)
        )
        grid = PositionGrid((-0.25, 0.25), (-0.25, 0.25), (2.75, 3.25), 3, 3, 3)
        short = cli.run_sweep(plan, model, antenna, scene, grid, [0.0], trials=4)
        long = cli.run_sweep(plan, model, antenna, scene, grid, [0.0], trials=8)
        assert long[0].errors[:4] == short[0].errors

    def test_worker_count_does_not_change_results(self):
        plan = FrequencyPlan(60e9, 66e9, 32)
        model = LinearSineDispersion.for_plan(plan)
        antenna = AntennaModel(length=0.012)
        scene = Scene(
            targets=(Target((0.0, 0.0, 3.0)),), noise=NoiseConfig(snr_db=None, seed=5)
        )
        grid = PositionGrid((-0.25, 0.25), (-0.25, 0.25), (2.75, 3.25), 3, 3, 3)
        serial = cli.run_sweep(plan, model, antenna, scene, grid, [-5.0, 10.0], trials=6)
        threaded = cli.run_sweep(
            plan, model, antenna, scene, grid, [-5.0, 10.0], trials=6, workers=4
        )
        for a, b in zip(serial, threaded):
            assert a.errors == b.errors
            assert a.rmse == b.rmse

    def test_sweep_without_targets_exits_2(self, tmp_path, config_path):
        cfg = base_config()
        cfg["scene"]["targets"] = []
        rc = cli.main(
            ["sweep", "--config", config_path(cfg), "--snr", "0",
             "--trials", "2", "--out", str(tmp_path / "x.csv")]
        )
        assert rc == 2


class TestLookupDispersionConfig:
    def test_lookup_table_via_config(self, tmp_path, config_path):
        table = tmp_path / "disp.csv"
        table.write_text("frequency_hz,angle_deg\n60e9,-60\n63e9,0\n66e9,60\n")
        cfg = base_config()
        cfg["dispersion"] = {"kind": "lookup_table", "table_path": "disp.csv"}
        out = tmp_path / "meas.csv"
        rc = cli.main(["simulate", "--config", config_path(cfg), "--out", str(out)])
        assert rc == 0

    def test_missing_table_exits_2(self, tmp_path, config_path):
        cfg = base_config()
        cfg["dispersion"] = {"kind": "lookup_table", "table_path": "nope.csv"}
        rc = cli.main(
            ["simulate", "--config", config_path(cfg), "--out", str(tmp_path / "x.csv")]
        )
        assert rc == 2
