import numpy as np
import pytest

from echodyn.cli import main
from echodyn.experiments import ExperimentSpec, parse_config


def read_csv(path):
    meta = {}
    rows = []
    header = None
    with open(path) as f:
        for line in f:
            if line.startswith("#"):
                if "=" in line:
                    key, value = line[1:].split("=", 1)
                    meta[key.strip()] = value.strip()
                continue
            if header is None:
                header = line.strip().split(",")
                continue
            rows.append([float(tok) for tok in line.strip().split(",")])
    return meta, header, np.array(rows)


class TestConfig:
    def test_parse_config(self, tmp_path):
        cfg = tmp_path / "run.cfg"
        cfg.write_text("# comment\nregime = regular\ndelta=0.05\n\ntmax = 20 # inline\n")
        assert parse_config(cfg) == {"regime": "regular", "delta": "0.05", "tmax": "20"}

    def test_parse_error_carries_line_number(self, tmp_path):
        cfg = tmp_path / "bad.cfg"
        cfg.write_text("regime = regular\nnonsense line\n")
        with pytest.raises(ValueError, match=":2:"):
            parse_config(cfg)

    def test_presets(self):
        spec = ExperimentSpec.from_config(overrides={"regime": "regular"})
        assert spec.Gprime == 0.0 and spec.nboson == 64
        spec = ExperimentSpec.from_config(overrides={"regime": "chaotic"})
        assert spec.Gprime == 1.0 and spec.nboson == 192

    def test_overrides_beat_file(self, tmp_path):
        cfg = tmp_path / "run.cfg"
        cfg.write_text("regime = regular\ndelta = 0.05\n")
        spec = ExperimentSpec.from_config(cfg, {"delta": 0.2})
        assert spec.delta == 0.2 and spec.regime == "regular"

    def test_unknown_key_rejected(self, tmp_path):
        cfg = tmp_path / "run.cfg"
        cfg.write_text("regime = regular\nbogus = 1\n")
        with pytest.raises(ValueError, match="bogus"):
            ExperimentSpec.from_config(cfg)


class TestCorrelationsCommand:
    def test_degenerate_grid_single_point(self, tmp_path):
        out = tmp_path / "c.csv"
        rc = main(["correlations", "--regime", "regular", "--tmax", "0.25",
                   "--dt", "0.25", "--fit-tmin", "0", "--fit-tmax", "1",
                   "--out", str(out)])
        assert rc == 0
        _, header, rows = read_csv(out)
        assert rows[0][header.index("C")] == 0.0
        assert rows[0][header.index("D")] == 0.0

    def test_metadata_carries_fits(self, tmp_path):
        out = tmp_path / "c.csv"
        assert main(["correlations", "--regime", "regular", "--tmax", "20",
                     "--out", str(out)]) == 0
        meta, header, rows = read_csv(out)
        assert "sigma" in meta and "cbar" in meta
        assert float(meta["cbar"]) > 0
        t = rows[:, header.index("t")]
        C = rows[:, header.index("C")]
        ratio = rows[:, header.index("C_over_2t")]
        mask = t > 0
        assert np.allclose(ratio[mask], C[mask] / (2 * t[mask]))

    def test_byte_identical_rerun(self, tmp_path):
        a, b = tmp_path / "a.csv", tmp_path / "b.csv"
        for out in (a, b):
            assert main(["correlations", "--regime", "regular", "--tmax", "10",
                         "--fit-tmin", "2", "--fit-tmax", "10",
                         "--out", str(out)]) == 0
        assert a.read_bytes() == b.read_bytes()


class TestEchoCommand:
    def test_zero_delta_all_ones(self, tmp_path):
        out = tmp_path / "e.csv"
        assert main(["echo", "--regime", "regular", "--delta", "0", "--tmax", "5",
                     "--out", str(out)]) == 0
        _, header, rows = read_csv(out)
        for col in ("F2", "F4", "FP", "F2_pred", "FP_pred"):
            assert np.allclose(rows[:, header.index(col)], 1.0, atol=1e-10)

    def test_exact_and_predicted_close_for_small_delta(self, tmp_path):
        out = tmp_path / "e.csv"
        assert main(["echo", "--regime", "regular", "--delta", "0.005",
                     "--tmax", "10", "--out", str(out)]) == 0
        _, header, rows = read_csv(out)
        dev = np.abs(rows[:, header.index("FP")] - rows[:, header.index("FP_pred")])
        assert dev.max() < 1e-4


class TestWignerCommand:
    def test_snapshots_and_index(self, tmp_path):
        out = tmp_path / "w.csv"
        assert main(["wigner", "--regime", "regular", "--delta", "0.005",
                     "--tmax", "10", "--snapshots", "0;5;10",
                     "--out", str(out)]) == 0
        meta, header, rows = read_csv(out)
        assert len(rows) == 3
        pq = rows[:, header.index("purity_quadrature")]
        pd = rows[:, header.index("purity_direct")]
        assert np.abs(pq - pd).max() < 1e-8
        assert pq[0] == pytest.approx(1.0, abs=1e-10)  # t=0 product state
        for fname in meta["snapshot_files"].split(";"):
            smeta, sheader, srows = read_csv(tmp_path / fname)
            assert sheader == ["theta", "phi", "W", "W2"]
            assert float(smeta["imag_residual"]) < 1e-10

    def test_snapshot_outside_grid_rejected(self, tmp_path):
        out = tmp_path / "w.csv"
        rc = main(["wigner", "--regime", "regular", "--tmax", "5",
                   "--snapshots", "0;50", "--out", str(out)])
        assert rc != 0


class TestSemiclassicalCommand:
    def test_purity_and_decay_constant(self, tmp_path, capsys):
        mat = tmp_path / "A.txt"
        mat.write_text("1 1\n0,1 0,0\n0,0 0,1\n")
        drift = tmp_path / "B.txt"
        drift.write_text("1 1\n0,0 1,0\n1,0 0,0\n")
        assert main(["semiclassical", "--matrix", str(mat), "--drift", str(drift),
                     "--delta", "0.1"]) == 0
        out = capsys.readouterr().out
        assert "purity = 1.0" in out
        assert "decay_constant_K" in out

    def test_invalid_matrix_fails(self, tmp_path, capsys):
        mat = tmp_path / "A.txt"
        mat.write_text("1 1\n0,1 0,0\n0,0 0,-1\n")
        assert main(["semiclassical", "--matrix", str(mat)]) == 1
        assert "error" in capsys.readouterr().err
