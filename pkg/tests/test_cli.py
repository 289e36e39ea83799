import subprocess
import sys

import pytest

from wgmconv.cli import main

WILD_LAW = """
[[materials.overrides]]
name = "LiNbO3"
axis = "extraordinary"
validity_um = [1e-6, 1e6]
terms = [{kind = "constant", value = 0.0}, {kind = "pole", strength = 4.0, resonance_um = 0.0}]
"""


@pytest.fixture
def config(tmp_path, paper_config_path):
    def make(old=None, new=None, extra=""):
        text = paper_config_path.read_text()
        if old is not None:
            assert old in text
            text = text.replace(old, new)
        path = tmp_path / "scenario.config"
        path.write_text(text + extra)
        return str(path)

    return make


def test_report_byte_identical(tmp_path, paper_config_path):
    outs = []
    for i in range(2):
        out = tmp_path / f"report{i}.json"
        assert main(["report", "--config", str(paper_config_path), "--out", str(out)]) == 0
        outs.append(out.read_bytes())
    assert outs[0] == outs[1]
    assert b'"nep_measured_w_per_hz"' in outs[0]


def test_report_to_stdout(capsys, paper_config_path):
    assert main(["report", "--config", str(paper_config_path)]) == 0
    assert capsys.readouterr().out.startswith("{")


def test_config_error_exit(config, capsys):
    path = config("major_radius_m = 1.8e-3\n", "")
    assert main(["report", "--config", path]) == 1
    assert "geometry.major_radius_m" in capsys.readouterr().err


def test_domain_error_exit(config, capsys):
    # a diamond disk behind a LiNbO3 prism has no phase-matched angle
    path = config(
        'resonator = "LiNbO3"\nresonator_axis = "extraordinary"\nprism = "diamond"\nprism_axis = "isotropic"',
        'resonator = "diamond"\nresonator_axis = "isotropic"\nprism = "LiNbO3"\nprism_axis = "extraordinary"',
    )
    assert main(["report", "--config", path]) == 2
    assert "domain error" in capsys.readouterr().err


def test_numeric_error_exit(config, capsys):
    path = config(extra=WILD_LAW)
    assert main(["report", "--config", path]) == 3
    assert "did not converge" in capsys.readouterr().err


def test_bad_vary_is_config_error(paper_config_path, tmp_path):
    out = tmp_path / "s.csv"
    assert main(["sweep", "--config", str(paper_config_path), "--vary", "optics.q_factor", "--out", str(out)]) == 1


def test_spectrum_and_sweep_write_files(paper_config_path, tmp_path):
    spec = tmp_path / "spec.csv"
    sweep = tmp_path / "sweep.csv"
    cfg = str(paper_config_path)
    assert main(["spectrum", "--config", cfg, "--kind", "sidebands", "--span-hz", "250e9", "--points", "501", "--out", str(spec)]) == 0
    assert main(["sweep", "--config", cfg, "--vary", "optics.q_factor=1e7:4e8:log:3", "--out", str(sweep), "--workers", "2"]) == 0
    assert spec.read_text().count("\n") > 501
    assert sweep.read_text().splitlines()[0].startswith("optics.q_factor,")


def test_feasibility(capsys, paper_config_path):
    assert main(["feasibility", "--config", str(paper_config_path)]) == 0
    out = capsys.readouterr().out
    assert "bandwidth in Hz" in out
    assert "known-discrepancy" in out
    assert "counting_feasible_at_signal = False" in out


def test_entry_point_runs(paper_config_path):
    result = subprocess.run(
        [sys.executable, "-m", "wgmconv.cli", "feasibility", "--config", str(paper_config_path)],
        capture_output=True,
        text=True,
        check=False,
    )
    assert result.returncode == 0
    assert "min_countable_frequency_hz" in result.stdout
