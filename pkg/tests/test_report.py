import json
import math

import pytest

from wgmconv.errors import DomainError
from wgmconv.scenario.config import get_value, with_value
from wgmconv.scenario.published import DISCREPANCY, FLAGS, MATCH
from wgmconv.scenario.report import resolve_operation, run_report


@pytest.fixture(scope="module")
def report(paper_scenario):
    return run_report(paper_scenario)


def test_every_quantity_recomputes(report, paper_scenario):
    for name, q in report.quantities.items():
        if q.operation == "input":
            assert q.value == get_value(paper_scenario, q.arguments["key"]), name
            continue
        args = {k: report.objects[v] if isinstance(v, str) and v.startswith("@") else v for k, v in q.arguments.items()}
        result = resolve_operation(q.operation)(**args)
        if q.select is not None:
            result = getattr(result, q.select) if isinstance(q.select, str) else result[q.select]
        assert result == q.value, name


def test_flags_are_known(report):
    assert {q.flag for q in report.quantities.values()} <= set(FLAGS)


def test_headline_values(report):
    assert report["fsr_hz"] == pytest.approx(12.64e9, rel=0.03)
    assert report["signal_order"] == 8
    assert report["observed_residual_hz"] == pytest.approx(260e6, abs=1e6)
    assert report["photon_efficiency_both"] == pytest.approx(5.2e-6, rel=0.02)
    assert report["sideband_power_w"] == pytest.approx(2e-6, rel=1e-12)


def test_nep_discrepancy_printed_side_by_side(report):
    q = report.quantities["nep_measured_w_per_hz"]
    assert q.flag == DISCREPANCY
    assert q.published == 1.6e-15
    assert report["nep_stated_w_per_hz"] == 1.6e-15
    assert report.quantities["gap_factor_stated"].flag == MATCH


def test_render_is_deterministic(paper_scenario, report):
    text = report.render()
    assert run_report(paper_scenario).render() == text
    doc = json.loads(text)
    assert doc["format"] == "wgmconv-report/1"
    assert any("bandwidth in Hz" in n for n in doc["notes"])


def test_zero_rf_power_only_moves_sideband_power(paper_scenario, report):
    zero = run_report(with_value(paper_scenario, "microwave.power_w", 0.0))
    assert zero["sideband_power_w"] == 0.0
    assert zero["pump_to_sideband_db"] is None
    changed = {n for n in report.quantities if n in zero.quantities and zero[n] != report[n]}
    assert changed <= {"signal_power_w", "sideband_power_w", "pump_to_sideband_db"}


def test_q_factor_path_matches_linewidth_path(paper_scenario, report):
    q = report["q_factor"]
    other = run_report(with_value(paper_scenario, "optics.q_factor", q))
    assert other["loaded_linewidth_hz"] == pytest.approx(20e6, rel=1e-12)


def test_model_path(paper_scenario):
    data = paper_scenario.to_dict()
    del data["conversion"]["power_efficiency"]
    data["conversion"]["model"] = {
        "cooperativity": 1.0,
        "optical_coupling_rate_hz": 9.8e6,
        "optical_absorption_rate_hz": 10.2e6,
        "rf_coupling_rate_hz": 1e9,
        "rf_absorption_rate_hz": 1e9,
    }
    from wgmconv.scenario.config import scenario_from_dict

    r = run_report(scenario_from_dict(data))
    assert "model_photon_efficiency" in r
    assert 0 < r["model_photon_efficiency"] <= 1
    assert r["photon_efficiency_per_sideband"] == pytest.approx(r["model_photon_efficiency"], rel=1e-12)


def test_domain_error_names_quantity(paper_scenario):
    data = paper_scenario.to_dict()
    data["materials"]["prism"], data["materials"]["prism_axis"] = "LiNbO3", "ordinary"
    data["materials"]["resonator"], data["materials"]["resonator_axis"] = "diamond", "isotropic"
    from wgmconv.scenario.config import scenario_from_dict

    with pytest.raises(DomainError, match="incidence_angle_deg"):
        run_report(scenario_from_dict(data))


def test_scalars_are_floats(report):
    values = report.scalars()
    assert values["counting_feasible_at_signal"] == 0.0
    assert all(isinstance(v, float) for v in values.values())
    assert not any(math.isinf(v) for v in values.values())
