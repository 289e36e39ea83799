"""One test per acceptance criterion; the terminal summary prints PASS/FAIL per line."""

import math
import warnings

import numpy as np
import pytest
from scipy.constants import k

import oracle
from wgmconv.conversion import (
    manley_rowe,
    manley_rowe_inverse,
    phase_match_order,
    steady_state_efficiency,
    two_sideband_photon_efficiency,
)
from wgmconv.coupling import (
    coupling_ratio_from_contrast,
    design_prism_coupler,
    fringe_axes_ratio,
    optimal_rim_radius,
    phase_match_angle,
    resonance_contrast,
    transmission,
)
from wgmconv.cli import main
from wgmconv.detection import (
    counting_feasible,
    frequency_to_temperature,
    max_counting_bandwidth,
    min_countable_frequency,
    nep_from_measurement,
    nep_gap_factor,
    thermal_nep_density,
)
from wgmconv.errors import UnphysicalWarning
from wgmconv.resonator import free_spectral_range, linewidth_from_q, quality_factor
from wgmconv.scenario.published import DISCREPANCY
from wgmconv.scenario.report import run_report
from wgmconv.scenario.spectrum import emit_spectrum

RNG = np.random.default_rng(11)


def test_criterion_01_free_spectral_range(disk):
    fsr = free_spectral_range(disk, 1.56e-6, 295.0)
    assert abs(fsr - 12.64e9) / 12.64e9 < 0.03


def test_criterion_02_quality_factor():
    q = quality_factor(192.17e12, 20e6)
    assert q == pytest.approx(9.61e6, rel=0.05)
    assert linewidth_from_q(192.17e12, 4e8) == pytest.approx(0.52e6, rel=0.10)


def test_criterion_03_phase_matching():
    order, residual, resonant = phase_match_order(101.12e9, 12.64e9)
    assert (order, resonant) == (8, True) and abs(residual) < 1e6
    order, residual, _ = phase_match_order(101.38e9, 12.64e9)
    assert order == 8 and residual == pytest.approx(260e6, abs=1e6)


def test_criterion_04_manley_rowe():
    assert manley_rowe(5e-3, 101.12e9, 192.27e12) == pytest.approx(2.6e-6, rel=0.02)
    assert two_sideband_photon_efficiency(5e-3, 101.12e9, 192.17e12) == pytest.approx(5.2e-6, rel=0.02)
    assert manley_rowe(1.2e-6, 0.6e12, 194.6e12) == pytest.approx(3.7e-9, rel=0.10)


def test_criterion_05_thermal_limit():
    s = thermal_nep_density(300, 2)
    assert s == pytest.approx(8e-21, rel=0.05)
    gap = nep_gap_factor(1.6e-15, s)
    assert gap == pytest.approx(5.2e-6, rel=0.05)
    assert gap == pytest.approx(two_sideband_photon_efficiency(5e-3, 101.12e9, 192.17e12), rel=0.05)


def test_criterion_06_counting_estimate():
    assert min_countable_frequency(8.28e-21, 2e6, 5e-9) == pytest.approx(0.12e12, rel=0.10)
    assert frequency_to_temperature(1e12) == pytest.approx(48.0, rel=0.01)


def test_criterion_07_nep(paper_scenario):
    assert nep_from_measurement(0.4e-3, 27, 1.23e9) == pytest.approx(6.50e-16, rel=0.02)
    q = run_report(paper_scenario).quantities["nep_measured_w_per_hz"]
    assert q.flag == DISCREPANCY
    assert q.published == 1.6e-15


def test_criterion_08_coupling_geometry():
    n_e = float(oracle.n_e_linbo3(1.56, 295.0))
    n_d = float(oracle.n_diamond(1.56))
    theta = phase_match_angle(n_e, n_d)
    assert theta == pytest.approx(63.6, abs=0.3)
    r = optimal_rim_radius(1.8e-3, theta)
    assert r == pytest.approx(0.356e-3, rel=0.02)
    assert fringe_axes_ratio(1.8e-3, r) == pytest.approx(2.25, rel=0.02)
    # exact identities of the incidence and rim conditions
    design = design_prism_coupler(n_e, n_d)
    assert n_d * math.sin(math.radians(theta)) == pytest.approx(n_e, rel=1e-15)
    assert design.rim_ratio == pytest.approx(math.cos(math.radians(theta)) ** 2, rel=1e-13)
    assert design.fringe_axes_ratio == pytest.approx(math.sqrt(1 / design.rim_ratio), rel=1e-15)


def test_criterion_09_contrast():
    under, over = coupling_ratio_from_contrast(0.9996)
    assert under == pytest.approx(0.9608, abs=1e-3)
    assert over == pytest.approx(1.0408, abs=1e-3)
    for ratio in (under, over):
        assert resonance_contrast(1.0, ratio) == pytest.approx(0.9996, abs=1e-9)


def test_criterion_10_property_suites():
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", UnphysicalWarning)
        for _ in range(1000):
            eta, nu_rf = 10 ** RNG.uniform(-9, 0), 10 ** RNG.uniform(9, 13)
            nu_sb = nu_rf * 10 ** RNG.uniform(0.01, 5)
            assert manley_rowe_inverse(manley_rowe(eta, nu_rf, nu_sb), nu_rf, nu_sb) == pytest.approx(eta, rel=1e-12)

    for _ in range(1000):
        d, a, c = RNG.uniform(-1e9, 1e9), 10 ** RNG.uniform(3, 9), 10 ** RNG.uniform(3, 9)
        t = transmission(d, a, c)
        assert 0 <= t <= 1 and transmission(-d, a, c) == t

    for _ in range(1000):
        rates = 10 ** RNG.uniform(0, 10, 4)
        assert 0 <= steady_state_efficiency(RNG.uniform(0, 1e3), *rates) <= 1
    c_grid = np.linspace(0.99, 1.01, 20001)
    eta = [steady_state_efficiency(c, 5e6, 1e6, 1e9, 1e8) for c in c_grid]
    assert c_grid[int(np.argmax(eta))] == pytest.approx(1.0, abs=1e-6)

    s, bw, tau = (10 ** RNG.uniform(lo, hi, 10_000) for lo, hi in ((-24, -12), (0, 9), (-12, -3)))
    for si, bi, ti in zip(s, bw, tau):
        nu = min_countable_frequency(si, bi, ti)
        assert not counting_feasible(si, bi, ti, nu * (1 - 1e-6))
        assert counting_feasible(si, bi, ti, nu * (1 + 1e-6))
        assert max_counting_bandwidth(si, nu, ti) == pytest.approx(bi, rel=1e-12)
        assert counting_feasible(si / 2, bi, ti, nu) and counting_feasible(si, bi / 2, ti, nu)


def test_criterion_11_end_to_end(tmp_path, paper_config_path, paper_scenario):
    outs = []
    for i in range(2):
        out = tmp_path / f"report{i}.json"
        assert main(["report", "--config", str(paper_config_path), "--out", str(out)]) == 0
        outs.append(out.read_bytes())
    assert outs[0] == outs[1]
    for name in ("fsr_hz", "q_factor", "signal_residual_hz", "photon_efficiency_both", "nep_theory_w_per_hz",
                 "gap_factor_stated", "min_countable_frequency_hz", "crossover_temperature_k",
                 "nep_measured_w_per_hz", "incidence_angle_deg", "coupling_ratio_over"):
        assert f'"{name}"'.encode() in outs[0]

    trace = emit_spectrum(paper_scenario, "sidebands", 250e9, 2001)
    floor = trace.metadata["noise_floor_w"]
    pump = trace.ordinate[np.argmin(np.abs(trace.abscissa))]
    for sign in (-1, 1):
        line = trace.ordinate[np.argmin(np.abs(trace.abscissa - sign * 101.38e9))]
        assert line - floor == pytest.approx(2e-6, rel=0.01)
        assert 10 * math.log10(pump / line) == pytest.approx(39.0, abs=0.05)
        assert 10 * math.log10(line / floor) == pytest.approx(27.0, abs=0.05)
