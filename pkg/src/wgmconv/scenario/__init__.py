"""Scenario ingestion, reports, synthetic spectra and sweeps."""

from wgmconv.scenario.config import Scenario, load_scenario, parse_scenario
from wgmconv.scenario.report import Quantity, Report, run_report
from wgmconv.scenario.spectrum import SpectrumTrace, emit_spectrum
from wgmconv.scenario.sweep import SweepAxis, parse_vary, run_sweep

__all__ = [
    "Scenario",
    "load_scenario",
    "parse_scenario",
    "Quantity",
    "Report",
    "run_report",
    "SpectrumTrace",
    "emit_spectrum",
    "SweepAxis",
    "parse_vary",
    "run_sweep",
]
