"""End-to-end report: every derived quantity of a scenario, traced to the operation that produced it."""

from __future__ import annotations

import importlib
import json
import math
from dataclasses import dataclass, field
from typing import Any, Callable

from wgmconv import conversion, coupling, detection, resonator
from wgmconv.errors import WgmError
from wgmconv.materials import MaterialLibrary, load_materials, refractive_index
from wgmconv.scenario.config import Scenario, get_value
from wgmconv.scenario.published import NO_VALUE, compare

FORMAT = "wgmconv-report/1"

NOTES = (
    "rates and linewidths are full widths in ordinary frequency (Hz)",
    "counting criterion: S * bandwidth * tau < h * nu with bandwidth in Hz (not rad/s)",
    "resonance contrast is attributed entirely to the coupling ratio; interference in the collection optics is not modeled",
    "conversion efficiency is end-to-end and includes the microwave coupling loss",
    "steady-state efficiency formula 4C/(1+C)^2 x extraction ratios is a model choice; cooperativity is an input",
)


@dataclass(frozen=True)
class Quantity:
    """One report entry.

    ``arguments`` are the keyword arguments passed to ``operation``; strings
    starting with ``@`` name scenario objects (materials, geometry, pump mode).
    ``select`` picks a field out of a tuple-valued result. For
    ``operation == "input"``, ``arguments["key"]`` is the scenario key.
    """

    name: str
    value: Any
    unit: str
    operation: str
    arguments: dict
    select: str | int | None = None
    published: float | None = None
    deviation: float | None = None
    flag: str = NO_VALUE
    note: str | None = None

    def to_dict(self) -> dict:
        return {
            "value": self.value,
            "unit": self.unit,
            "operation": self.operation,
            "arguments": self.arguments,
            "select": self.select,
            "published": self.published,
            "deviation": self.deviation,
            "flag": self.flag,
            "note": self.note,
        }


@dataclass
class Report:
    quantities: dict[str, Quantity] = field(default_factory=dict)
    objects: dict[str, Any] = field(default_factory=dict, repr=False)
    notes: tuple[str, ...] = NOTES

    def __getitem__(self, name: str):
        return self.quantities[name].value

    def __contains__(self, name: str) -> bool:
        return name in self.quantities

    def scalars(self) -> dict[str, float]:
        """Numeric view for tables: booleans as 0/1, undefined values as NaN."""
        out = {}
        for name, q in self.quantities.items():
            v = q.value
            out[name] = math.nan if v is None else float(v)
        return out

    def to_dict(self) -> dict:
        return {
            "format": FORMAT,
            "notes": list(self.notes),
            "quantities": {name: q.to_dict() for name, q in self.quantities.items()},
        }

    def render(self) -> str:
        return json.dumps(self.to_dict(), indent=2, allow_nan=False) + "\n"


def resolve_operation(dotted: str) -> Callable:
    module, _, attr = dotted.rpartition(".")
    return getattr(importlib.import_module(module), attr)


class _Builder:
    def __init__(self, report: Report):
        self.report = report

    def _add(self, name, value, unit, operation, arguments, select=None, note=None):
        published, deviation, flag, ref_note = compare(name, value)
        notes = [n for n in (ref_note, note) if n]
        self.report.quantities[name] = Quantity(
            name, value, unit, operation, arguments, select, published, deviation, flag, "; ".join(notes) or None
        )
        return value

    def input(self, name: str, unit: str, scenario: Scenario, key: str):
        return self._add(name, get_value(scenario, key), unit, "input", {"key": key})

    def op(self, name: str, unit: str, func: Callable, select=None, note=None, **arguments):
        resolved = {
            k: self.report.objects[v] if isinstance(v, str) and v.startswith("@") else v
            for k, v in arguments.items()
        }
        try:
            result = func(**resolved)
        except WgmError as err:
            raise type(err)(f"{name}: {err}") from err
        if select is not None:
            result = getattr(result, select) if isinstance(select, str) else result[select]
        return self._add(name, result, unit, f"{func.__module__}.{func.__name__}", arguments, select, note)


def build_objects(s: Scenario) -> dict[str, Any]:
    """Scenario objects referenced by ``@name`` arguments."""
    library = MaterialLibrary(load_materials(s.materials.data_file)).override(s.materials.overrides)
    core = library.get(s.materials.resonator, s.materials.resonator_axis)
    prism = library.get(s.materials.prism, s.materials.prism_axis)
    return {"@resonator_material": core, "@prism_material": prism}


def run_report(s: Scenario) -> Report:
    report = Report(objects=build_objects(s))
    b = _Builder(report)
    T = s.resonator.temperature_k
    lam = s.pump.wavelength_m
    R = s.geometry.major_radius_m

    # coupling geometry
    n_core = b.op("core_index", "", refractive_index, model="@resonator_material", wavelength=lam, temperature=T)
    n_prism = b.op("prism_index", "", refractive_index, model="@prism_material", wavelength=lam, temperature=T)
    theta = b.op("incidence_angle_deg", "deg", coupling.phase_match_angle, n_core=n_core, n_prism=n_prism)
    r_opt = b.op("optimal_rim_radius_m", "m", coupling.optimal_rim_radius, major_radius=R, angle=theta)
    b.op("fringe_axes_ratio", "", coupling.fringe_axes_ratio, major_radius=R, rim_radius=r_opt)
    rim = r_opt
    if s.geometry.rim_radius_m is not None:
        rim = b.input("rim_radius_m", "m", s, "geometry.rim_radius_m")
        b.op("fringe_axes_ratio_actual", "", coupling.fringe_axes_ratio, major_radius=R, rim_radius=rim)
    report.objects["@geometry"] = resonator.ResonatorGeometry(R, rim, s.geometry.thickness_m, report.objects["@resonator_material"])

    # mode spectrum
    fsr = b.op("fsr_hz", "Hz", resonator.free_spectral_range, geometry="@geometry", wavelength=lam, temperature=T)
    nu_p = b.op("pump_frequency_hz", "Hz", resonator.optical_frequency, wavelength=lam)
    if s.optics.q_factor is not None:
        b.input("q_factor", "", s, "optics.q_factor")
        lw = b.op("loaded_linewidth_hz", "Hz", resonator.linewidth_from_q, frequency=nu_p, q=s.optics.q_factor)
    else:
        lw = b.input("loaded_linewidth_hz", "Hz", s, "optics.loaded_linewidth_hz")
        b.op("q_factor", "", resonator.quality_factor, frequency=nu_p, linewidth=lw)
    if s.crosschecks.projected_q_factor is not None:
        b.op(
            "projected_linewidth_hz", "Hz", resonator.linewidth_from_q,
            frequency=nu_p, q=s.crosschecks.projected_q_factor,
        )
    L_p = b.op("pump_orbital_momentum", "", resonator.mode_number, frequency=nu_p, fsr=fsr)
    nu_mode = b.op(
        "pump_mode_frequency_hz", "Hz", resonator.mode_frequency,
        geometry="@geometry", L=L_p, temperature=T, dispersion_order=0,
    )
    b.op(
        "local_dispersion_hz", "Hz", resonator.local_dispersion,
        geometry="@geometry", L=L_p, temperature=T, dispersion_order=1,
    )

    # resonance lineshape
    x = b.input("coupling_ratio", "", s, "optics.coupling_ratio")
    g_abs = b.op("intrinsic_rate_hz", "Hz", coupling.split_linewidth, select=0, linewidth=lw, coupling_ratio=x)
    g_c = b.op("coupling_rate_hz", "Hz", coupling.split_linewidth, select=1, linewidth=lw, coupling_ratio=x)
    b.op("resonance_transmission", "", coupling.transmission, detuning=0.0, intrinsic_rate=g_abs, coupling_rate=g_c)
    contrast = b.op("resonance_contrast", "", coupling.resonance_contrast, intrinsic_rate=g_abs, coupling_rate=g_c)
    b.op("coupling_ratio_under", "", coupling.coupling_ratio_from_contrast, select=0, contrast=contrast)
    b.op("coupling_ratio_over", "", coupling.coupling_ratio_from_contrast, select=1, contrast=contrast)
    report.objects["@pump_mode"] = resonator.OpticalMode(L_p, nu_mode, g_abs, g_c)

    # phase matching
    nu_rf = b.input("signal_frequency_hz", "Hz", s, "microwave.frequency_hz")
    fsr_pm = fsr
    if s.resonator.measured_fsr_hz is not None:
        fsr_pm = b.input("measured_fsr_hz", "Hz", s, "resonator.measured_fsr_hz")
    order = b.op("signal_order", "", conversion.phase_match_order, select="order", nu_rf=nu_rf, fsr=fsr_pm)
    b.op("signal_residual_hz", "Hz", conversion.phase_match_order, select="residual", nu_rf=nu_rf, fsr=fsr_pm)
    offset = b.input("dispersion_offset_hz", "Hz", s, "conversion.dispersion_offset_hz")
    observed = b.op(
        "observed_offset_hz", "Hz", conversion.observed_sideband_offset, nu_rf=nu_rf, dispersion_offset=offset
    )
    b.op("observed_order", "", conversion.phase_match_order, select="order", nu_rf=observed, fsr=fsr_pm)
    b.op("observed_residual_hz", "Hz", conversion.phase_match_order, select="residual", nu_rf=observed, fsr=fsr_pm)
    b.op("anti_stokes_momentum", "", conversion.sideband_momenta, select="anti_stokes", L_p=L_p, L_rf=order)
    b.op("stokes_momentum", "", conversion.sideband_momenta, select="stokes", L_p=L_p, L_rf=order)
    curvature = 0.0
    if order >= 1:
        curvature = b.op(
            "span_dispersion_hz", "Hz", resonator.span_dispersion,
            geometry="@geometry", L=L_p, step=order, temperature=T, dispersion_order=1,
        )
    asym = dict(
        pump_mode="@pump_mode", fsr=fsr_pm, nu_rf=observed, dispersion_offset=offset,
        linewidth=lw, mode_dispersion=curvature,
    )
    b.op("sideband_weight_stokes", "", conversion.sideband_asymmetry, select="stokes", **asym)
    b.op("sideband_weight_anti_stokes", "", conversion.sideband_asymmetry, select="anti_stokes", **asym)

    # conversion budget
    nu_as = b.op("anti_stokes_frequency_hz", "Hz", conversion.anti_stokes_frequency, nu_pump=nu_p, nu_rf=nu_rf)
    b.op("stokes_frequency_hz", "Hz", conversion.stokes_frequency, nu_pump=nu_p, nu_rf=nu_rf)
    model = s.conversion.model
    if model is None:
        eta_p = b.input("power_efficiency", "", s, "conversion.power_efficiency")
    else:
        eta_model = b.op(
            "model_photon_efficiency", "", conversion.steady_state_efficiency,
            cooperativity=model.cooperativity,
            optical_coupling_rate=model.optical_coupling_rate_hz,
            optical_absorption_rate=model.optical_absorption_rate_hz,
            rf_coupling_rate=model.rf_coupling_rate_hz,
            rf_absorption_rate=model.rf_absorption_rate_hz,
        )
        eta_p = b.op(
            "power_efficiency", "", conversion.manley_rowe_inverse,
            photon_efficiency=eta_model, nu_rf=nu_rf, nu_sideband=nu_as,
        )
    b.op(
        "photon_efficiency_per_sideband", "", conversion.manley_rowe,
        power_efficiency=eta_p, nu_rf=nu_rf, nu_sideband=nu_as,
    )
    eta_both = b.op(
        "photon_efficiency_both", "", conversion.two_sideband_photon_efficiency,
        power_efficiency=eta_p, nu_rf=nu_rf, nu_pump=nu_p,
    )
    p_rf = b.input("signal_power_w", "W", s, "microwave.power_w")
    p_pump = b.input("pump_power_w", "W", s, "pump.power_w")
    p_sb = b.op("sideband_power_w", "W", conversion.sideband_power, rf_power=p_rf, power_efficiency=eta_p)
    if p_sb > 0 and p_pump > 0:
        b.op("pump_to_sideband_db", "dB", conversion.power_ratio_db, numerator=p_pump, denominator=p_sb)
    else:
        b._add("pump_to_sideband_db", None, "dB", "wgmconv.conversion.power_ratio_db",
               {"numerator": p_pump, "denominator": p_sb}, note="undefined for zero power")
    cc = s.crosschecks
    if cc.prior_power_efficiency is not None:
        b.op(
            "prior_photon_efficiency", "", conversion.manley_rowe,
            power_efficiency=cc.prior_power_efficiency,
            nu_rf=cc.prior_signal_frequency_hz,
            nu_sideband=cc.prior_sideband_frequency_hz,
        )

    # noise-equivalent power
    d = s.detection
    p_meas = d.measurement_power_w if d.measurement_power_w is not None else s.microwave.power_w
    eta_ref = d.reference_power_efficiency if d.reference_power_efficiency is not None else eta_p
    snr = b.op(
        "snr_effective_db", "dB", detection.effective_snr_db,
        snr_db=d.snr_db, power_efficiency=eta_p, reference_efficiency=eta_ref,
    )
    nep = b.op("nep_measured_w_per_hz", "W/Hz", detection.nep_from_measurement, input_power=p_meas, snr_db=snr, rbw=d.rbw_hz)
    b.op(
        "noise_floor_w", "W", detection.noise_floor,
        signal_power=conversion.sideband_power(p_meas, eta_ref), snr_db=d.snr_db,
    )
    theory = b.op(
        "nep_theory_w_per_hz", "W/Hz", detection.thermal_nep_density,
        temperature=d.temperature_k, factor=d.noise_factor,
    )
    b.op("gap_factor_measured", "", detection.nep_gap_factor, measured=nep, theory=theory)
    if d.stated_nep_w_per_hz is not None:
        stated = b.input("nep_stated_w_per_hz", "W/Hz", s, "detection.stated_nep_w_per_hz")
        gap = b.op("gap_factor_stated", "", detection.nep_gap_factor, measured=stated, theory=theory)
        if eta_both > 0:
            b.op(
                "gap_to_efficiency_ratio", "", detection.gap_to_efficiency_ratio,
                gap_factor=gap, photon_efficiency=eta_both,
            )
    t_eff = b.op(
        "effective_temperature_k", "K", detection.effective_temperature,
        temperature=d.temperature_k, absorption_rate=g_abs, total_rate=lw,
    )

    # counting feasibility
    tau = b.input("sampling_time_s", "s", s, "detection.sampling_time_s")
    bw = b.op(
        "counting_linewidth_hz", "Hz", resonator.linewidth_from_q, frequency=nu_p, q=d.counting_q_factor
    )
    b.op(
        "min_countable_frequency_hz", "Hz", detection.min_countable_frequency,
        nep_density=theory, bandwidth=bw, sampling_time=tau,
    )
    b.op(
        "counting_feasible_at_signal", "", detection.counting_feasible,
        nep_density=theory, bandwidth=bw, sampling_time=tau, frequency=nu_rf,
    )
    if t_eff > 0:
        nep_eff = b.op(
            "nep_decoupled_w_per_hz", "W/Hz", detection.thermal_nep_density,
            temperature=t_eff, factor=d.noise_factor,
        )
        b.op(
            "min_countable_frequency_decoupled_hz", "Hz", detection.min_countable_frequency,
            nep_density=nep_eff, bandwidth=bw, sampling_time=tau,
        )
    b.op(
        "counting_feasible_measured", "", detection.counting_feasible,
        nep_density=nep, bandwidth=lw, sampling_time=tau, frequency=nu_rf,
    )
    published_bw = 1.3
    b.op(
        "max_bandwidth_measured_hz", "Hz", detection.max_counting_bandwidth,
        nep_density=nep, frequency=nu_rf, sampling_time=tau,
    )
    if d.stated_nep_w_per_hz is not None:
        implied = detection.implied_sampling_time(d.stated_nep_w_per_hz, nu_rf, published_bw)
        b.op(
            "max_bandwidth_stated_hz", "Hz", detection.max_counting_bandwidth,
            note=f"published {published_bw} Hz implies tau = {implied:.3e} s (back-solved annotation)",
            nep_density=d.stated_nep_w_per_hz, frequency=nu_rf, sampling_time=tau,
        )
    published_unity = 0.52e6
    implied = detection.implied_sampling_time(theory, nu_rf, published_unity)
    unity_bw = b.op(
        "max_bandwidth_unity_hz", "Hz", detection.max_counting_bandwidth,
        note=f"published {published_unity:.3g} Hz implies tau = {implied:.3e} s (back-solved annotation)",
        nep_density=theory, frequency=nu_rf, sampling_time=tau,
    )
    b.op("required_q_unity", "", resonator.quality_factor, frequency=nu_p, linewidth=unity_bw)
    if cc.crossover_frequency_hz is not None:
        b.op(
            "crossover_temperature_k", "K", detection.frequency_to_temperature,
            frequency=cc.crossover_frequency_hz,
        )
    b.op("signal_photon_temperature_k", "K", detection.frequency_to_temperature, frequency=nu_rf)
    return report
