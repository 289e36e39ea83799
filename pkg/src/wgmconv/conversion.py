"""Three-wave mixing bookkeeping: phase matching, Manley-Rowe, efficiency budget."""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from typing import NamedTuple

from wgmconv.errors import ArgumentError, UnphysicalWarning
from wgmconv.resonator import OpticalMode


class PhaseMatch(NamedTuple):
    order: int
    residual: float
    resonant: bool


class SidebandMomenta(NamedTuple):
    anti_stokes: int
    stokes: int
    degenerate: bool


class SidebandWeights(NamedTuple):
    stokes: float
    anti_stokes: float


@dataclass(frozen=True)
class MicrowaveMode:
    """Sub-THz mode; rates are full widths in Hz."""

    frequency: float
    orbital_momentum: int
    absorption_rate: float
    nonlinear_rate: float
    coupling_rate: float = 0.0

    def __post_init__(self):
        if min(self.absorption_rate, self.nonlinear_rate, self.coupling_rate) < 0:
            raise ArgumentError("microwave rates must be non-negative")

    @property
    def total_rate(self) -> float:
        return self.nonlinear_rate + self.absorption_rate + self.coupling_rate


@dataclass(frozen=True)
class ModeTriple:
    pump: OpticalMode
    anti_stokes: OpticalMode
    stokes: OpticalMode
    microwave: MicrowaveMode
    residual_detuning: float = 0.0

    def __post_init__(self):
        L_rf = self.microwave.orbital_momentum
        if self.anti_stokes.orbital_momentum - self.pump.orbital_momentum != L_rf:
            raise ArgumentError("anti-Stokes momentum must equal pump + microwave momentum")
        if self.pump.orbital_momentum - self.stokes.orbital_momentum != L_rf:
            raise ArgumentError("Stokes momentum must equal pump - microwave momentum")


@dataclass(frozen=True)
class ConversionBudget:
    """End-to-end efficiencies.

    ``photon_efficiency_per_sideband`` is evaluated at the anti-Stokes
    frequency; ``photon_efficiency_both`` sums both sidebands.
    """

    pump_power: float
    rf_power: float
    power_efficiency_per_sideband: float
    photon_efficiency_per_sideband: float
    photon_efficiency_both: float
    sideband_power: float
    anti_stokes_frequency: float
    stokes_frequency: float


def phase_match_order(nu_rf: float, fsr: float) -> PhaseMatch:
    """Nearest azimuthal order ``L_rf`` with ``nu_rf ~ L_rf * fsr`` and the signed residual."""
    if not nu_rf > 0 or not fsr > 0:
        raise ArgumentError(f"nu_rf and fsr must be positive, got {nu_rf}, {fsr}")
    order = math.floor(nu_rf / fsr + 0.5)
    residual = nu_rf - order * fsr
    return PhaseMatch(order, residual, order >= 1)


def sideband_momenta(L_p: int, L_rf: int) -> SidebandMomenta:
    if L_rf < 0:
        raise ArgumentError(f"L_rf must be non-negative, got {L_rf}")
    if L_rf == 0:
        return SidebandMomenta(L_p, L_p, True)
    if L_p <= L_rf:
        raise ArgumentError(f"pump momentum {L_p} must exceed microwave momentum {L_rf}")
    return SidebandMomenta(L_p + L_rf, L_p - L_rf, False)


def _check_frequencies(nu_rf: float, nu_sideband: float) -> None:
    if not nu_rf > 0 or not nu_sideband > 0:
        raise ArgumentError("frequencies must be positive")
    if not nu_sideband > nu_rf:
        raise ArgumentError(f"sideband frequency {nu_sideband} must exceed signal frequency {nu_rf}")


def manley_rowe(power_efficiency: float, nu_rf: float, nu_sideband: float) -> float:
    """Photon-number efficiency from a power efficiency: ``eta_P * nu_rf / nu_sideband``."""
    _check_frequencies(nu_rf, nu_sideband)
    if power_efficiency < 0:
        raise ArgumentError(f"efficiency must be non-negative, got {power_efficiency}")
    eta_n = power_efficiency * nu_rf / nu_sideband
    if eta_n > 1:
        warnings.warn(f"photon-number efficiency {eta_n} exceeds unity", UnphysicalWarning, stacklevel=2)
    return eta_n


def manley_rowe_inverse(photon_efficiency: float, nu_rf: float, nu_sideband: float) -> float:
    _check_frequencies(nu_rf, nu_sideband)
    if photon_efficiency < 0:
        raise ArgumentError(f"efficiency must be non-negative, got {photon_efficiency}")
    if photon_efficiency > 1:
        warnings.warn(f"photon-number efficiency {photon_efficiency} exceeds unity", UnphysicalWarning, stacklevel=2)
    return photon_efficiency * nu_sideband / nu_rf


def anti_stokes_frequency(nu_pump: float, nu_rf: float) -> float:
    return nu_pump + nu_rf


def stokes_frequency(nu_pump: float, nu_rf: float) -> float:
    return nu_pump - nu_rf


def observed_sideband_offset(nu_rf: float, dispersion_offset: float) -> float:
    """Pump-to-sideband spacing seen on the analyser: drive frequency plus the dispersion offset."""
    return nu_rf + dispersion_offset


def two_sideband_photon_efficiency(power_efficiency: float, nu_rf: float, nu_pump: float) -> float:
    """Photon-number efficiency summed over the Stokes and anti-Stokes sidebands."""
    return manley_rowe(power_efficiency, nu_rf, nu_pump + nu_rf) + manley_rowe(
        power_efficiency, nu_rf, nu_pump - nu_rf
    )


def sideband_power(rf_power: float, power_efficiency: float) -> float:
    return rf_power * power_efficiency


def power_ratio_db(numerator: float, denominator: float) -> float:
    if not numerator > 0 or not denominator > 0:
        raise ArgumentError("power ratio needs positive powers")
    return 10 * math.log10(numerator / denominator)


def steady_state_efficiency(
    cooperativity: float,
    optical_coupling_rate: float,
    optical_absorption_rate: float,
    rf_coupling_rate: float,
    rf_absorption_rate: float,
) -> float:
    """Photon-number conversion efficiency of an all-resonant converter.

    ``4C/(1+C)^2`` times the optical and microwave extraction ratios; unity
    only for lossless modes at ``C = 1``.
    """
    if cooperativity < 0:
        raise ArgumentError(f"cooperativity must be non-negative, got {cooperativity}")
    rates = (optical_coupling_rate, optical_absorption_rate, rf_coupling_rate, rf_absorption_rate)
    if min(rates) < 0:
        raise ArgumentError("rates must be non-negative")
    optical_total = optical_coupling_rate + optical_absorption_rate
    rf_total = rf_coupling_rate + rf_absorption_rate
    if not optical_total > 0 or not rf_total > 0:
        raise ArgumentError("optical and microwave total rates must be positive")
    mixing = 4 * cooperativity / (1 + cooperativity) ** 2
    return mixing * (optical_coupling_rate / optical_total) * (rf_coupling_rate / rf_total)


def lorentzian_weight(offset: float, linewidth: float) -> float:
    """Relative response of a mode of full width ``linewidth`` at ``offset`` from its centre."""
    if not linewidth > 0:
        raise ArgumentError(f"linewidth must be positive, got {linewidth}")
    x = 2 * offset / linewidth
    return 1.0 / (1.0 + x * x)


def sideband_asymmetry(
    pump_mode: OpticalMode,
    fsr: float,
    nu_rf: float,
    dispersion_offset: float,
    linewidth: float,
    mode_dispersion: float = 0.0,
) -> SidebandWeights:
    """Lorentzian weights of the Stokes and anti-Stokes lines.

    The sideband modes sit at ``nu_p +/- (L_rf * fsr + dispersion_offset)``,
    both moved by ``mode_dispersion / 2`` (the second difference of the
    mode frequencies across the ``+/- L_rf`` span). The weights are equal
    when the signal sits at ``L_rf * fsr + dispersion_offset`` and swap
    when its detuning from that point changes sign.
    """
    if not linewidth > 0:
        raise ArgumentError(f"linewidth must be positive, got {linewidth}")
    nu_p = pump_mode.frequency
    order = phase_match_order(nu_rf - dispersion_offset, fsr).order
    half_curve = mode_dispersion / 2
    anti_stokes_mode = nu_p + order * fsr + dispersion_offset + half_curve
    stokes_mode = nu_p - order * fsr - dispersion_offset + half_curve
    delta_plus = (nu_p + nu_rf) - anti_stokes_mode
    delta_minus = (nu_p - nu_rf) - stokes_mode
    return SidebandWeights(lorentzian_weight(delta_minus, linewidth), lorentzian_weight(delta_plus, linewidth))


def conversion_budget(
    pump_power: float,
    rf_power: float,
    power_efficiency: float,
    nu_rf: float,
    nu_pump: float,
) -> ConversionBudget:
    """Symmetric two-sideband budget for a measured per-sideband power efficiency."""
    nu_as = anti_stokes_frequency(nu_pump, nu_rf)
    return ConversionBudget(
        pump_power=pump_power,
        rf_power=rf_power,
        power_efficiency_per_sideband=power_efficiency,
        photon_efficiency_per_sideband=manley_rowe(power_efficiency, nu_rf, nu_as),
        photon_efficiency_both=two_sideband_photon_efficiency(power_efficiency, nu_rf, nu_pump),
        sideband_power=sideband_power(rf_power, power_efficiency),
        anti_stokes_frequency=nu_as,
        stokes_frequency=stokes_frequency(nu_pump, nu_rf),
    )
