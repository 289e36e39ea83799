"""Photon-counting criterion and noise-equivalent-power budget.

Bandwidths are ordinary-frequency widths (Hz) and a photon carries ``h * nu``.
With that convention, ``2 k_B T`` at 300 K, a 2 MHz window and 5 ns sampling
put the counting threshold at 0.12 THz; the angular-frequency reading would
be off by 2 pi.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from wgmconv.constants import CONSTANTS
from wgmconv.errors import ArgumentError


@dataclass(frozen=True)
class DetectionBudget:
    nep_density: float
    bandwidth: float
    sampling_time: float
    signal_frequency: float
    temperature: float
    effective_temperature: float
    feasible: bool
    min_countable_frequency: float
    max_bandwidth: float


def _positive(**values: float) -> None:
    for name, value in values.items():
        if not value > 0:
            raise ArgumentError(f"{name} must be positive, got {value}")


def counting_feasible(nep_density: float, bandwidth: float, sampling_time: float, frequency: float) -> bool:
    """True when one photon outweighs the noise energy collected in one sampling window."""
    _positive(nep_density=nep_density, bandwidth=bandwidth, sampling_time=sampling_time, frequency=frequency)
    return nep_density * bandwidth * sampling_time < CONSTANTS.h * frequency


def min_countable_frequency(nep_density: float, bandwidth: float, sampling_time: float) -> float:
    _positive(nep_density=nep_density, bandwidth=bandwidth, sampling_time=sampling_time)
    return nep_density * bandwidth * sampling_time / CONSTANTS.h


def max_counting_bandwidth(nep_density: float, frequency: float, sampling_time: float) -> float:
    _positive(nep_density=nep_density, frequency=frequency, sampling_time=sampling_time)
    return CONSTANTS.h * frequency / (nep_density * sampling_time)


def implied_sampling_time(nep_density: float, frequency: float, bandwidth: float) -> float:
    """Sampling time at which ``bandwidth`` is exactly the maximum counting bandwidth."""
    _positive(nep_density=nep_density, frequency=frequency, bandwidth=bandwidth)
    return CONSTANTS.h * frequency / (nep_density * bandwidth)


def nep_from_measurement(input_power: float, snr_db: float, rbw: float) -> float:
    """NEP density (W/Hz) referred to the input: power over bandwidth, less the SNR."""
    _positive(input_power=input_power, rbw=rbw)
    return input_power * 10 ** (-snr_db / 10) / rbw


def noise_floor(signal_power: float, snr_db: float) -> float:
    """Noise power per analyser bin that sits ``snr_db`` below ``signal_power``."""
    if signal_power < 0:
        raise ArgumentError(f"signal power must be non-negative, got {signal_power}")
    return signal_power * 10 ** (-snr_db / 10)


def effective_snr_db(snr_db: float, power_efficiency: float, reference_efficiency: float) -> float:
    """SNR against a fixed instrument floor after rescaling the conversion efficiency."""
    _positive(power_efficiency=power_efficiency, reference_efficiency=reference_efficiency)
    return snr_db + 10 * math.log10(power_efficiency / reference_efficiency)


def thermal_nep_density(temperature: float, factor: int = 1) -> float:
    """``factor * k_B * T``: 1 for the equipartition limit, 2 for an all-resonant converter."""
    if factor not in (1, 2):
        raise ArgumentError(f"factor must be 1 or 2, got {factor}")
    if temperature < 0:
        raise ArgumentError(f"temperature must be non-negative, got {temperature}")
    return factor * CONSTANTS.k_B * temperature


def effective_temperature(temperature: float, absorption_rate: float, total_rate: float) -> float:
    """Bath temperature scaled by the absorption share of the total loss rate."""
    if not total_rate > 0:
        raise ArgumentError(f"total rate must be positive, got {total_rate}")
    if not 0 <= absorption_rate <= total_rate:
        raise ArgumentError(f"need 0 <= absorption rate <= total rate, got {absorption_rate}, {total_rate}")
    return temperature * absorption_rate / total_rate


def frequency_to_temperature(frequency: float) -> float:
    """Temperature whose ``k_B T`` equals the photon energy ``h nu``."""
    _positive(frequency=frequency)
    return CONSTANTS.h * frequency / CONSTANTS.k_B


def temperature_to_frequency(temperature: float) -> float:
    _positive(temperature=temperature)
    return CONSTANTS.k_B * temperature / CONSTANTS.h


def nep_gap_factor(measured: float, theory: float) -> float:
    """How far a measured NEP density sits above the theoretical one (theory / measured)."""
    _positive(measured=measured, theory=theory)
    return theory / measured


def gap_to_efficiency_ratio(gap_factor: float, photon_efficiency: float) -> float:
    """Gap factor over the photon-number efficiency; near 1 when conversion efficiency explains the whole gap."""
    _positive(gap_factor=gap_factor, photon_efficiency=photon_efficiency)
    return gap_factor / photon_efficiency


def detection_budget(
    nep_density: float,
    bandwidth: float,
    sampling_time: float,
    signal_frequency: float,
    temperature: float,
    absorption_rate: float,
    total_rate: float,
) -> DetectionBudget:
    return DetectionBudget(
        nep_density=nep_density,
        bandwidth=bandwidth,
        sampling_time=sampling_time,
        signal_frequency=signal_frequency,
        temperature=temperature,
        effective_temperature=effective_temperature(temperature, absorption_rate, total_rate),
        feasible=counting_feasible(nep_density, bandwidth, sampling_time, signal_frequency),
        min_countable_frequency=min_countable_frequency(nep_density, bandwidth, sampling_time),
        max_bandwidth=max_counting_bandwidth(nep_density, signal_frequency, sampling_time),
    )
