"""Optical mode spectrum of a disk resonator.

Rate convention: every rate and linewidth is a full width in ordinary
frequency (Hz). A mode's loaded linewidth is ``intrinsic_rate + coupling_rate``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from wgmconv.constants import CONSTANTS
from wgmconv.errors import ArgumentError, NumericError
from wgmconv.materials import DispersionModel, refractive_index

# First zero of Ai(-x); the fundamental radial family is shifted by
# AIRY_ZERO * (L/2)**(1/3) in the eigenvalue n*k*R.
AIRY_ZERO = 2.338107410459767

DEFAULT_WAVELENGTH = 1.56e-6
MAX_ITER = 100


@dataclass(frozen=True)
class ResonatorGeometry:
    """Disk geometry; ``material`` is the index law seen by the optical modes."""

    major_radius: float
    rim_radius: float
    thickness: float
    material: DispersionModel

    def __post_init__(self):
        if not 0 < self.rim_radius <= self.major_radius:
            raise ArgumentError(
                f"need 0 < rim_radius <= major_radius, got r={self.rim_radius} m, R={self.major_radius} m"
            )
        if not self.thickness > 0:
            raise ArgumentError(f"thickness must be positive, got {self.thickness} m")


@dataclass(frozen=True)
class OpticalMode:
    orbital_momentum: int
    frequency: float
    intrinsic_rate: float
    coupling_rate: float

    def __post_init__(self):
        if self.orbital_momentum < 1:
            raise ArgumentError(f"orbital momentum must be >= 1, got {self.orbital_momentum}")
        if self.intrinsic_rate < 0 or self.coupling_rate < 0:
            raise ArgumentError("rates must be non-negative")
        if not self.frequency > 0 or not self.loaded_linewidth > 0:
            raise ArgumentError("frequency and loaded linewidth must be positive")

    @property
    def loaded_linewidth(self) -> float:
        return self.intrinsic_rate + self.coupling_rate

    @property
    def quality_factor(self) -> float:
        return quality_factor(self.frequency, self.loaded_linewidth)


def optical_frequency(wavelength: float) -> float:
    """Vacuum frequency in Hz for a wavelength in metres."""
    if not wavelength > 0:
        raise ArgumentError(f"wavelength must be positive, got {wavelength} m")
    return CONSTANTS.c / wavelength


def free_spectral_range(geometry: ResonatorGeometry, wavelength: float, temperature: float | None = None) -> float:
    """Mode spacing ``c / (2 pi R n)`` in Hz, using the material index at ``wavelength``."""
    n = refractive_index(geometry.material, wavelength, temperature)
    return CONSTANTS.c / (2 * math.pi * geometry.major_radius * n)


def quality_factor(frequency: float, linewidth: float) -> float:
    if not frequency > 0 or not linewidth > 0:
        raise ArgumentError(f"frequency and linewidth must be positive, got {frequency}, {linewidth}")
    return frequency / linewidth


def linewidth_from_q(frequency: float, q: float) -> float:
    if not frequency > 0 or not q > 0:
        raise ArgumentError(f"frequency and Q must be positive, got {frequency}, {q}")
    return frequency / q


def mode_number(frequency: float, fsr: float) -> int:
    """Nearest orbital momentum for a mode at ``frequency`` on a comb of spacing ``fsr``."""
    if not frequency > 0 or not fsr > 0:
        raise ArgumentError("frequency and fsr must be positive")
    return max(1, math.floor(frequency / fsr + 0.5))


def _effective_momentum(L: int, dispersion_order: int) -> float:
    if dispersion_order == 0:
        return float(L)
    if dispersion_order == 1:
        return L + AIRY_ZERO * (L / 2) ** (1 / 3)
    raise ArgumentError(f"dispersion_order must be 0 or 1, got {dispersion_order}")


def mode_frequency(
    geometry: ResonatorGeometry,
    L: int,
    temperature: float | None = None,
    dispersion_order: int = 0,
    tol: float = 1.0,
) -> float:
    """Frequency of the fundamental mode with orbital momentum ``L``.

    Solves ``nu = M * c / (2 pi R n(c/nu))`` by fixed-point iteration, where
    ``M = L`` at order 0 and ``M = L + 2.3381 (L/2)^(1/3)`` at order 1.

    Raises
    ------
    NumericError
        If the iteration has not settled to ``tol`` Hz after 100 steps.
    """
    if int(L) != L or L < 1:
        raise ArgumentError(f"orbital momentum must be an integer >= 1, got {L}")
    scale = _effective_momentum(int(L), dispersion_order) * CONSTANTS.c / (2 * math.pi * geometry.major_radius)
    nu = scale / refractive_index(geometry.material, DEFAULT_WAVELENGTH, temperature)
    for _ in range(MAX_ITER):
        nu_next = scale / refractive_index(geometry.material, CONSTANTS.c / nu, temperature)
        step = abs(nu_next - nu)
        nu = nu_next
        if step <= tol:
            # one more contraction so second differences are not limited by tol
            return scale / refractive_index(geometry.material, CONSTANTS.c / nu, temperature)
    raise NumericError(f"mode frequency for L={L} did not converge to {tol} Hz in {MAX_ITER} iterations")


def span_dispersion(
    geometry: ResonatorGeometry,
    L: int,
    step: int,
    temperature: float | None = None,
    dispersion_order: int = 0,
) -> float:
    """Second difference ``nu(L+step) - 2 nu(L) + nu(L-step)`` in Hz."""
    if step < 1 or L - step < 1:
        raise ArgumentError(f"need 1 <= step < L, got step={step}, L={L}")
    nu = [mode_frequency(geometry, L + k, temperature, dispersion_order) for k in (-step, 0, step)]
    return (nu[2] - nu[1]) - (nu[1] - nu[0])


def local_dispersion(
    geometry: ResonatorGeometry,
    L: int,
    temperature: float | None = None,
    dispersion_order: int = 0,
) -> float:
    """Nearest-neighbour second difference of the mode frequencies."""
    return span_dispersion(geometry, L, 1, temperature, dispersion_order)
