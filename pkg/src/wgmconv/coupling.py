"""Evanescent prism coupler design and the single-port resonance lineshape.

Angles are degrees at the interface and radians internally.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

from wgmconv.errors import ArgumentError, DegenerateWarning, DomainError


@dataclass(frozen=True)
class PrismCouplerDesign:
    incidence_angle: float
    prism_index: float
    core_index: float
    rim_ratio: float
    fringe_axes_ratio: float


def phase_match_angle(n_core: float, n_prism: float) -> float:
    """Prism incidence angle (degrees) at which the evanescent wave matches the guided mode.

    The tangential wave vector along the prism face, ``n_prism sin(theta)``,
    must equal the mode index ``n_core``.
    """
    if not n_core > 0 or not n_prism > 0:
        raise ArgumentError(f"indices must be positive, got n_core={n_core}, n_prism={n_prism}")
    if n_core > n_prism:
        raise DomainError(
            f"no phase-matched angle exists: core index {n_core} exceeds prism index {n_prism}"
        )
    return math.degrees(math.asin(n_core / n_prism))


def optimal_rim_radius(major_radius: float, angle: float) -> float:
    """Rim curvature radius ``R cos^2(theta)`` whose contact ellipse matches the beam footprint."""
    if not major_radius > 0:
        raise ArgumentError(f"major radius must be positive, got {major_radius}")
    if not 0 <= angle <= 90:
        raise ArgumentError(f"incidence angle must lie in [0, 90] degrees, got {angle}")
    if angle == 90:
        warnings.warn("grazing incidence gives a zero rim radius", DegenerateWarning, stacklevel=2)
        return 0.0
    return major_radius * math.cos(math.radians(angle)) ** 2


def fringe_axes_ratio(major_radius: float, rim_radius: float) -> float:
    """Axis ratio of the first-order contact fringe, ``sqrt(R / r)``."""
    if not rim_radius > 0:
        raise ArgumentError(f"rim radius must be positive, got {rim_radius}")
    if rim_radius > major_radius:
        raise ArgumentError(f"rim radius {rim_radius} exceeds major radius {major_radius}")
    return math.sqrt(major_radius / rim_radius)


def design_prism_coupler(n_core: float, n_prism: float) -> PrismCouplerDesign:
    angle = phase_match_angle(n_core, n_prism)
    # cos^2 = 1 - sin^2 keeps the rim condition exact at the matched angle
    rim_ratio = 1.0 - (n_core / n_prism) ** 2
    if rim_ratio <= 0:
        raise DomainError("grazing incidence: rim ratio vanishes and the fringe is unbounded")
    return PrismCouplerDesign(
        incidence_angle=angle,
        prism_index=n_prism,
        core_index=n_core,
        rim_ratio=rim_ratio,
        fringe_axes_ratio=math.sqrt(1.0 / rim_ratio),
    )


def transmission(detuning: float, intrinsic_rate: float, coupling_rate: float) -> float:
    """Through-port power transmission of a single mode coupled to one port.

    All rates are full widths in Hz; ``detuning`` is the laser offset from the mode.
    """
    if not intrinsic_rate > 0:
        raise ArgumentError(f"intrinsic rate must be positive, got {intrinsic_rate}")
    if coupling_rate < 0:
        raise ArgumentError(f"coupling rate must be non-negative, got {coupling_rate}")
    d2 = detuning * detuning
    num = d2 + (intrinsic_rate - coupling_rate) ** 2 / 4
    den = d2 + (intrinsic_rate + coupling_rate) ** 2 / 4
    return num / den


def resonance_contrast(intrinsic_rate: float, coupling_rate: float) -> float:
    """Dip depth ``1 - T(0)`` of the resonance."""
    return 1.0 - transmission(0.0, intrinsic_rate, coupling_rate)


def split_linewidth(linewidth: float, coupling_ratio: float) -> tuple[float, float]:
    """Intrinsic and coupling rates summing to ``linewidth`` with ratio ``coupling / intrinsic``."""
    if not linewidth > 0:
        raise ArgumentError(f"linewidth must be positive, got {linewidth}")
    if not coupling_ratio >= 0:
        raise ArgumentError(f"coupling ratio must be non-negative, got {coupling_ratio}")
    intrinsic = linewidth / (1.0 + coupling_ratio)
    return intrinsic, linewidth - intrinsic


def coupling_ratio_from_contrast(contrast: float) -> tuple[float, float]:
    """Under- and over-coupled ratios ``coupling_rate / intrinsic_rate`` giving a dip of ``contrast``.

    Inverts ``((1 - x) / (1 + x))**2 = 1 - contrast``.
    """
    if not 0 < contrast <= 1:
        raise ArgumentError(f"contrast must lie in (0, 1], got {contrast}")
    s = math.sqrt(1.0 - contrast)
    under = (1.0 - s) / (1.0 + s)
    return under, 1.0 / under
