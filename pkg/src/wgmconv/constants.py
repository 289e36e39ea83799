"""CODATA constants used throughout the package (SI units)."""

from dataclasses import dataclass, field

import scipy.constants as _sc


@dataclass(frozen=True)
class PhysicalConstants:
    """Fixed CODATA values; fields cannot be set at construction."""

    c: float = field(default=_sc.c, init=False)
    h: float = field(default=_sc.h, init=False)
    hbar: float = field(default=_sc.hbar, init=False)
    k_B: float = field(default=_sc.k, init=False)


CONSTANTS = PhysicalConstants()
