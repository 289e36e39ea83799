"""Modeling toolkit for whispering-gallery-mode electro-optic upconversion of sub-THz radiation."""

from wgmconv.constants import CONSTANTS, PhysicalConstants
from wgmconv.errors import (
    ArgumentError,
    ConfigError,
    DegenerateWarning,
    DomainError,
    NumericError,
    UnphysicalWarning,
    WgmError,
)

__version__ = "0.1.0"

__all__ = [
    "CONSTANTS",
    "PhysicalConstants",
    "WgmError",
    "ArgumentError",
    "ConfigError",
    "DomainError",
    "NumericError",
    "DegenerateWarning",
    "UnphysicalWarning",
]
