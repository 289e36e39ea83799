"""Exception and warning types shared by every module."""


class WgmError(Exception):
    """Base class for all errors raised by wgmconv."""


class ArgumentError(WgmError, ValueError):
    """An input is outside the range an operation accepts (non-positive length, etc.)."""


class DomainError(WgmError, ValueError):
    """A physically valid input for which the requested quantity does not exist.

    Examples are a wavelength outside a dispersion law's validity window or a
    core index exceeding the prism index.
    """


class NumericError(WgmError, ArithmeticError):
    """An iterative solve failed to converge."""


class ConfigError(WgmError, ValueError):
    """Scenario file could not be parsed or failed validation."""


class DegenerateWarning(UserWarning):
    """Result sits on a degenerate limit (zero rim radius, zero momentum transfer)."""


class UnphysicalWarning(UserWarning):
    """Result violates a physical bound, usually because the inputs are inconsistent."""
