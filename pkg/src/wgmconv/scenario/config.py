"""Scenario files: TOML with nested sections and SI units in every key name."""

from __future__ import annotations

import sys
from pathlib import Path
from typing import Any, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator

from wgmconv.errors import ConfigError

if sys.version_info >= (3, 11):
    import tomllib
else:
    import tomli as tomllib


class _Section(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)


class MaterialsConfig(_Section):
    resonator: str = "LiNbO3"
    resonator_axis: Literal["ordinary", "extraordinary", "isotropic"] = "extraordinary"
    prism: str = "diamond"
    prism_axis: Literal["ordinary", "extraordinary", "isotropic"] = "isotropic"
    data_file: Optional[str] = None
    # records in the material data-file layout; replace shipped laws by (name, axis)
    overrides: list[dict[str, Any]] = Field(default_factory=list)


class GeometryConfig(_Section):
    major_radius_m: float = Field(gt=0)
    thickness_m: float = Field(gt=0)
    rim_radius_m: Optional[float] = Field(default=None, gt=0)

    @model_validator(mode="after")
    def _rim_fits(self):
        if self.rim_radius_m is not None and self.rim_radius_m > self.major_radius_m:
            raise ValueError("rim_radius_m must not exceed major_radius_m")
        return self


class ResonatorConfig(_Section):
    temperature_k: float = Field(default=295.0, gt=0)
    measured_fsr_hz: Optional[float] = Field(default=None, gt=0)


class PumpConfig(_Section):
    wavelength_m: float = Field(gt=0)
    power_w: float = Field(ge=0)


class MicrowaveConfig(_Section):
    frequency_hz: float = Field(gt=0)
    power_w: float = Field(ge=0)


class OpticsConfig(_Section):
    loaded_linewidth_hz: Optional[float] = Field(default=None, gt=0)
    q_factor: Optional[float] = Field(default=None, gt=0)
    coupling_ratio: float = Field(gt=0)
    insertion_loss_db: float = Field(default=0.0, ge=0)

    @model_validator(mode="after")
    def _one_width(self):
        if (self.loaded_linewidth_hz is None) == (self.q_factor is None):
            raise ValueError("exactly one of loaded_linewidth_hz and q_factor must be given")
        return self


class ConversionModelConfig(_Section):
    cooperativity: float = Field(ge=0)
    optical_coupling_rate_hz: float = Field(ge=0)
    optical_absorption_rate_hz: float = Field(ge=0)
    rf_coupling_rate_hz: float = Field(ge=0)
    rf_absorption_rate_hz: float = Field(ge=0)


class ConversionConfig(_Section):
    power_efficiency: Optional[float] = Field(default=None, ge=0)
    model: Optional[ConversionModelConfig] = None
    dispersion_offset_hz: float = 260e6

    @model_validator(mode="after")
    def _one_source(self):
        if (self.power_efficiency is None) == (self.model is None):
            raise ValueError("exactly one of power_efficiency and [conversion.model] must be given")
        return self


class DetectionConfig(_Section):
    temperature_k: float = Field(gt=0)
    sampling_time_s: float = Field(gt=0)
    rbw_hz: float = Field(gt=0)
    snr_db: float
    noise_factor: Literal[1, 2] = 2
    counting_q_factor: float = Field(gt=0)
    measurement_power_w: Optional[float] = Field(default=None, gt=0)
    stated_nep_w_per_hz: Optional[float] = Field(default=None, gt=0)
    # efficiency at which snr_db was measured; defaults to the scenario's own
    reference_power_efficiency: Optional[float] = Field(default=None, gt=0)


class CrosschecksConfig(_Section):
    prior_power_efficiency: Optional[float] = Field(default=None, ge=0)
    prior_signal_frequency_hz: Optional[float] = Field(default=None, gt=0)
    prior_sideband_frequency_hz: Optional[float] = Field(default=None, gt=0)
    projected_q_factor: Optional[float] = Field(default=None, gt=0)
    crossover_frequency_hz: Optional[float] = Field(default=None, gt=0)

    @model_validator(mode="after")
    def _prior_complete(self):
        prior = (self.prior_power_efficiency, self.prior_signal_frequency_hz, self.prior_sideband_frequency_hz)
        if any(v is not None for v in prior) and any(v is None for v in prior):
            raise ValueError("prior_* keys must be given together")
        return self


class Scenario(_Section):
    materials: MaterialsConfig = Field(default_factory=MaterialsConfig)
    geometry: GeometryConfig
    resonator: ResonatorConfig = Field(default_factory=ResonatorConfig)
    pump: PumpConfig
    microwave: MicrowaveConfig
    optics: OpticsConfig
    conversion: ConversionConfig
    detection: DetectionConfig
    crosschecks: CrosschecksConfig = Field(default_factory=CrosschecksConfig)

    def to_dict(self) -> dict:
        return self.model_dump(exclude_none=True)


# Keys that cannot coexist; setting one through ``with_value`` clears the other.
EXCLUSIVE_KEYS = {
    "optics.q_factor": "optics.loaded_linewidth_hz",
    "optics.loaded_linewidth_hz": "optics.q_factor",
}


def _format_validation(err: ValidationError) -> str:
    lines = []
    for item in err.errors():
        key = ".".join(str(p) for p in item["loc"]) or "<root>"
        msg = item["msg"]
        if item["type"] == "missing":
            msg = "required key is missing"
        elif item["type"] == "extra_forbidden":
            msg = "unknown key"
        lines.append(f"{key}: {msg}")
    return "; ".join(lines)


def scenario_from_dict(data: dict) -> Scenario:
    try:
        return Scenario.model_validate(data)
    except ValidationError as err:
        raise ConfigError(f"invalid scenario: {_format_validation(err)}") from None


def parse_scenario(text: str, source: str = "<string>") -> Scenario:
    try:
        data = tomllib.loads(text)
    except tomllib.TOMLDecodeError as err:
        # the decoder message already carries "(at line L, column C)"
        raise ConfigError(f"{source}: parse error: {err}") from None
    return scenario_from_dict(data)


def load_scenario(path: str | Path) -> Scenario:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as err:
        raise ConfigError(f"cannot read scenario {path}: {err.strerror}") from None
    return parse_scenario(text, str(path))


def get_value(scenario: Scenario, key: str) -> Any:
    node: Any = scenario.to_dict()
    for part in key.split("."):
        if not isinstance(node, dict) or part not in node:
            return None
        node = node[part]
    return node


def with_value(scenario: Scenario, key: str, value: Any) -> Scenario:
    """Copy of ``scenario`` with one dotted key replaced, re-validated."""
    data = scenario.to_dict()
    parts = key.split(".")
    node = data
    for part in parts[:-1]:
        node = node.setdefault(part, {})
        if not isinstance(node, dict):
            raise ConfigError(f"{key}: not a section path")
    node[parts[-1]] = value
    other = EXCLUSIVE_KEYS.get(key)
    if other is not None:
        section, name = other.split(".")
        data.get(section, {}).pop(name, None)
    return scenario_from_dict(data)
