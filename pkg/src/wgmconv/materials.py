"""Refractive-index laws for the resonator and prism materials.

Coefficients live in ``data/materials.json``; each record is one
(material, axis) pair. The index law is a generalised temperature-dependent
Sellmeier sum, evaluated in micrometres::

    n^2 = sum(term(lambda_um, f)),   f = (t - t_ref) * (t + t_offset),  t in deg C

which covers the common congruent-LiNbO3 forms and plain Sellmeier glasses.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Iterable, Mapping

from wgmconv.errors import ArgumentError, DomainError

AXES = ("ordinary", "extraordinary", "isotropic")
TERM_KINDS = ("constant", "pole", "sellmeier", "infrared")

_KELVIN_OFFSET = 273.15

# Per-kind serialised keys, in file order.
_TERM_KEYS = {
    "constant": ("value", "thermal"),
    "pole": ("strength", "strength_thermal", "resonance_um", "resonance_thermal"),
    "sellmeier": ("strength", "resonance_um"),
    "infrared": ("value",),
}


@dataclass(frozen=True)
class SellmeierTerm:
    """One additive contribution to n^2.

    ``value`` is the dimensionless constant (``constant``), the oscillator
    strength in um^2 (``pole``), the dimensionless strength (``sellmeier``)
    or the infrared coefficient in 1/um^2 (``infrared``).
    """

    kind: str
    value: float
    thermal: float = 0.0
    resonance_um: float = 0.0
    resonance_thermal: float = 0.0

    def __post_init__(self):
        if self.kind not in TERM_KINDS:
            raise ArgumentError(f"unknown term kind {self.kind!r}; expected one of {TERM_KINDS}")

    def evaluate(self, lam2: float, f: float) -> float:
        if self.kind == "constant":
            return self.value + self.thermal * f
        if self.kind == "pole":
            pole = self.resonance_um + self.resonance_thermal * f
            return (self.value + self.thermal * f) / (lam2 - pole * pole)
        if self.kind == "sellmeier":
            return self.value * lam2 / (lam2 - self.resonance_um**2)
        return -self.value * lam2

    def to_dict(self) -> dict:
        if self.kind == "constant":
            out = {"kind": "constant", "value": self.value}
            if self.thermal:
                out["thermal"] = self.thermal
            return out
        if self.kind == "pole":
            return {
                "kind": "pole",
                "strength": self.value,
                "strength_thermal": self.thermal,
                "resonance_um": self.resonance_um,
                "resonance_thermal": self.resonance_thermal,
            }
        if self.kind == "sellmeier":
            return {"kind": "sellmeier", "strength": self.value, "resonance_um": self.resonance_um}
        return {"kind": "infrared", "value": self.value}

    @classmethod
    def from_dict(cls, data: Mapping) -> "SellmeierTerm":
        kind = data.get("kind")
        if kind not in _TERM_KEYS:
            raise ArgumentError(f"unknown term kind {kind!r}; expected one of {TERM_KINDS}")
        extra = set(data) - {"kind", *_TERM_KEYS[kind]}
        if extra:
            raise ArgumentError(f"unexpected keys for {kind} term: {sorted(extra)}")
        if kind == "constant":
            return cls(kind, float(data["value"]), float(data.get("thermal", 0.0)))
        if kind == "pole":
            return cls(
                kind,
                float(data["strength"]),
                float(data.get("strength_thermal", 0.0)),
                float(data["resonance_um"]),
                float(data.get("resonance_thermal", 0.0)),
            )
        if kind == "sellmeier":
            return cls(kind, float(data["strength"]), resonance_um=float(data["resonance_um"]))
        return cls(kind, float(data["value"]))


@dataclass(frozen=True)
class ThermalLaw:
    reference_c: float
    offset_c: float
    range_k: tuple[float, float]

    def variable(self, temperature_k: float) -> float:
        t = temperature_k - _KELVIN_OFFSET
        return (t - self.reference_c) * (t + self.offset_c)


@dataclass(frozen=True)
class DispersionModel:
    """A named index law with its validity window.

    Parameters
    ----------
    name : str
        Material identifier, e.g. ``"LiNbO3"``.
    axis : str
        ``"ordinary"``, ``"extraordinary"`` or ``"isotropic"``.
    terms : tuple of SellmeierTerm
        Contributions summed to give n^2.
    validity_um : tuple of float
        Closed wavelength interval in micrometres.
    thermal : ThermalLaw or None
        Temperature dependence; ``None`` means the temperature argument is ignored.
    source : str
        Literature reference for the coefficients.
    """

    name: str
    axis: str
    terms: tuple[SellmeierTerm, ...]
    validity_um: tuple[float, float]
    thermal: ThermalLaw | None = None
    source: str = ""

    def __post_init__(self):
        if self.axis not in AXES:
            raise ArgumentError(f"axis must be one of {AXES}, got {self.axis!r}")
        lo, hi = self.validity_um
        if not (0 < lo < hi):
            raise ArgumentError(f"validity interval must be positive and non-empty, got [{lo}, {hi}] um")
        if not self.terms:
            raise ArgumentError("a dispersion model needs at least one term")

    @classmethod
    def constant(cls, index: float, name: str = "constant") -> "DispersionModel":
        """Dispersionless model, valid over every practical wavelength."""
        if index <= 0:
            raise ArgumentError(f"index must be positive, got {index}")
        return cls(
            name=name,
            axis="isotropic",
            terms=(SellmeierTerm("constant", index * index),),
            validity_um=(1e-6, 1e6),
        )

    def to_dict(self) -> dict:
        thermal = None
        if self.thermal is not None:
            thermal = {
                "reference_c": self.thermal.reference_c,
                "offset_c": self.thermal.offset_c,
                "range_k": list(self.thermal.range_k),
            }
        return {
            "name": self.name,
            "axis": self.axis,
            "source": self.source,
            "validity_um": list(self.validity_um),
            "thermal": thermal,
            "terms": [t.to_dict() for t in self.terms],
        }

    @classmethod
    def from_dict(cls, data: Mapping) -> "DispersionModel":
        required = {"name", "axis", "terms", "validity_um"}
        missing = required - set(data)
        if missing:
            raise ArgumentError(f"material record missing keys: {sorted(missing)}")
        extra = set(data) - required - {"thermal", "source"}
        if extra:
            raise ArgumentError(f"material record has unknown keys: {sorted(extra)}")
        thermal = data.get("thermal")
        if thermal is not None:
            lo, hi = thermal["range_k"]
            thermal = ThermalLaw(float(thermal["reference_c"]), float(thermal["offset_c"]), (float(lo), float(hi)))
        lo, hi = data["validity_um"]
        return cls(
            name=str(data["name"]),
            axis=str(data["axis"]),
            terms=tuple(SellmeierTerm.from_dict(t) for t in data["terms"]),
            validity_um=(float(lo), float(hi)),
            thermal=thermal,
            source=str(data.get("source", "")),
        )


def refractive_index(model: DispersionModel, wavelength: float, temperature: float | None = None) -> float:
    """Index of ``model`` at a vacuum wavelength.

    Parameters
    ----------
    model : DispersionModel
    wavelength : float
        Vacuum wavelength in metres.
    temperature : float, optional
        Kelvin. Required for laws with thermal terms, ignored otherwise.

    Returns
    -------
    float
        Refractive index (> 1 inside the validity window).
    """
    if not wavelength > 0:
        raise ArgumentError(f"wavelength must be positive, got {wavelength} m")
    lam_um = wavelength * 1e6
    lo, hi = model.validity_um
    # slack absorbs the m -> um rescaling at the window edges
    if not lo * (1 - 1e-12) <= lam_um <= hi * (1 + 1e-12):
        raise DomainError(
            f"{model.name} ({model.axis}) law is valid for {lo}-{hi} um; got {lam_um:.6g} um"
        )
    f = 0.0
    if model.thermal is not None:
        if temperature is None:
            raise ArgumentError(f"{model.name} ({model.axis}) law needs a temperature")
        t_lo, t_hi = model.thermal.range_k
        if not t_lo <= temperature <= t_hi:
            raise DomainError(
                f"{model.name} ({model.axis}) law is valid for {t_lo}-{t_hi} K; got {temperature} K"
            )
        f = model.thermal.variable(temperature)
    lam2 = lam_um * lam_um
    n2 = math.fsum(term.evaluate(lam2, f) for term in model.terms)
    if not (n2 > 0 and math.isfinite(n2)):
        raise DomainError(f"{model.name} ({model.axis}) law gives n^2 = {n2} at {lam_um:.6g} um")
    return math.sqrt(n2)


def _default_path():
    return resources.files("wgmconv") / "data" / "materials.json"


def load_materials(path: str | Path | None = None) -> dict[tuple[str, str], DispersionModel]:
    """Read a material data file into a ``{(name, axis): model}`` mapping."""
    if path is None:
        text = _default_path().read_text(encoding="utf-8")
    else:
        text = Path(path).read_text(encoding="utf-8")
    doc = json.loads(text)
    models = {}
    for record in doc["records"]:
        model = DispersionModel.from_dict(record)
        models[(model.name, model.axis)] = model
    return models


def dump_materials(models: Iterable[DispersionModel], path: str | Path) -> None:
    """Write models in the data-file layout. Floats use ``repr`` so they round-trip exactly."""
    doc = {"format": "wgmconv-materials", "version": 1, "records": [m.to_dict() for m in models]}
    Path(path).write_text(json.dumps(doc, indent=2) + "\n", encoding="utf-8")


@dataclass
class MaterialLibrary:
    """Shipped models plus optional per-record overrides."""

    models: dict[tuple[str, str], DispersionModel] = field(default_factory=load_materials)

    def get(self, name: str, axis: str) -> DispersionModel:
        try:
            return self.models[(name, axis)]
        except KeyError:
            known = ", ".join(f"{n}/{a}" for n, a in sorted(self.models))
            raise ArgumentError(f"no material law for {name}/{axis}; known: {known}") from None

    def override(self, records: Iterable[Mapping]) -> "MaterialLibrary":
        models = dict(self.models)
        for record in records:
            model = DispersionModel.from_dict(record)
            models[(model.name, model.axis)] = model
        return MaterialLibrary(models)
