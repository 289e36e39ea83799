"""Synthetic traces: the resonance dip and the analyser view of pump plus sidebands."""

from __future__ import annotations

import csv
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from wgmconv import coupling, resonator
from wgmconv.errors import ArgumentError
from wgmconv.scenario.config import Scenario
from wgmconv.scenario.report import run_report

KINDS = ("transmission", "sidebands")
MIN_POINTS_PER_FWHM = 10
CSV_FORMAT = "%.12e"


@dataclass
class SpectrumTrace:
    kind: str
    abscissa: np.ndarray
    ordinate: np.ndarray
    abscissa_label: str
    ordinate_label: str
    metadata: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.abscissa.shape != self.ordinate.shape:
            raise ArgumentError("abscissa and ordinate lengths differ")


def frequency_grid(span: float, points: int) -> np.ndarray:
    if not span > 0:
        raise ArgumentError(f"span must be positive, got {span}")
    if points < 2:
        raise ArgumentError(f"need at least 2 points, got {points}")
    return np.linspace(-span / 2, span / 2, points)


def transmission_trace(s: Scenario, span: float, points: int) -> SpectrumTrace:
    """Resonance dip versus laser detuning, scaled by the broadband insertion loss."""
    report = run_report(s)
    lw = report["loaded_linewidth_hz"]
    g_abs, g_c = coupling.split_linewidth(lw, s.optics.coupling_ratio)
    grid = frequency_grid(span, points)
    loss = 10 ** (-s.optics.insertion_loss_db / 10)
    values = np.array([coupling.transmission(d, g_abs, g_c) for d in grid]) * loss
    meta = {
        "loaded_linewidth_hz": lw,
        "insertion_loss_db": s.optics.insertion_loss_db,
        "insertion_loss_factor": loss,
        "warnings": [],
    }
    step = grid[1] - grid[0]
    if lw / step < MIN_POINTS_PER_FWHM:
        meta["warnings"].append(
            f"grid step {step:.3e} Hz gives {lw / step:.2f} points per FWHM (< {MIN_POINTS_PER_FWHM})"
        )
    return SpectrumTrace("transmission", grid, values, "detuning_hz", "transmission", meta)


def sideband_trace(s: Scenario, span: float, points: int) -> SpectrumTrace:
    """Analyser output around the pump: three lines seen through a rectangular RBW bin over a flat floor."""
    report = run_report(s)
    rbw = s.detection.rbw_hz
    offset = report["observed_offset_hz"]
    lines = (
        (0.0, report["pump_power_w"]),
        (-offset, report["sideband_power_w"]),
        (offset, report["sideband_power_w"]),
    )
    floor = report["noise_floor_w"]
    grid = frequency_grid(span, points)
    values = np.full(grid.shape, floor)
    for position, power in lines:
        values[np.abs(grid - position) <= rbw / 2] += power
    meta = {
        "rbw_hz": rbw,
        "noise_floor_w": floor,
        "pump_frequency_hz": report["pump_frequency_hz"],
        "sideband_offset_hz": offset,
        "warnings": [],
    }
    step = grid[1] - grid[0]
    if step > rbw:
        meta["warnings"].append(f"grid step {step:.3e} Hz exceeds the RBW; lines may fall between points")
    if offset > span / 2:
        meta["warnings"].append("sidebands lie outside the requested span")
    return SpectrumTrace("output-spectrum", grid, values, "offset_hz", "power_w", meta)


def emit_spectrum(s: Scenario, kind: str, span: float, points: int, out: str | Path | None = None) -> SpectrumTrace:
    if kind == "transmission":
        trace = transmission_trace(s, span, points)
    elif kind == "sidebands":
        trace = sideband_trace(s, span, points)
    else:
        raise ArgumentError(f"kind must be one of {KINDS}, got {kind!r}")
    if out is not None:
        write_trace_csv(trace, out)
    return trace


def write_trace_csv(trace: SpectrumTrace, path: str | Path) -> None:
    """CSV with ``#``-prefixed metadata lines, one header row, then scientific-notation data."""
    with open(path, "w", newline="", encoding="utf-8") as fh:
        fh.write(f"# kind={trace.kind}\n")
        for key, value in trace.metadata.items():
            if key == "warnings":
                for w in value:
                    fh.write(f"# warning={w}\n")
            else:
                fh.write(f"# {key}={value!r}\n")
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow([trace.abscissa_label, trace.ordinate_label])
        for x, y in zip(trace.abscissa, trace.ordinate):
            writer.writerow([CSV_FORMAT % x, CSV_FORMAT % y])


def read_csv(path: str | Path) -> tuple[list[str], np.ndarray]:
    """Header and numeric body of a CSV written by this package (comment lines skipped)."""
    with open(path, newline="", encoding="utf-8") as fh:
        rows = [row for row in csv.reader(line for line in fh if not line.startswith("#"))]
    header, body = rows[0], rows[1:]
    return header, np.array([[float(v) for v in row] for row in body])
