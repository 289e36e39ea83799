"""One-dimensional parameter sweeps over scenario keys, tabulating every report scalar."""

from __future__ import annotations

import csv
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from wgmconv.errors import ConfigError
from wgmconv.scenario.config import EXCLUSIVE_KEYS, Scenario, get_value, with_value
from wgmconv.scenario.report import run_report
from wgmconv.scenario.spectrum import CSV_FORMAT


@dataclass(frozen=True)
class SweepAxis:
    key: str
    lo: float
    hi: float
    scale: str = "lin"
    count: int = 2

    def values(self) -> np.ndarray:
        if self.scale == "lin":
            return np.linspace(self.lo, self.hi, self.count)
        return np.geomspace(self.lo, self.hi, self.count)


def parse_vary(spec: str) -> SweepAxis:
    """Parse ``key=lo:hi:lin|log:n``."""
    key, sep, rest = spec.partition("=")
    parts = rest.split(":")
    if not sep or len(parts) != 4 or not key:
        raise ConfigError(f"--vary expects key=lo:hi:lin|log:n, got {spec!r}")
    lo, hi, scale, count = parts
    try:
        lo, hi, count = float(lo), float(hi), int(count)
    except ValueError:
        raise ConfigError(f"--vary bounds must be numbers and n an integer, got {spec!r}") from None
    if scale not in ("lin", "log"):
        raise ConfigError(f"--vary scale must be lin or log, got {scale!r}")
    if count < 2:
        raise ConfigError(f"--vary needs n >= 2, got {count}")
    if scale == "log" and not (lo > 0 and hi > 0):
        raise ConfigError("log sweeps need positive bounds")
    return SweepAxis(key.strip(), lo, hi, scale, count)


def _pin_reference(s: Scenario, key: str) -> Scenario:
    # the instrument noise floor stays where it was measured when efficiency is swept
    if key == "conversion.power_efficiency" and s.detection.reference_power_efficiency is None:
        return with_value(s, "detection.reference_power_efficiency", s.conversion.power_efficiency)
    return s


def run_sweep(s: Scenario, axis: SweepAxis, workers: int = 1) -> tuple[list[str], list[list[float]]]:
    """Evaluate the report at each axis value; rows are ordered by the swept value."""
    current = get_value(s, axis.key)
    if current is None:
        partner = EXCLUSIVE_KEYS.get(axis.key)
        if partner is None or get_value(s, partner) is None:
            raise ConfigError(f"{axis.key}: no such key in the scenario")
        current = get_value(s, partner)
    if isinstance(current, bool) or not isinstance(current, (int, float)):
        raise ConfigError(f"{axis.key}: not a numeric key")
    base = _pin_reference(s, axis.key)
    values = [float(v) for v in axis.values()]

    def evaluate(value: float) -> dict[str, float]:
        return run_report(with_value(base, axis.key, value)).scalars()

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(evaluate, values))
    else:
        results = [evaluate(v) for v in values]

    columns: list[str] = []
    for row in results:
        columns.extend(c for c in row if c not in columns)
    order = sorted(range(len(values)), key=lambda i: (values[i], i))
    header = [axis.key] + columns
    rows = [[values[i]] + [results[i].get(c, math.nan) for c in columns] for i in order]
    return header, rows


def write_sweep_csv(header: list[str], rows: list[list[float]], path: str | Path) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(header)
        for row in rows:
            writer.writerow([CSV_FORMAT % v for v in row])
