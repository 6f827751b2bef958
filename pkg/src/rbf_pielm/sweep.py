"""Hyperparameter sweep harness over kernel-width parameters and unit count.

Each grid cell runs the full place/assemble/solve pipeline once per seed and
records the mean and spread of the unweighted mean-absolute residual. Cells
are independent and may run concurrently; a failed cell is recorded with an
error status instead of aborting the sweep.
"""

from __future__ import annotations

import csv
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace
from pathlib import Path

import numpy as np

from .config import RunConfig
from .exceptions import ConfigError, RbfPielmError
from .runner import build_collocation, build_problem, make_estimator

AXIS_NAMES = ("sigma0", "sigmac", "n_units")


@dataclass(frozen=True)
class SweepSpec:
    """Axes, base configuration, and per-cell seeds of one sweep."""

    axis1: tuple[str, tuple[float, ...]]
    base: RunConfig
    axis2: tuple[str, tuple[float, ...]] | None = None
    seeds: tuple[int, ...] = (0, 1, 2)

    def __post_init__(self) -> None:
        for axis in filter(None, (self.axis1, self.axis2)):
            name, values = axis
            if name not in AXIS_NAMES:
                raise ConfigError(
                    f"unknown sweep axis {name!r}; choose from {', '.join(AXIS_NAMES)}"
                )
            if len(values) == 0:
                raise ConfigError(f"sweep axis {name!r} has no values")
            if any(b <= a for a, b in zip(values, values[1:])):
                raise ConfigError(f"sweep axis {name!r} must be strictly increasing")
        if not self.seeds:
            raise ConfigError("sweep needs at least one seed")

    def cells(self) -> list[dict]:
        """Axis-value combinations in lexicographic order."""
        name1, values1 = self.axis1
        if self.axis2 is None:
            return [{name1: v} for v in values1]
        name2, values2 = self.axis2
        return [{name1: v1, name2: v2} for v1 in values1 for v2 in values2]


@dataclass(frozen=True)
class SweepCell:
    """One sweep row: axis values and seed-aggregated results."""

    axis_values: tuple[float, ...]
    mean_residual: float
    std_residual: float
    mean_time_s: float
    status: str


def _apply_axes(base: RunConfig, overrides: dict) -> RunConfig:
    cast = {k: (int(v) if k == "n_units" else float(v)) for k, v in overrides.items()}
    return replace(base, **cast)


def _run_cell(spec: SweepSpec, overrides: dict) -> SweepCell:
    axis_values = tuple(float(v) for v in overrides.values())
    try:
        cfg = _apply_axes(spec.base, overrides)
        points = build_collocation(cfg)
        problem, _ = build_problem(cfg)
        residuals, times = [], []
        for seed in spec.seeds:
            est = make_estimator(cfg, seed=seed).fit(problem, points)
            residuals.append(est.report_.residual_mean_abs)
            times.append(est.fit_time_s_)
        return SweepCell(
            axis_values=axis_values,
            mean_residual=float(np.mean(residuals)),
            std_residual=float(np.std(residuals)),
            mean_time_s=float(np.mean(times)),
            status="ok",
        )
    except (RbfPielmError, ValueError) as exc:
        return SweepCell(
            axis_values=axis_values,
            mean_residual=math.nan,
            std_residual=math.nan,
            mean_time_s=math.nan,
            status=f"error: {exc}",
        )


def run_sweep(spec: SweepSpec, threads: int = 1) -> list[SweepCell]:
    """Run every cell (optionally in parallel) and return rows in axis order."""
    cells = spec.cells()
    if threads <= 1:
        return [_run_cell(spec, overrides) for overrides in cells]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        futures = [pool.submit(_run_cell, spec, ov) for ov in cells]
        return [f.result() for f in futures]


def write_sweep_csv(spec: SweepSpec, rows: list[SweepCell], path) -> None:
    """Write sweep results; written only after every cell has finished."""
    path = Path(path)
    with path.open("w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["axis1", "axis2", "mean_residual", "std_residual",
                         "mean_time_s", "status"])
        for row in rows:
            a1 = repr(row.axis_values[0])
            a2 = repr(row.axis_values[1]) if len(row.axis_values) > 1 else ""
            writer.writerow([
                a1, a2,
                repr(row.mean_residual),
                repr(row.std_residual),
                format(row.mean_time_s, ".6g"),
                row.status,
            ])


def default_sweep_spec(base: RunConfig) -> SweepSpec:
    """The standard 10 x 10 width-parameter grid, three seeds per cell."""
    sigma0_values = tuple(np.linspace(0.05, 1.0, 10))
    sigmac_values = tuple(np.linspace(0.0, 2.0, 10))
    return SweepSpec(
        axis1=("sigma0", sigma0_values),
        axis2=("sigmac", sigmac_values),
        base=base,
        seeds=(0, 1, 2),
    )


def parse_sweep_file(path, base: RunConfig) -> SweepSpec:
    """Parse a sweep spec file of key=value lines.

    Keys: axis1_name, axis1_values (comma-separated), optional axis2_name and
    axis2_values, optional seeds (comma-separated integers, default 0,1,2).
    """
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise ConfigError(f"cannot read sweep spec {path}: {exc}") from exc
    raw: dict[str, str] = {}
    known = {"axis1_name", "axis1_values", "axis2_name", "axis2_values", "seeds"}
    for line_no, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        if "=" not in stripped:
            raise ConfigError(f"{path}:{line_no}: expected 'key = value'")
        key, _, value = stripped.partition("=")
        key = key.strip()
        if key not in known:
            raise ConfigError(f"{path}:{line_no}: unknown key {key!r}")
        raw[key] = value.strip()
    if "axis1_name" not in raw or "axis1_values" not in raw:
        raise ConfigError(f"{path}: axis1_name and axis1_values are required")

    def parse_values(text_values: str, key: str) -> tuple[float, ...]:
        try:
            return tuple(float(v) for v in text_values.split(","))
        except ValueError as exc:
            raise ConfigError(f"{path}: key {key!r}: {exc}") from exc

    axis1 = (raw["axis1_name"], parse_values(raw["axis1_values"], "axis1_values"))
    axis2 = None
    if "axis2_name" in raw or "axis2_values" in raw:
        if "axis2_name" not in raw or "axis2_values" not in raw:
            raise ConfigError(f"{path}: axis2_name and axis2_values go together")
        axis2 = (raw["axis2_name"], parse_values(raw["axis2_values"], "axis2_values"))
    seeds: tuple[int, ...] = (0, 1, 2)
    if "seeds" in raw:
        try:
            seeds = tuple(int(v) for v in raw["seeds"].split(","))
        except ValueError as exc:
            raise ConfigError(f"{path}: key 'seeds': {exc}") from exc
    return SweepSpec(axis1=axis1, base=base, axis2=axis2, seeds=seeds)
