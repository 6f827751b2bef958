"""Run configuration: documented key=value file format, presets, hashing.

Precedence, lowest to highest: global defaults, preset defaults, config file,
command-line flags. Every field has a default, so an empty configuration is a
valid cavity run.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, fields
from pathlib import Path

from .exceptions import ConfigError
from .solver import DEFAULT_RCOND

PRESET_NAMES = ("cavity", "mms-k10", "mms-k20", "mms-custom")

#: Per-preset default overrides applied on top of the global field defaults.
#: The oscillatory manufactured cases need kernels narrow enough to resolve
#: wavelength 2*pi/k, hence the reduced width parameters.
PRESET_DEFAULTS: dict[str, dict] = {
    "cavity": {},
    "mms-k10": {"n_units": 2000, "grid_nx": 60, "grid_ny": 60,
                "sigma0": 0.1, "sigmac": 0.15, "k1": 10.0, "k2": 10.0},
    "mms-k20": {"n_units": 2000, "grid_nx": 60, "grid_ny": 60,
                "sigma0": 0.1, "sigmac": 0.15, "k1": 20.0, "k2": 20.0},
    "mms-custom": {"n_units": 400, "grid_nx": 40, "grid_ny": 40,
                   "k1": 2.0, "k2": 2.0},
}


@dataclass(frozen=True)
class RunConfig:
    """Full configuration of one solve."""

    preset: str = "cavity"
    seed: int = 0
    n_units: int = 750
    sigma0: float = 0.3
    sigmac: float = 0.93
    pai: bool = True
    boundary_oversample: float = 1.0
    rcond: float = DEFAULT_RCOND
    scale_interior: bool = False
    clamped: bool = False
    threads: int = 1
    grid_nx: int = 60
    grid_ny: int = 60
    cavity_interior_n: int = 48
    cavity_boundary_n: int = 96
    k1: float = 10.0
    k2: float = 10.0
    out_dir: str = "out"
    emit_profiles: bool = True
    emit_field: bool = True
    emit_error_map: bool = True
    emit_matrix: bool = False

    def __post_init__(self) -> None:
        if self.preset not in PRESET_NAMES:
            raise ConfigError(
                f"unknown preset {self.preset!r}; choose from {', '.join(PRESET_NAMES)}"
            )


_BOOL_WORDS = {"true": True, "1": True, "yes": True, "on": True,
               "false": False, "0": False, "no": False, "off": False}

_FIELD_TYPES = {f.name: f.type for f in fields(RunConfig)}


def _parse_value(key: str, raw: str, line_no: int):
    ftype = _FIELD_TYPES[key]
    try:
        if ftype == "bool":
            word = raw.strip().lower()
            if word not in _BOOL_WORDS:
                raise ValueError(f"expected a boolean, got {raw!r}")
            return _BOOL_WORDS[word]
        if ftype == "int":
            return int(raw)
        if ftype == "float":
            return float(raw)
        return raw.strip()
    except ValueError as exc:
        raise ConfigError(f"line {line_no}: key {key!r}: {exc}") from exc


def parse_config_text(text: str, source: str = "<config>") -> dict:
    """Parse key=value lines into an override dict.

    Blank lines and lines starting with '#' are ignored. Unknown keys and
    malformed lines raise `ConfigError` with the offending line number.
    """
    overrides: dict = {}
    for line_no, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        if "=" not in stripped:
            column = len(line) - len(line.lstrip()) + 1
            raise ConfigError(
                f"{source}:{line_no}:{column}: expected 'key = value', got {stripped!r}"
            )
        key, _, raw = stripped.partition("=")
        key = key.strip()
        if key not in _FIELD_TYPES:
            raise ConfigError(f"{source}:{line_no}: unknown key {key!r}")
        overrides[key] = _parse_value(key, raw, line_no)
    return overrides


def parse_config_file(path) -> dict:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise ConfigError(f"cannot read config file {path}: {exc}") from exc
    return parse_config_text(text, source=str(path))


def build_config(preset: str | None = None,
                 file_overrides: dict | None = None,
                 flag_overrides: dict | None = None) -> RunConfig:
    """Merge defaults, preset defaults, file values, and flag values."""
    merged: dict = {}
    file_overrides = dict(file_overrides or {})
    flag_overrides = dict(flag_overrides or {})
    name = preset or flag_overrides.get("preset") or file_overrides.get("preset") \
        or RunConfig().preset
    if name not in PRESET_NAMES:
        raise ConfigError(
            f"unknown preset {name!r}; choose from {', '.join(PRESET_NAMES)}"
        )
    merged.update(PRESET_DEFAULTS[name])
    merged.update(file_overrides)
    merged.update(flag_overrides)
    merged["preset"] = name
    return RunConfig(**merged)


def serialize_config(cfg: RunConfig) -> str:
    """Canonical key=value rendering; parse_config_text round-trips it."""
    lines = []
    for f in fields(RunConfig):
        value = getattr(cfg, f.name)
        if isinstance(value, bool):
            value = "true" if value else "false"
        elif isinstance(value, float):
            value = repr(value)  # shortest exact round-trip
        lines.append(f"{f.name} = {value}")
    return "\n".join(lines) + "\n"


#: Fields that do not influence computed numbers (output plumbing only).
_NON_NUMERIC_FIELDS = frozenset(
    {"out_dir", "emit_profiles", "emit_field", "emit_error_map", "emit_matrix"}
)


def config_hash(cfg: RunConfig) -> str:
    """Short digest identifying the numerical configuration.

    Output-location and emit-flag fields are excluded, so two runs that must
    produce identical numbers share a hash wherever they write.
    """
    lines = [
        line for line in serialize_config(cfg).splitlines()
        if line.split(" =")[0] not in _NON_NUMERIC_FIELDS
    ]
    return hashlib.sha256("\n".join(lines).encode()).hexdigest()[:16]
