"""Run configuration: numeric tolerances, grids, cache location and seed.

Values come from dataclass defaults, optionally overridden by an INI-style
file (``key = value`` under any section header) and then by ``G2ZETA_*``
environment variables.
"""

from __future__ import annotations

import configparser
import contextlib
import dataclasses
import os
from dataclasses import dataclass, fields
from pathlib import Path
from typing import Iterator, Mapping

ENV_PREFIX = "G2ZETA_"


@dataclass(frozen=True)
class Config:
    # special functions
    pole_exclusion_radius: float = 1e-8
    chi_series_radius: float = 1e-3
    # zeta functions of G2
    zeta_pole_radius: float = 1e-4
    ill_conditioning_ratio: float = 1e6
    dual_path_rtol: float = 1e-8
    # zero finding
    scan_step: float = 0.01
    xi_scan_step: float = 0.05
    refine_tol: float = 1e-8
    contour_points: int = 2000
    contour_clearance: float = 1e-4
    # verification
    default_T: float = 60.0
    grid_spacing: float = 0.1
    seed: int = 7
    jobs: int = 1
    cache_dir: str = ".g2zeta_cache"

    def __post_init__(self):
        for f in fields(self):
            value = getattr(self, f.name)
            if isinstance(value, (int, float)) and not isinstance(value, bool):
                if f.name == "seed":
                    if value < 0:
                        raise ValueError("seed must be non-negative")
                elif value <= 0:
                    raise ValueError(f"config field {f.name!r} must be positive, got {value!r}")

    def replace(self, **changes) -> "Config":
        return dataclasses.replace(self, **changes)


_FIELD_TYPES = {f.name: f.type for f in fields(Config)}


def _coerce(name: str, raw: str):
    kind = _FIELD_TYPES[name]
    if kind in ("int", int):
        return int(raw)
    if kind in ("float", float):
        return float(raw)
    return raw


def _apply(values: Mapping[str, str], source: str) -> dict:
    out = {}
    for key, raw in values.items():
        name = key.strip().lower()
        if name not in _FIELD_TYPES:
            raise ValueError(f"unknown config key {key!r} in {source}")
        out[name] = _coerce(name, raw.strip())
    return out


def load_config(path: str | os.PathLike | None = None, environ: Mapping[str, str] | None = None) -> Config:
    """Build a Config from defaults, an optional file and the environment."""
    overrides: dict = {}
    if path is not None:
        parser = configparser.ConfigParser()
        text = Path(path).read_text()
        if not text.lstrip().startswith("["):
            text = "[g2zeta]\n" + text
        parser.read_string(text, source=str(path))
        for section in parser.sections():
            overrides.update(_apply(dict(parser.items(section)), str(path)))
    env = os.environ if environ is None else environ
    env_values = {k[len(ENV_PREFIX):]: v for k, v in env.items() if k.startswith(ENV_PREFIX)}
    overrides.update(_apply(env_values, "environment"))
    return Config(**overrides)


_current = Config()


def get_config() -> Config:
    return _current


def set_config(cfg: Config) -> None:
    global _current
    _current = cfg


@contextlib.contextmanager
def using(cfg: Config) -> Iterator[Config]:
    """Temporarily install ``cfg`` as the active configuration."""
    global _current
    previous = _current
    _current = cfg
    try:
        yield cfg
    finally:
        _current = previous
