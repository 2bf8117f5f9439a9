"""Zeta functions attached to the exceptional group G2 and numerical checks of their zeros."""

from __future__ import annotations

from .config import Config, get_config, load_config, set_config, using
from .errors import (
    AtPole,
    ContourNearZero,
    EvalError,
    NoConvergence,
    NonIntegerWinding,
    OutOfValidatedRange,
    PrecisionLoss,
)

__version__ = "0.1.0"

__all__ = [
    "AtPole",
    "Config",
    "ContourNearZero",
    "EvalError",
    "NoConvergence",
    "NonIntegerWinding",
    "OutOfValidatedRange",
    "PrecisionLoss",
    "get_config",
    "load_config",
    "set_config",
    "using",
]
