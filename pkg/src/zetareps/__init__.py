"""Integral and series representations of the Riemann zeta function, with
reference evaluators, critical-line tools and identity checks."""
from .core import (
    AllS,
    ConfigError,
    ConvergenceError,
    Custom,
    DomainError,
    EvalOptions,
    EvalOutcome,
    PoleError,
    RegionError,
    SigmaBetween,
    SigmaGreaterThan,
    SigmaLessThan,
    UnknownIdError,
    ZetaRepsError,
)
from .reference import eta_reference, zeta_reference

__version__ = "0.1.0"

__all__ = [
    "AllS",
    "ConfigError",
    "ConvergenceError",
    "Custom",
    "DomainError",
    "EvalOptions",
    "EvalOutcome",
    "PoleError",
    "RegionError",
    "SigmaBetween",
    "SigmaGreaterThan",
    "SigmaLessThan",
    "UnknownIdError",
    "ZetaRepsError",
    "eta_reference",
    "zeta_reference",
]
