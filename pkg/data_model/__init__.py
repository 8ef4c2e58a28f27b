"""
data_model — wspólne struktury danych chaos-degree.

Użycie:
  from data_model import Box, EcdResult, Diverged, ErrorCode, ...

Moduły:
  common  — Box, State, LogBase
  errors  — ErrorCode, ChaosDegreeError i wyjątki pochodne
  results — Diverged, EcdResult, LyapunovSpectrum
"""

from .errors import (
    ErrorCode,
    ChaosDegreeError,
    InvalidConfig,
    UnknownMap,
    NonFiniteResult,
    NoJacobian,
    NonFiniteInput,
    EmptyCounts,
    MapSpecError,
    ParseError,
    ArityError,
    UnboundVariable,
)
from .common import Box, State, LogBase
from .results import Diverged, EcdResult, LyapunovSpectrum

__all__ = [
    # errors
    "ErrorCode",
    "ChaosDegreeError",
    "InvalidConfig",
    "UnknownMap",
    "NonFiniteResult",
    "NoJacobian",
    "NonFiniteInput",
    "EmptyCounts",
    "MapSpecError",
    "ParseError",
    "ArityError",
    "UnboundVariable",
    # common
    "Box",
    "State",
    "LogBase",
    # results
    "Diverged",
    "EcdResult",
    "LyapunovSpectrum",
]
