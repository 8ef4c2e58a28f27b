"""
estimator/pipeline.py — orbita → zliczenia → ECD w jednym wywołaniu.
"""

from __future__ import annotations

from data_model import Diverged, EcdResult, LogBase
from dynsys import MapSystem
from partition import GridPartition

from .counts import count_transitions
from .entropy import ecd
from .orbit import OrbitConfig, generate_orbit


def ecd_pipeline(
    system:    MapSystem,
    params:    tuple[float, ...],
    partition: GridPartition,
    cfg:       OrbitConfig,
    log_base:  LogBase = LogBase.E,
) -> EcdResult | Diverged:
    """ECD dla jednej wartości parametrów; Diverged przechodzi bez zmian."""
    orbit = generate_orbit(system, params, cfg)
    if isinstance(orbit, Diverged):
        return orbit
    return ecd(count_transitions(orbit, partition), log_base)
