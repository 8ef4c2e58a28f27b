"""
estimator — orbity, zliczenia przejść i entropijny stopień chaosu (ECD).

Publiczne API:
  OrbitConfig                                      konfiguracja orbity
  generate_orbit(system, params, cfg)              → ndarray (n+1, m) | Diverged
  trajectory(system, params, cfg, start, stop)     → ndarray | Diverged
  count_transitions(orbit, partition)              → TransitionCounts
  ecd(counts, log_base)                            → EcdResult
  ecd_pipeline(system, params, partition, cfg, lb) → EcdResult | Diverged
"""

from .orbit    import (
    DEFAULT_ESCAPE_RADIUS,
    DEFAULT_N,
    DEFAULT_ROUNDOFF,
    DEFAULT_TRANSIENT,
    OrbitConfig,
    generate_orbit,
    trajectory,
)
from .counts   import TransitionCounts, count_transitions
from .entropy  import ecd
from .pipeline import ecd_pipeline

__all__ = [
    "OrbitConfig",
    "generate_orbit",
    "trajectory",
    "TransitionCounts",
    "count_transitions",
    "ecd",
    "ecd_pipeline",
    "DEFAULT_N",
    "DEFAULT_TRANSIENT",
    "DEFAULT_ESCAPE_RADIUS",
    "DEFAULT_ROUNDOFF",
]
