"""
sweep — ECD i wykładniki Lapunowa wzdłuż jednoparametrowej rodziny map.

Publiczne API:
  SweepConfig, SweepRow, Analysis, RowStatus
  run_sweep(cfg, workers, progress)   → list[SweepRow] (uporządkowane po index)
  evaluate_row(cfg, index)            → SweepRow
"""

from .types  import Analysis, RowStatus, SweepConfig, SweepRow
from .runner import evaluate_row, run_sweep

__all__ = [
    "Analysis",
    "RowStatus",
    "SweepConfig",
    "SweepRow",
    "evaluate_row",
    "run_sweep",
]
