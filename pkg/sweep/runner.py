"""
sweep/runner.py — obliczanie wierszy przemiatania, szeregowo lub w puli procesów.

Każdy wiersz to czysta funkcja (SweepConfig, index); workery dostają
konfigurację raz, przez initializer puli, a wyniki wracają przez
uporządkowane imap, więc kolejność i bity nie zależą od liczby workerów.
"""

from __future__ import annotations

import math
import multiprocessing
from collections.abc import Callable

from data_model import Diverged, NoJacobian
from estimator import count_transitions, ecd, generate_orbit
from lyapunov import mean_log_derivative, qr_spectrum

from .types import Analysis, RowStatus, SweepConfig, SweepRow

type ProgressFn = Callable[[SweepRow], None]

_worker_cfg: SweepConfig | None = None


def evaluate_row(cfg: SweepConfig, index: int) -> SweepRow:
    """
    Liczy jeden wiersz; dywergencja daje status diverged i puste pola.
    ECD i wykładniki Lapunowa liczone są na tej samej, raz wygenerowanej orbicie.
    """
    value   = cfg.param_value(index)
    params  = cfg.params_at(index)
    system  = cfg.system
    numeric = system.numeric_jacobian

    if Analysis.LYAPUNOV in cfg.analyses and system.jacobian_fn is None:
        raise NoJacobian(system.name)

    orbit = generate_orbit(system, params, cfg.orbit)
    if isinstance(orbit, Diverged):
        return SweepRow(index, value, None, None, RowStatus.DIVERGED, numeric_jacobian=numeric)

    ecd_value: float | None = None
    overflow:  float | None = None
    exponents: tuple[float, ...] | None = None

    if Analysis.ECD in cfg.analyses:
        result = ecd(count_transitions(orbit, cfg.partition), cfg.log_base)
        ecd_value = result.ecd
        overflow  = result.overflow_fraction

    if Analysis.LYAPUNOV in cfg.analyses:
        states = orbit[: cfg.orbit.n]
        if system.dimension == 1:
            exponents = (mean_log_derivative(system, params, states),)
        else:
            exponents = qr_spectrum(system, params, states, cfg.renorm_every).exponents

    status = RowStatus.OVERFLOW if overflow else RowStatus.OK
    return SweepRow(index, value, ecd_value, exponents, status, overflow, numeric)


def _init_worker(cfg: SweepConfig) -> None:
    global _worker_cfg
    _worker_cfg = cfg


def _worker_row(index: int) -> SweepRow:
    assert _worker_cfg is not None
    return evaluate_row(_worker_cfg, index)


def run_sweep(
    cfg:      SweepConfig,
    workers:  int = 1,
    progress: ProgressFn | None = None,
) -> list[SweepRow]:
    """
    Zwraca dokładnie cfg.points wierszy uporządkowanych po index.
    progress (opcjonalny) jest wołany po każdym gotowym wierszu, w kolejności.
    """
    workers = max(1, min(int(workers), cfg.points))
    rows: list[SweepRow] = []

    if workers == 1:
        for index in range(cfg.points):
            row = evaluate_row(cfg, index)
            rows.append(row)
            if progress is not None:
                progress(row)
        return rows

    chunksize = max(1, math.ceil(cfg.points / (workers * 8)))
    with multiprocessing.Pool(workers, initializer=_init_worker, initargs=(cfg,)) as pool:
        for row in pool.imap(_worker_row, range(cfg.points), chunksize=chunksize):
            rows.append(row)
            if progress is not None:
                progress(row)
    return rows
