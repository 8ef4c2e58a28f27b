"""
estimator/entropy.py — entropijny stopień chaosu z tablicy przejść.

Oba rozkłady brzegowe pochodzą z tej samej tablicy łącznej:
  p_i  = Σ_j r_ij     (wejście, x⁽ᵏ⁾)
  p̄_j  = Σ_i r_ij     (wyjście, x⁽ᵏ⁺¹⁾)

  S(p̄)   = −Σ_j p̄_j log p̄_j
  I(p;Λ*) = Σ_ij r_ij log(r_ij / (p_i p̄_j))
  D       = S(p̄) − I(p;Λ*) = Σ_ij r_ij log(p_i / r_ij)   (entropia warunkowa)

0·log 0 := 0 (sumujemy tylko po niezerowych wpisach). Logarytmy liczone
na ilorazach liczb całkowitych (zliczeń), sumy przez math.fsum.
"""

from __future__ import annotations

import math

import numpy as np

from data_model import EcdResult, EmptyCounts, LogBase

from .counts import TransitionCounts


def ecd(counts: TransitionCounts, log_base: LogBase = LogBase.E) -> EcdResult:
    """
    Liczy D, S(p̄), I oraz postać bezpośrednią (kontrola tożsamości).
    EmptyCounts gdy total = 0.
    """
    n = counts.total
    if n == 0:
        raise EmptyCounts("Brak zliczonych przejść (total = 0).")

    rows, cols, c = counts.entries()
    row_tot = counts.row_totals()
    col_tot = counts.column_totals()

    c_f   = c.astype(np.float64)
    row_f = row_tot[rows].astype(np.float64)
    col_f = col_tot[cols].astype(np.float64)
    weights = c_f / n

    out = col_tot[col_tot > 0].astype(np.float64) / n
    shannon_out = 0.0 - math.fsum((out * np.log(out)).tolist())
    mutual_info = math.fsum((weights * np.log(c_f * n / (row_f * col_f))).tolist())
    direct      = math.fsum((weights * np.log(row_f / c_f)).tolist())

    factor = LogBase(log_base).factor
    shannon_out /= factor
    mutual_info /= factor
    direct      /= factor

    # każdy składnik postaci bezpośredniej jest ≥ 0 (row ≥ c), a entropia
    # warunkowa nie przekracza S(p̄); przycinamy tylko błąd zaokrągleń
    value = min(direct, shannon_out) if shannon_out > 0.0 else 0.0

    return EcdResult(
        ecd=value,
        shannon_out=shannon_out,
        mutual_info=mutual_info,
        conditional_entropy=direct,
        occupied_cells=int(np.count_nonzero(col_tot)),
        overflow_fraction=counts.overflow_hits / n,
        total=n,
        log_base=LogBase(log_base),
    )
