"""
Struktury wynikowe: Diverged, EcdResult, LyapunovSpectrum.

Wszystkie są niemutowalne i przenośne między procesami (pickle),
bo sweep scala je z wielu workerów.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .common import LogBase


@dataclass(frozen=True, slots=True)
class Diverged:
    """
    Orbita uciekła: norma sup przekroczyła escape_radius albo stan był NaN/∞.

    - step:   numer kroku k (x⁽ᵏ⁾, 1-based), na którym wykryto ucieczkę
    - reason: krótki opis ("non-finite" / "escape")
    """
    step:   int
    reason: str = "escape"


@dataclass(frozen=True, slots=True)
class EcdResult:
    """
    Wynik estymacji entropijnego stopnia chaosu.

    - ecd:                D = S(p̄) − I(p;Λ*)  (≥ 0)
    - shannon_out:        S(p̄), entropia rozkładu wyjściowego
    - mutual_info:        I(p;Λ*), entropia wzajemna wejście/wyjście
    - conditional_entropy: postać bezpośrednia Σ r_ij log(p_i / r_ij)
    - occupied_cells:     liczba komórek z p̄_j > 0
    - overflow_fraction:  udział par dotykających komórki przepełnienia
    - total:              n, liczba zliczonych par
    - log_base:           podstawa logarytmu
    """
    ecd:                 float
    shannon_out:         float
    mutual_info:         float
    conditional_entropy: float
    occupied_cells:      int
    overflow_fraction:   float
    total:               int
    log_base:            LogBase = LogBase.E

    @property
    def identity_gap(self) -> float:
        """|(S − I) − Σ r log(p/r)|: kontrola tożsamości obu ścieżek."""
        return abs((self.shannon_out - self.mutual_info) - self.conditional_entropy)


@dataclass(frozen=True, slots=True)
class LyapunovSpectrum:
    """
    Widmo wykładników Lapunowa posortowane malejąco.

    - exponents:        λ₁ ≥ … ≥ λₘ; -inf oznacza osobliwą ramę (zerowy R_kk)
    - n_used:           liczba kroków orbity użytych do uśrednienia
    - numeric_jacobian: True gdy pochodne liczono różnicami skończonymi
    """
    exponents:        tuple[float, ...]
    n_used:           int
    numeric_jacobian: bool = False

    @property
    def maximal(self) -> float:
        return self.exponents[0]

    @property
    def singular(self) -> bool:
        return any(math.isinf(v) and v < 0 for v in self.exponents)
