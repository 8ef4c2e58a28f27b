"""
sweep/types.py — konfiguracja przemiatania i wiersz wyniku.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import StrEnum

from data_model import InvalidConfig, LogBase, NoJacobian
from dynsys import MapSystem
from estimator import OrbitConfig
from partition import GridPartition


class Analysis(StrEnum):
    ECD      = "ecd"
    LYAPUNOV = "lyapunov"


class RowStatus(StrEnum):
    OK       = "ok"
    DIVERGED = "diverged"
    OVERFLOW = "overflow"


@dataclass(frozen=True, slots=True)
class SweepConfig:
    """
    Jednoparametrowa rodzina: param przebiega [lo, hi] w `points` równych
    krokach (oba końce włącznie); pozostałe parametry mapy z base_params.

    - analyses:     podzbiór {ecd, lyapunov}
    - base_params:  pełna krotka parametrów (wartość `param` jest w niej nadpisywana)
    - renorm_every: co ile kroków ortonormalizacja QR (widmo m > 1)
    """
    system:       MapSystem
    param:        str
    lo:           float
    hi:           float
    points:       int
    orbit:        OrbitConfig
    partition:    GridPartition
    analyses:     frozenset[Analysis] = frozenset({Analysis.ECD, Analysis.LYAPUNOV})
    log_base:     LogBase = LogBase.E
    base_params:  tuple[float, ...] = ()
    renorm_every: int = 1
    param_index:  int = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if self.param not in self.system.param_names:
            raise InvalidConfig(
                f"Mapa '{self.system.name}' nie ma parametru '{self.param}' "
                f"(dostępne: {', '.join(self.system.param_names) or '—'})."
            )
        if not self.lo < self.hi:
            raise InvalidConfig(f"Zakres przemiatania wymaga lo < hi, otrzymano {self.lo}:{self.hi}.")
        if self.points < 2:
            raise InvalidConfig(f"Liczba punktów musi być ≥ 2, otrzymano {self.points}.")
        if not self.analyses:
            raise InvalidConfig("Pusta lista analiz (dostępne: ecd, lyapunov).")
        if Analysis.LYAPUNOV in self.analyses and not self.system.has_jacobian:
            raise NoJacobian(self.system.name)
        if self.partition.dimension != self.system.dimension:
            raise InvalidConfig(
                f"Podział ma wymiar {self.partition.dimension}, mapa '{self.system.name}' {self.system.dimension}."
            )
        if self.renorm_every < 1:
            raise InvalidConfig(f"renorm_every musi być ≥ 1, otrzymano {self.renorm_every}.")

        n_params = len(self.system.param_names)
        base = self.base_params or self.system.param_defaults
        if len(base) != n_params:
            # brak wartości domyślnych: uzupełniamy tylko, gdy przemiatany jest jedyny parametr
            if n_params != 1:
                raise InvalidConfig(f"Mapa '{self.system.name}': brak wartości pozostałych parametrów.")
            base = (self.lo,)
        object.__setattr__(self, "base_params", tuple(float(v) for v in base))
        object.__setattr__(self, "analyses", frozenset(Analysis(a) for a in self.analyses))
        object.__setattr__(self, "param_index", self.system.param_names.index(self.param))

    def param_value(self, index: int) -> float:
        """lo + index·(hi − lo)/(points − 1); ostatni punkt to dokładnie hi."""
        if index == self.points - 1:
            return float(self.hi)
        return self.lo + index * (self.hi - self.lo) / (self.points - 1)

    def params_at(self, index: int) -> tuple[float, ...]:
        values = list(self.base_params)
        values[self.param_index] = self.param_value(index)
        return tuple(values)


@dataclass(frozen=True, slots=True)
class SweepRow:
    """
    Jeden punkt przemiatania.

    ecd / lyapunov są None, gdy analiza nie była zlecona albo orbita
    uciekła (CSV: puste pola). overflow_fraction jest None przy dywergencji
    i bez analizy ECD.
    """
    index:             int
    param_value:       float
    ecd:               float | None
    lyapunov:          tuple[float, ...] | None
    status:            RowStatus
    overflow_fraction: float | None = None
    numeric_jacobian:  bool = False
