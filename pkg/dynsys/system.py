"""
dynsys/system.py — abstrakcja mapy dyskretnej x⁽ⁿ⁾ = f(x⁽ⁿ⁻¹⁾).

Publiczne API:
  MapSystem                         niemutowalny opis mapy
  step(system, x, params)           → f(x), z kontrolą skończoności
  jacobian(system, x, params)       → macierz m×m (numpy)
  resolve_params(system, overrides) → krotka parametrów w kolejności param_names
  NumericJacobian                   jakobian z różnic centralnych (dla map DSL)
"""

from __future__ import annotations

import math
from collections.abc import Callable, Mapping, Sequence
from dataclasses import dataclass, field

import numpy as np

from data_model import Box, InvalidConfig, NoJacobian, NonFiniteResult, State

type Params   = tuple[float, ...]
type StepFn   = Callable[[State, Params], State]
type JacFn    = Callable[[State, Params], np.ndarray]


# ---------------------------------------------------------------------------
# MapSystem
# ---------------------------------------------------------------------------

@dataclass(frozen=True, slots=True)
class MapSystem:
    """
    Nazwana mapa m-wymiarowa.

    - name:             identyfikator (np. "bernoulli")
    - dimension:        m ≥ 1
    - domain:           pudełko dziedziny I
    - param_names:      nazwy parametrów w kolejności przekazywania
    - step_fn:          (x, params) → f(x); czysta i deterministyczna
    - jacobian_fn:      (x, params) → Df(x) albo None
    - numeric_jacobian: True gdy jacobian_fn to różnice skończone
    - param_defaults:   wartości domyślne parametrów
    - x0:               domyślny punkt startowy
    - sweep_range:      domyślny zakres przemiatania (param, lo, hi) albo None
    - kernel:           nazwa skompilowanego jądra (dynsys.kernels) albo None
    - description:      wzór mapy do wyświetlenia
    """
    name:             str
    dimension:        int
    domain:           Box
    param_names:      tuple[str, ...]
    step_fn:          StepFn
    jacobian_fn:      JacFn | None = None
    numeric_jacobian: bool = False
    param_defaults:   Params = ()
    x0:               State = ()
    sweep_range:      tuple[str, float, float] | None = None
    kernel:           str | None = None
    description:      str = field(default="", compare=False)

    def __post_init__(self) -> None:
        if self.dimension < 1:
            raise InvalidConfig(f"Mapa '{self.name}': wymiar musi być ≥ 1.")
        if self.domain.dimension != self.dimension:
            raise InvalidConfig(
                f"Mapa '{self.name}': dziedzina ma wymiar {self.domain.dimension}, "
                f"a mapa {self.dimension}."
            )
        if self.param_defaults and len(self.param_defaults) != len(self.param_names):
            raise InvalidConfig(f"Mapa '{self.name}': liczba wartości domyślnych ≠ liczba parametrów.")
        if self.x0 and len(self.x0) != self.dimension:
            raise InvalidConfig(f"Mapa '{self.name}': x0 ma zły wymiar.")

    @property
    def has_jacobian(self) -> bool:
        return self.jacobian_fn is not None

    def step(self, x: State, params: Params) -> State:
        return step(self, x, params)

    def jacobian(self, x: State, params: Params) -> np.ndarray:
        return jacobian(self, x, params)


# ---------------------------------------------------------------------------
# Operacje
# ---------------------------------------------------------------------------

def _check_call(system: MapSystem, x: Sequence[float], params: Sequence[float]) -> None:
    if len(params) != len(system.param_names):
        raise InvalidConfig(
            f"Mapa '{system.name}' oczekuje {len(system.param_names)} parametrów "
            f"({', '.join(system.param_names)}), otrzymano {len(params)}."
        )
    if len(x) != system.dimension:
        raise InvalidConfig(f"Mapa '{system.name}': stan musi mieć {system.dimension} współrzędnych.")
    if not all(math.isfinite(v) for v in x):
        raise NonFiniteResult(f"Mapa '{system.name}': stan wejściowy nie jest skończony: {tuple(x)}.")


def step(system: MapSystem, x: Sequence[float], params: Sequence[float]) -> State:
    """Zwraca f(x). NonFiniteResult gdy wynik zawiera NaN/∞."""
    _check_call(system, x, params)
    y = system.step_fn(tuple(float(v) for v in x), tuple(float(p) for p in params))
    if not all(math.isfinite(v) for v in y):
        raise NonFiniteResult(f"Mapa '{system.name}': krok z {tuple(x)} dał {y}.")
    return y


def jacobian(system: MapSystem, x: Sequence[float], params: Sequence[float]) -> np.ndarray:
    """Macierz Df(x) (m×m). NoJacobian gdy mapa go nie udostępnia."""
    if system.jacobian_fn is None:
        raise NoJacobian(system.name)
    _check_call(system, x, params)
    return np.asarray(
        system.jacobian_fn(tuple(float(v) for v in x), tuple(float(p) for p in params)),
        dtype=np.float64,
    ).reshape(system.dimension, system.dimension)


def resolve_params(system: MapSystem, overrides: Mapping[str, float] | None = None) -> tuple[float, ...]:
    """
    Buduje krotkę parametrów: wartości domyślne nadpisane przez overrides.

    InvalidConfig gdy podano nieznany parametr albo brak wartości
    dla parametru bez domyślnej.
    """
    overrides = dict(overrides or {})
    unknown = sorted(set(overrides) - set(system.param_names))
    if unknown:
        raise InvalidConfig(
            f"Mapa '{system.name}' nie ma parametru: {', '.join(unknown)} "
            f"(dostępne: {', '.join(system.param_names) or '—'})."
        )
    values: list[float] = []
    for i, name in enumerate(system.param_names):
        if name in overrides:
            values.append(float(overrides[name]))
        elif system.param_defaults:
            values.append(float(system.param_defaults[i]))
        else:
            raise InvalidConfig(f"Mapa '{system.name}': brak wartości parametru '{name}'.")
    return tuple(values)


# ---------------------------------------------------------------------------
# Jakobian numeryczny
# ---------------------------------------------------------------------------

@dataclass(frozen=True, slots=True)
class NumericJacobian:
    """
    Jakobian z różnic centralnych: h = 10⁻⁶·max(1, |xₖ|).

    Obiekt wywoływalny (zamiast domknięcia), żeby MapSystem dało się
    przesłać do procesu workera.
    """
    step_fn: StepFn

    def __call__(self, x: State, params: Params) -> np.ndarray:
        m = len(x)
        jac = np.empty((m, m), dtype=np.float64)
        for k in range(m):
            h = 1e-6 * max(1.0, abs(x[k]))
            plus  = list(x)
            minus = list(x)
            plus[k]  += h
            minus[k] -= h
            f_plus  = self.step_fn(tuple(plus), params)
            f_minus = self.step_fn(tuple(minus), params)
            for i in range(m):
                jac[i, k] = (f_plus[i] - f_minus[i]) / (2.0 * h)
        return jac
