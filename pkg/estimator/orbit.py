"""
estimator/orbit.py — generowanie orbit x⁽ᵏ⁾ = f(x⁽ᵏ⁻¹⁾).

Publiczne API:
  OrbitConfig                                konfiguracja orbity
  generate_orbit(system, params, cfg)        → stany x⁽ᵗ⁺¹⁾..x⁽ᵗ⁺ⁿ⁺¹⁾ | Diverged
  trajectory(system, params, cfg, a, b)      → stany x⁽ᵃ⁾..x⁽ᵇ⁾ | Diverged

Regularyzacja zaokrągleń (roundoff > 0): po każdym kroku
x ← x + x·roundoff·u, u ~ U(−1, 1) ze strumienia PCG64(seed); element
k-tego kroku strumienia jest zawsze ten sam, niezależnie od długości
orbity. Współrzędna leżąca przed perturbacją w pudełku dziedziny jest po
niej przycinana do pudełka. Bez tego mapy o nachyleniu 2 (Bernoulli/Baker
przy a = 1) tracą bit mantysy na krok i po ~55 krokach utykają w punkcie
stałym x = 1.

Mapy z jądrem (MapSystem.kernel) iterowane są skompilowaną pętlą
dynsys.kernels.orbit_window; pozostałe pętlą Pythona o tej samej
kolejności operacji.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from data_model import Diverged, InvalidConfig, State
from dynsys import MapSystem, Params
from dynsys.kernels import KERNELS, STATUS_ESCAPE, STATUS_OK, orbit_window
from dynsys.system import StepFn

DEFAULT_N             = 100_000
DEFAULT_TRANSIENT     = 1000
DEFAULT_ESCAPE_RADIUS = 1e6
DEFAULT_ROUNDOFF      = 2.0 ** -50


@dataclass(frozen=True, slots=True)
class OrbitConfig:
    """
    - x0:            punkt startowy x⁽⁰⁾
    - transient:     liczba kroków odrzuconych przed zliczaniem
    - n:             liczba zliczanych kroków (n ≥ 1)
    - escape_radius: próg normy sup, powyżej którego orbita jest rozbieżna
    - roundoff:      względna amplituda regularyzacji zaokrągleń (0 = wyłączona)
    - seed:          ziarno strumienia regularyzacji
    """
    x0:            State
    transient:     int = DEFAULT_TRANSIENT
    n:             int = DEFAULT_N
    escape_radius: float = DEFAULT_ESCAPE_RADIUS
    roundoff:      float = DEFAULT_ROUNDOFF
    seed:          int = 0

    def __post_init__(self) -> None:
        if self.n < 1:
            raise InvalidConfig(f"OrbitConfig: n musi być ≥ 1, otrzymano {self.n}.")
        if self.transient < 0:
            raise InvalidConfig(f"OrbitConfig: transient musi być ≥ 0, otrzymano {self.transient}.")
        if not self.escape_radius > 0:
            raise InvalidConfig(f"OrbitConfig: escape_radius musi być > 0, otrzymano {self.escape_radius}.")
        if not 0.0 <= self.roundoff < 1e-6:
            raise InvalidConfig(f"OrbitConfig: roundoff musi leżeć w [0, 1e-6), otrzymano {self.roundoff}.")
        if not self.x0 or not all(math.isfinite(v) for v in self.x0):
            raise InvalidConfig(f"OrbitConfig: x0 musi być skończonym punktem, otrzymano {self.x0}.")


def trajectory(
    system: MapSystem,
    params: tuple[float, ...],
    cfg:    OrbitConfig,
    start:  int,
    stop:   int,
) -> np.ndarray | Diverged:
    """
    Iteruje mapę od cfg.x0 i zwraca stany o numerach start..stop włącznie
    (x⁽⁰⁾ = x0) jako tablicę (stop − start + 1, m).

    Diverged(k) gdy stan x⁽ᵏ⁾ (k ≤ stop) jest niesk. albo ma normę sup
    większą niż escape_radius. cfg.n i cfg.transient nie są tu używane.
    """
    m = system.dimension
    if len(cfg.x0) != m:
        raise InvalidConfig(f"x0 ma {len(cfg.x0)} współrzędnych, mapa '{system.name}' wymiar {m}.")
    if len(params) != len(system.param_names):
        raise InvalidConfig(
            f"Mapa '{system.name}' oczekuje parametrów ({', '.join(system.param_names)}), "
            f"otrzymano {len(params)} wartości."
        )
    if not 0 <= start <= stop:
        raise InvalidConfig(f"Niepoprawny zakres kroków: {start}..{stop}.")

    lows, highs = system.domain.lows, system.domain.highs
    params = tuple(float(p) for p in params)

    noise = np.empty(0)
    if cfg.roundoff > 0.0 and stop > 0:
        rng = np.random.default_rng(cfg.seed)
        noise = rng.uniform(-1.0, 1.0, size=stop * m) * cfg.roundoff

    x: State = tuple(float(v) for v in cfg.x0)
    if not all(abs(v) <= cfg.escape_radius for v in x):
        return Diverged(0, "escape")

    if system.kernel is not None:
        states, at, status = orbit_window(
            KERNELS[system.kernel],
            np.asarray(params, dtype=np.float64),
            np.asarray(x, dtype=np.float64),
            start,
            stop,
            float(cfg.escape_radius),
            np.asarray(lows, dtype=np.float64),
            np.asarray(highs, dtype=np.float64),
            noise,
        )
        if status != STATUS_OK:
            return Diverged(int(at), "escape" if status == STATUS_ESCAPE else "non-finite")
        return states

    return _python_trajectory(system.step_fn, params, x, cfg.escape_radius, lows, highs, noise.tolist(), start, stop)


def _python_trajectory(
    step_fn: StepFn,
    params:  Params,
    x:       State,
    radius:  float,
    lows:    State,
    highs:   State,
    noise:   list[float],
    start:   int,
    stop:    int,
) -> np.ndarray | Diverged:
    # Mapy DSL i własne MapSystem bez jądra; kolejność operacji jak w orbit_window.
    m = len(x)
    rows: list[State] = [x] if start == 0 else []
    for k in range(1, stop + 1):
        try:
            y = step_fn(x, params)
        except ArithmeticError:
            return Diverged(k, "non-finite")

        if noise:
            base = (k - 1) * m
            perturbed = []
            for i, v in enumerate(y):
                z = v + v * noise[base + i]
                if lows[i] <= v <= highs[i]:
                    z = min(max(z, lows[i]), highs[i])
                perturbed.append(z)
            y = tuple(perturbed)

        for v in y:
            if not abs(v) <= radius:
                return Diverged(k, "escape" if math.isfinite(v) else "non-finite")

        if k >= start:
            rows.append(y)
        x = y

    return np.asarray(rows, dtype=np.float64).reshape(stop - start + 1, m)


def generate_orbit(
    system: MapSystem,
    params: tuple[float, ...],
    cfg:    OrbitConfig,
) -> np.ndarray | Diverged:
    """
    Stany x⁽ᵗ⁺¹⁾..x⁽ᵗ⁺ⁿ⁺¹⁾ (t = transient): n + 1 stanów, żeby każdy
    zliczany x⁽ᵏ⁾ miał w tablicy swój obraz f(x⁽ᵏ⁾).
    """
    return trajectory(system, params, cfg, cfg.transient + 1, cfg.transient + cfg.n + 1)
