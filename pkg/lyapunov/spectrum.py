"""
lyapunov/spectrum.py — wykładniki Lapunowa map dyskretnych.

Publiczne API:
  lyapunov_1d(system, params, cfg)                        → float | Diverged
  lyapunov_spectrum(system, params, cfg, renorm_every)    → LyapunovSpectrum | Diverged
  mean_log_derivative(system, params, states)             → float
  qr_spectrum(system, params, states, renorm_every)       → LyapunovSpectrum

Widmo liczone akumulacją QR: rama ortonormalna Q, w każdym bloku
A = J(x⁽ᵏ⁺ʳ⁻¹⁾)···J(x⁽ᵏ⁾)·Q, A = Q′R (diag R > 0), λₖ = Σ log Rₖₖ / n.
Iloczyn JₙJₙᵀ wprost przekracza zakres float64 po ~1000 krokach przy
λ = ln 2, stąd ortonormalizacja (Gram-Schmidt w dynsys.kernels).

Orbita to te same stany co w estymatorze ECD: x⁽ᵗ⁺¹⁾..x⁽ᵗ⁺ⁿ⁾. Wersje
"na stanach" przyjmują gotową orbitę, żeby przemiatanie liczyło ją raz.
"""

from __future__ import annotations

import math

import numpy as np

from data_model import (
    Diverged,
    InvalidConfig,
    LyapunovSpectrum,
    NoJacobian,
    NonFiniteResult,
)
from dynsys import MapSystem
from dynsys.kernels import KERNELS, jacobian_series, qr_block_logs
from estimator import OrbitConfig, generate_orbit


def _orbit_states(
    system: MapSystem,
    params: tuple[float, ...],
    cfg:    OrbitConfig,
) -> np.ndarray | Diverged:
    if system.jacobian_fn is None:
        raise NoJacobian(system.name)
    orbit = generate_orbit(system, params, cfg)
    if isinstance(orbit, Diverged):
        return orbit
    return orbit[: cfg.n]


def _jacobians(system: MapSystem, params: tuple[float, ...], states: np.ndarray) -> np.ndarray:
    """Jakobiany wzdłuż orbity jako tablica (N, m, m)."""
    if system.jacobian_fn is None:
        raise NoJacobian(system.name)
    params = tuple(float(p) for p in params)
    states = np.ascontiguousarray(states, dtype=np.float64)
    m = system.dimension

    if system.kernel is not None:
        jacs = jacobian_series(KERNELS[system.kernel], np.asarray(params, dtype=np.float64), states)
    else:
        jac = system.jacobian_fn
        jacs = np.empty((states.shape[0], m, m), dtype=np.float64)
        for t, row in enumerate(states.tolist()):
            jacs[t] = np.asarray(jac(tuple(row), params), dtype=np.float64).reshape(m, m)
    return jacs


def mean_log_derivative(
    system: MapSystem,
    params: tuple[float, ...],
    states: np.ndarray,
) -> float:
    """
    (1/N)·Σ log|f′(x)| po wierszach states (mapa 1D).

    -inf gdy pochodna jest dokładnie 0 wcześniej niż jakakolwiek
    nieskończona; nieskończona pochodna to NonFiniteResult.
    """
    derivs = np.abs(_jacobians(system, params, states)[:, 0, 0])
    bad = (derivs == 0.0) | ~np.isfinite(derivs)
    if bad.any():
        first = int(np.argmax(bad))
        if derivs[first] == 0.0:
            return -math.inf
        raise NonFiniteResult(
            f"Mapa '{system.name}': pochodna w {float(states[first, 0])} nie jest skończona."
        )
    return math.fsum(np.log(derivs).tolist()) / derivs.shape[0]


def qr_spectrum(
    system:       MapSystem,
    params:       tuple[float, ...],
    states:       np.ndarray,
    renorm_every: int = 1,
) -> LyapunovSpectrum:
    """Widmo m wykładników na gotowych stanach orbity, posortowane malejąco."""
    if renorm_every < 1:
        raise InvalidConfig(f"renorm_every musi być ≥ 1, otrzymano {renorm_every}.")
    jacs = _jacobians(system, params, states)
    finite = np.isfinite(jacs).all(axis=(1, 2))
    if not finite.all():
        at = int(np.argmin(finite))
        raise NonFiniteResult(
            f"Mapa '{system.name}': jakobian w {tuple(states[at].tolist())} nie jest skończony."
        )

    n = jacs.shape[0]
    logs, alive = qr_block_logs(jacs, renorm_every)
    exponents = [
        math.fsum(logs[:, k].tolist()) / n if k < alive else -math.inf
        for k in range(system.dimension)
    ]
    exponents.sort(reverse=True)
    return LyapunovSpectrum(
        exponents=tuple(exponents),
        n_used=n,
        numeric_jacobian=system.numeric_jacobian,
    )


def lyapunov_1d(
    system: MapSystem,
    params: tuple[float, ...],
    cfg:    OrbitConfig,
) -> float | Diverged:
    """
    (1/n)·Σ log|f′(x⁽ᵏ⁾)| po orbicie za stanem przejściowym.

    -inf gdy któraś pochodna jest dokładnie 0. NoJacobian gdy mapa
    nie ma pochodnej; InvalidConfig gdy wymiar ≠ 1.
    """
    if system.dimension != 1:
        raise InvalidConfig(f"lyapunov_1d: mapa '{system.name}' ma wymiar {system.dimension}, oczekiwano 1.")
    states = _orbit_states(system, params, cfg)
    if isinstance(states, Diverged):
        return states
    return mean_log_derivative(system, params, states)


def lyapunov_spectrum(
    system:       MapSystem,
    params:       tuple[float, ...],
    cfg:          OrbitConfig,
    renorm_every: int = 1,
) -> LyapunovSpectrum | Diverged:
    """
    Pełne widmo m wykładników, posortowane malejąco.

    Zerowe Rₖₖ (rama osobliwa) ustawia λₖ i wszystkie niższe na -inf;
    wyższe wykładniki są dalej akumulowane, bo pierwsze k kolumn Q
    nie zależą od dalszych.
    """
    if renorm_every < 1:
        raise InvalidConfig(f"renorm_every musi być ≥ 1, otrzymano {renorm_every}.")
    states = _orbit_states(system, params, cfg)
    if isinstance(states, Diverged):
        return states
    return qr_spectrum(system, params, states, renorm_every)
