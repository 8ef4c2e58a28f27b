"""
dynsys/builtin.py — mapy wbudowane z analitycznymi jakobianami.

  bernoulli     przesunięcie Bernoulliego na [0,1], nachylenie 2a
  baker         transformacja piekarza na [0,1]², jakobian diag(2a, a/2)
  tinkerbell_a  Tinkerbell, stałe (c₂,c₃,c₄) = (−0.6, 2.0, 0.5), parametr a w slocie c₁
  tinkerbell_b  Tinkerbell, stałe (c₁,c₂,c₄) = (−0.3, −0.6, 0.5), parametr b w slocie c₃
  logistic      mapa logistyczna r·x(1−x), punkt kontrolny dla modułu lyapunov

Gałąź odcinkowa: x₁ ≤ 0.5 → gałąź 1, x₁ > 0.5 → gałąź 2 (punkt 0.5 należy
do gałęzi 1; to samo w krokach i jakobianach).

Każda mapa wskazuje jądro numba (dynsys/kernels.py) o tych samych
operacjach; orbity i jakobiany w estymatorach idą przez jądro.
"""

from __future__ import annotations

from collections.abc import Callable

import numpy as np

from data_model import Box, State, UnknownMap

from .system import MapSystem, Params

# Stałe Tinkerbella (c₁, c₂, c₃, c₄)
TINKERBELL_C: tuple[float, float, float, float] = (-0.3, -0.6, 2.0, 0.5)
TINKERBELL_DOMAIN = Box(lows=(-1.2, -0.7), highs=(0.4, 0.3))

_BRANCH = 0.5


# ---------------------------------------------------------------------------
# Bernoulli
# ---------------------------------------------------------------------------

def _bernoulli_step(x: State, p: Params) -> State:
    a, x1 = p[0], x[0]
    if x1 <= _BRANCH:
        return (2.0 * a * x1,)
    return (a * (2.0 * x1 - 1.0),)


def _bernoulli_jac(x: State, p: Params) -> np.ndarray:
    return np.array([[2.0 * p[0]]])


# ---------------------------------------------------------------------------
# Baker
# ---------------------------------------------------------------------------

def _baker_step(x: State, p: Params) -> State:
    a = p[0]
    x1, x2 = x
    if x1 <= _BRANCH:
        return (2.0 * a * x1, 0.5 * a * x2)
    return (a * (2.0 * x1 - 1.0), 0.5 * a * (x2 + 1.0))


def _baker_jac(x: State, p: Params) -> np.ndarray:
    a = p[0]
    return np.array([[2.0 * a, 0.0], [0.0, 0.5 * a]])


# ---------------------------------------------------------------------------
# Tinkerbell
# ---------------------------------------------------------------------------

def _tinkerbell(x: State, c1: float, c2: float, c3: float, c4: float) -> State:
    # f_a i f_b przechodzą przez tę samą sekwencję operacji; przy tych
    # samych stałych wyniki są identyczne bit w bit.
    x1, x2 = x
    return (
        x1 * x1 - x2 * x2 + c1 * x1 + c2 * x2,
        2.0 * x1 * x2 + c3 * x1 + c4 * x2,
    )


def _tinkerbell_jacobian(x: State, c1: float, c2: float, c3: float, c4: float) -> np.ndarray:
    x1, x2 = x
    return np.array([
        [2.0 * x1 + c1, -2.0 * x2 + c2],
        [2.0 * x2 + c3,  2.0 * x1 + c4],
    ])


def _tinkerbell_a_step(x: State, p: Params) -> State:
    _, c2, c3, c4 = TINKERBELL_C
    return _tinkerbell(x, p[0], c2, c3, c4)


def _tinkerbell_a_jac(x: State, p: Params) -> np.ndarray:
    _, c2, c3, c4 = TINKERBELL_C
    return _tinkerbell_jacobian(x, p[0], c2, c3, c4)


def _tinkerbell_b_step(x: State, p: Params) -> State:
    c1, c2, _, c4 = TINKERBELL_C
    return _tinkerbell(x, c1, c2, p[0], c4)


def _tinkerbell_b_jac(x: State, p: Params) -> np.ndarray:
    c1, c2, _, c4 = TINKERBELL_C
    return _tinkerbell_jacobian(x, c1, c2, p[0], c4)


# ---------------------------------------------------------------------------
# Logistic
# ---------------------------------------------------------------------------

def _logistic_step(x: State, p: Params) -> State:
    r, x1 = p[0], x[0]
    return (r * x1 * (1.0 - x1),)


def _logistic_jac(x: State, p: Params) -> np.ndarray:
    return np.array([[p[0] * (1.0 - 2.0 * x[0])]])


# ---------------------------------------------------------------------------
# Rejestr
# ---------------------------------------------------------------------------

def _bernoulli() -> MapSystem:
    return MapSystem(
        name="bernoulli",
        dimension=1,
        domain=Box.cube(0.0, 1.0, 1),
        param_names=("a",),
        step_fn=_bernoulli_step,
        jacobian_fn=_bernoulli_jac,
        param_defaults=(1.0,),
        x0=(0.3,),
        sweep_range=("a", 0.0, 1.0),
        kernel="bernoulli",
        description="2a·x (x ≤ 0.5);  a(2x − 1) (x > 0.5)",
    )


def _baker() -> MapSystem:
    return MapSystem(
        name="baker",
        dimension=2,
        domain=Box.cube(0.0, 1.0, 2),
        param_names=("a",),
        step_fn=_baker_step,
        jacobian_fn=_baker_jac,
        param_defaults=(1.0,),
        x0=(0.3, 0.3),
        sweep_range=("a", 0.0, 1.0),
        kernel="baker",
        description="(2a·x1, a·x2/2) (x1 ≤ 0.5);  (a(2x1 − 1), a(x2 + 1)/2) (x1 > 0.5)",
    )


def _tinkerbell_a() -> MapSystem:
    return MapSystem(
        name="tinkerbell_a",
        dimension=2,
        domain=TINKERBELL_DOMAIN,
        param_names=("a",),
        step_fn=_tinkerbell_a_step,
        jacobian_fn=_tinkerbell_a_jac,
        param_defaults=(0.9,),
        x0=(0.1, 0.1),
        sweep_range=("a", -1.2, 0.9),
        kernel="tinkerbell_a",
        description="(x1² − x2² + a·x1 − 0.6·x2, 2·x1·x2 + 2·x1 + 0.5·x2)",
    )


def _tinkerbell_b() -> MapSystem:
    return MapSystem(
        name="tinkerbell_b",
        dimension=2,
        domain=TINKERBELL_DOMAIN,
        param_names=("b",),
        step_fn=_tinkerbell_b_step,
        jacobian_fn=_tinkerbell_b_jac,
        param_defaults=(2.9,),
        x0=(0.1, 0.1),
        sweep_range=("b", 1.9, 2.9),
        kernel="tinkerbell_b",
        description="(x1² − x2² − 0.3·x1 − 0.6·x2, 2·x1·x2 + b·x1 + 0.5·x2)",
    )


def _logistic() -> MapSystem:
    return MapSystem(
        name="logistic",
        dimension=1,
        domain=Box.cube(0.0, 1.0, 1),
        param_names=("r",),
        step_fn=_logistic_step,
        jacobian_fn=_logistic_jac,
        param_defaults=(4.0,),
        x0=(0.3,),
        sweep_range=("r", 2.5, 4.0),
        kernel="logistic",
        description="r·x(1 − x)",
    )


_REGISTRY: dict[str, Callable[[], MapSystem]] = {
    "bernoulli":    _bernoulli,
    "baker":        _baker,
    "tinkerbell_a": _tinkerbell_a,
    "tinkerbell_b": _tinkerbell_b,
    "logistic":     _logistic,
}

BUILTIN_NAMES: tuple[str, ...] = tuple(_REGISTRY)


def builtin(name: str) -> MapSystem:
    """Zwraca w pełni skonfigurowaną mapę wbudowaną. UnknownMap dla innych nazw."""
    try:
        factory = _REGISTRY[name]
    except KeyError:
        raise UnknownMap(name, BUILTIN_NAMES) from None
    return factory()
