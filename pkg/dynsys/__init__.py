"""
dynsys — mapy dyskretne i mapy wbudowane.

Publiczne API:
  MapSystem                       opis mapy (niemutowalny)
  step(system, x, params)         → f(x)
  jacobian(system, x, params)     → Df(x)
  resolve_params(system, {...})   → krotka parametrów
  builtin(name)                   → MapSystem (bernoulli, baker, tinkerbell_a, tinkerbell_b, logistic)
  BUILTIN_NAMES                   nazwy map wbudowanych
"""

from .system  import MapSystem, NumericJacobian, Params, jacobian, resolve_params, step
from .builtin import BUILTIN_NAMES, TINKERBELL_C, builtin

__all__ = [
    "MapSystem",
    "NumericJacobian",
    "Params",
    "step",
    "jacobian",
    "resolve_params",
    "builtin",
    "BUILTIN_NAMES",
    "TINKERBELL_C",
]
