"""
mapdsl/evaluator.py — ewaluacja drzew DSL w arytmetyce IEEE-754 (double).

Operacje niezdefiniowane nie rzucają wyjątków, tylko zwracają NaN/∞
(np. log(−1) → NaN, 1/0 → ∞); o dywergencji decyduje wywołujący
(generator orbity zamienia niesk. stan na Diverged).

Publiczne API:
  evaluate(expr, bindings)   → float    (UnboundVariable dla brakującej zmiennej)
  DslStep                    wywoływalny krok mapy (x, params) → f(x)
"""

from __future__ import annotations

import math
from collections.abc import Mapping
from dataclasses import dataclass

import numpy as np

from data_model import State, UnboundVariable

from .nodes import BinOp, Call, Compare, Expr, Neg, Num, Var


def _log(v: float) -> float:
    # log z argumentu niedodatniego → NaN (a nie -inf dla zera)
    return math.log(v) if v > 0.0 else math.nan


def _exp(v: float) -> float:
    try:
        return math.exp(v)
    except OverflowError:
        return math.inf


def _ieee(fn, v: float) -> float:
    try:
        return fn(v)
    except ValueError:
        return math.nan


_FUNCS = {
    "sin": lambda v: _ieee(math.sin, v),
    "cos": lambda v: _ieee(math.cos, v),
    "exp": _exp,
    "log": _log,
    "abs": abs,
}


def _binop(op: str, a: float, b: float) -> float:
    if op == "+":
        return a + b
    if op == "-":
        return a - b
    if op == "*":
        return a * b
    # dzielenie i potęga przez numpy: semantyka IEEE bez wyjątków Pythona
    with np.errstate(all="ignore"):
        if op == "/":
            return float(np.float64(a) / np.float64(b))
        return float(np.power(np.float64(a), np.float64(b)))


def evaluate(expr: Expr, bindings: Mapping[str, float]) -> float:
    """Wartość wyrażenia przy podanym wiązaniu zmiennych."""
    match expr:
        case Num(value):
            return value
        case Var(name):
            try:
                return float(bindings[name])
            except KeyError:
                raise UnboundVariable(name) from None
        case Neg(operand):
            return -evaluate(operand, bindings)
        case BinOp(op, left, right):
            return _binop(op, evaluate(left, bindings), evaluate(right, bindings))
        case Call(func, arg):
            return float(_FUNCS[func](evaluate(arg, bindings)))
        case Compare(op, left, right):
            a, b = evaluate(left, bindings), evaluate(right, bindings)
            return 1.0 if (a <= b if op == "<=" else a < b) else 0.0
    raise TypeError(f"Nieznany węzeł: {expr!r}")


@dataclass(frozen=True, slots=True)
class DslStep:
    """
    Krok mapy zdefiniowanej w DSL.

    - var_names:   nazwy współrzędnych (x1..xm)
    - param_names: nazwy parametrów
    - components:  wyrażenia f1..fm (gałąź, gdy strażnik prawdziwy lub go brak)
    - guard:       opcjonalny strażnik
    - otherwise:   wyrażenia g1..gm (gałąź, gdy strażnik fałszywy)
    """
    var_names:   tuple[str, ...]
    param_names: tuple[str, ...]
    components:  tuple[Expr, ...]
    guard:       Compare | None = None
    otherwise:   tuple[Expr, ...] = ()

    def __call__(self, x: State, params: tuple[float, ...]) -> State:
        bindings = dict(zip(self.param_names, params))
        bindings.update(zip(self.var_names, x))
        branch = self.components
        if self.guard is not None and not evaluate(self.guard, bindings):
            branch = self.otherwise
        return tuple(evaluate(e, bindings) for e in branch)
