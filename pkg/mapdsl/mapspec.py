"""
mapdsl/mapspec.py — budowa MapSystem z opisu mapy w DSL.

MapSpecSource to surowy opis (teksty wyrażeń); parse() parsuje wyrażenia,
sprawdza arność i zmienne wolne, i zwraca MapSystem z jakobianem
numerycznym (różnice centralne, flaga numeric_jacobian=True).
"""

from __future__ import annotations

from dataclasses import dataclass

from data_model import ArityError, Box, InvalidConfig, MapSpecError, State, UnboundVariable
from dynsys import MapSystem, NumericJacobian

from .evaluator import DslStep
from .nodes import Expr, format_expr, free_variables
from .parser import parse_expr, parse_guard


@dataclass(frozen=True, slots=True)
class MapSpecSource:
    """
    Opis mapy w DSL.

    - dimension:       m
    - component_exprs: teksty wyrażeń f1..fm
    - param_names:     nazwy parametrów
    - domain:          pudełko dziedziny
    - guard:           opcjonalny strażnik (np. "x1 <= 0.5")
    - else_exprs:      teksty g1..gm (gałąź dla fałszywego strażnika)
    - name:            nazwa mapy
    - param_defaults:  wartości domyślne parametrów (puste = brak)
    - x0:              domyślny punkt startowy (pusty = środek dziedziny)
    - cells:           domyślny podział na osie (pusty = brak)
    """
    dimension:       int
    component_exprs: tuple[str, ...]
    param_names:     tuple[str, ...]
    domain:          Box
    guard:           str | None = None
    else_exprs:      tuple[str, ...] = ()
    name:            str = "dsl"
    param_defaults:  tuple[float, ...] = ()
    x0:              State = ()
    cells:           tuple[int, ...] = ()


def variable_names(dimension: int) -> tuple[str, ...]:
    return tuple(f"x{k}" for k in range(1, dimension + 1))


def _check_free(exprs: list[Expr], allowed: set[str]) -> None:
    for e in exprs:
        for name in sorted(free_variables(e)):
            if name not in allowed:
                raise UnboundVariable(name)


def parse(source: MapSpecSource) -> MapSystem:
    """
    Zwraca MapSystem, którego krok ewaluuje drzewa DSL.

    Błędy: ParseError (składnia), ArityError (liczba składowych ≠ wymiar),
    UnboundVariable (zmienna spoza x1..xm i parametrów).
    """
    m = source.dimension
    if m < 1:
        raise MapSpecError(f"Mapa '{source.name}': wymiar musi być ≥ 1.")
    if len(source.component_exprs) != m:
        raise ArityError(
            f"Mapa '{source.name}': {len(source.component_exprs)} składowych f, wymiar {m}."
        )

    var_names = variable_names(m)
    clash = sorted(set(var_names) & set(source.param_names))
    if clash:
        raise MapSpecError(f"Parametr koliduje z nazwą współrzędnej: {', '.join(clash)}.")
    allowed = set(var_names) | set(source.param_names)

    components = [parse_expr(s) for s in source.component_exprs]
    _check_free(components, allowed)

    guard = None
    otherwise: list[Expr] = []
    if source.guard is not None:
        guard = parse_guard(source.guard)
        _check_free([guard], allowed)
        if len(source.else_exprs) != m:
            raise ArityError(
                f"Mapa '{source.name}': strażnik wymaga {m} składowych g, "
                f"podano {len(source.else_exprs)}."
            )
        otherwise = [parse_expr(s) for s in source.else_exprs]
        _check_free(otherwise, allowed)
    elif source.else_exprs:
        raise MapSpecError(f"Mapa '{source.name}': składowe g bez strażnika.")

    step_fn = DslStep(
        var_names=var_names,
        param_names=tuple(source.param_names),
        components=tuple(components),
        guard=guard,
        otherwise=tuple(otherwise),
    )

    x0 = source.x0 or tuple(
        0.5 * (lo + hi) for lo, hi in zip(source.domain.lows, source.domain.highs)
    )
    description = "; ".join(format_expr(e) for e in components)
    if guard is not None:
        description = (
            f"[{format_expr(guard)}] {description}  |  "
            + "; ".join(format_expr(e) for e in otherwise)
        )

    try:
        return MapSystem(
            name=source.name,
            dimension=m,
            domain=source.domain,
            param_names=tuple(source.param_names),
            step_fn=step_fn,
            jacobian_fn=NumericJacobian(step_fn),
            numeric_jacobian=True,
            param_defaults=tuple(source.param_defaults),
            x0=tuple(x0),
            description=description,
        )
    except InvalidConfig as exc:
        raise MapSpecError(exc.message) from None
