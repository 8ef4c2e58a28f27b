"""
mapdsl/nodes.py — węzły drzewa składni wyrażeń DSL i pretty-printer.

Węzły są niemutowalne (frozen) i porównywalne strukturalnie:
round-trip format_expr → parse_expr daje identyczne drzewo.
"""

from __future__ import annotations

from dataclasses import dataclass

FUNCTIONS: frozenset[str] = frozenset({"sin", "cos", "exp", "log", "abs"})


@dataclass(frozen=True, slots=True)
class Num:
    value: float


@dataclass(frozen=True, slots=True)
class Var:
    name: str


@dataclass(frozen=True, slots=True)
class Neg:
    operand: Expr


@dataclass(frozen=True, slots=True)
class BinOp:
    """op ∈ {'+', '-', '*', '/', '^'}"""
    op:    str
    left:  Expr
    right: Expr


@dataclass(frozen=True, slots=True)
class Call:
    """func ∈ FUNCTIONS"""
    func: str
    arg:  Expr


@dataclass(frozen=True, slots=True)
class Compare:
    """Porównanie strażnika: op ∈ {'<=', '<'}"""
    op:    str
    left:  Expr
    right: Expr


type Expr = Num | Var | Neg | BinOp | Call | Compare


def free_variables(expr: Expr) -> set[str]:
    """Zbiór nazw zmiennych występujących w wyrażeniu."""
    match expr:
        case Num():
            return set()
        case Var(name):
            return {name}
        case Neg(operand):
            return free_variables(operand)
        case Call(_, arg):
            return free_variables(arg)
        case BinOp(_, left, right) | Compare(_, left, right):
            return free_variables(left) | free_variables(right)
    raise TypeError(f"Nieznany węzeł: {expr!r}")


def format_expr(expr: Expr) -> str:
    """
    Wypisuje wyrażenie w składni DSL.

    Każda operacja binarna jest ujęta w nawiasy, więc wynik parsuje się
    z powrotem do tego samego drzewa niezależnie od priorytetów.
    """
    match expr:
        case Num(value):
            return repr(value)
        case Var(name):
            return name
        case Neg(operand):
            return "-" + format_expr(operand)
        case Call(func, arg):
            return f"{func}({format_expr(arg)})"
        case BinOp(op, left, right):
            return f"({format_expr(left)} {op} {format_expr(right)})"
        case Compare(op, left, right):
            return f"{format_expr(left)} {op} {format_expr(right)}"
    raise TypeError(f"Nieznany węzeł: {expr!r}")
