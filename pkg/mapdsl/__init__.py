"""
mapdsl — mały język wyrażeń do definiowania własnych map.

Publiczne API:
  parse(MapSpecSource)      → MapSystem (jakobian numeryczny)
  parse_expr(source)        → Expr
  parse_guard(source)       → Compare
  evaluate(expr, bindings)  → float
  format_expr(expr)         → str (parsuje się z powrotem do tego samego drzewa)
  read_map_spec(text)       → MapSpecSource
  load_map_file(path)       → MapSpecSource
"""

from .nodes     import FUNCTIONS, BinOp, Call, Compare, Expr, Neg, Num, Var, format_expr, free_variables
from .parser    import parse_expr, parse_guard
from .evaluator import DslStep, evaluate
from .mapspec   import MapSpecSource, parse, variable_names
from .loader    import load_map_file, read_map_spec

__all__ = [
    "FUNCTIONS",
    "Expr",
    "Num",
    "Var",
    "Neg",
    "BinOp",
    "Call",
    "Compare",
    "format_expr",
    "free_variables",
    "parse_expr",
    "parse_guard",
    "evaluate",
    "DslStep",
    "MapSpecSource",
    "parse",
    "variable_names",
    "read_map_spec",
    "load_map_file",
]
