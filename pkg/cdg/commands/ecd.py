"""Komenda: cdg ecd — entropijny stopień chaosu dla jednej wartości parametrów."""

from __future__ import annotations

import argparse

from data_model import Diverged
from estimator import ecd_pipeline

from cdg._args import add_map_arguments, add_orbit_arguments, add_output_arguments, resolve_context
from cdg._common import EXIT_DIVERGED, EXIT_OK, finish, note
from cdg._config import load_settings

COLUMNS = ("ecd", "shannon_out", "mutual_info", "occupied_cells", "overflow_fraction", "status")


def run(args: argparse.Namespace) -> int:
    ctx = resolve_context(args, load_settings())
    header = [*ctx.system.param_names, *COLUMNS]

    result = ecd_pipeline(ctx.system, ctx.params, ctx.partition, ctx.orbit, ctx.log_base)
    if isinstance(result, Diverged):
        note(args, f"[yellow]Orbita rozbieżna w kroku {result.step} ({result.reason}).[/yellow]")
        finish(args, ctx, header, [[*ctx.params, None, None, None, None, None, "diverged"]])
        return EXIT_DIVERGED

    status = "ok"
    if result.overflow_fraction > 0.0:
        status = "overflow"
        note(args, f"[yellow]Ostrzeżenie:[/yellow] {result.overflow_fraction:.3%} par poza pudełkiem dziedziny.")

    finish(args, ctx, header, [[
        *ctx.params,
        result.ecd,
        result.shannon_out,
        result.mutual_info,
        result.occupied_cells,
        result.overflow_fraction,
        status,
    ]])
    return EXIT_OK


def add_parser(subparsers: argparse._SubParsersAction) -> None:  # type: ignore[type-arg]
    p = subparsers.add_parser(
        "ecd",
        help="Liczy entropijny stopień chaosu (ECD) dla jednej wartości parametrów.",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        description="""
Iteruje mapę, zlicza przejścia między komórkami podziału i wypisuje jeden
wiersz CSV:

  <parametry>,ecd,shannon_out,mutual_info,occupied_cells,overflow_fraction,status

status: ok | overflow (część orbity poza pudełkiem) | diverged (kod wyjścia 2).

Przykład:
  cdg ecd --map bernoulli --param a=1.0
        """,
    )
    add_map_arguments(p)
    add_orbit_arguments(p)
    add_output_arguments(p)
    p.set_defaults(func=run)
