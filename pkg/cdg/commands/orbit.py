"""Komenda: cdg orbit — okno orbity z przypisaniem komórek podziału."""

from __future__ import annotations

import argparse

from data_model import Diverged, InvalidConfig
from estimator import trajectory

from cdg._args import (
    add_map_arguments,
    add_orbit_arguments,
    add_output_arguments,
    non_negative_int,
    resolve_context,
)
from cdg._common import EXIT_DIVERGED, EXIT_OK, finish, note
from cdg._config import load_settings


def run(args: argparse.Namespace) -> int:
    if args.start > args.stop:
        raise InvalidConfig(f"--from ({args.start}) musi być ≤ --to ({args.stop}).")

    ctx = resolve_context(args, load_settings())
    m = ctx.system.dimension
    header = ["step", *(f"x{k}" for k in range(1, m + 1)), "cell"]
    window = {"from": str(args.start), "to": str(args.stop)}

    states = trajectory(ctx.system, ctx.params, ctx.orbit, args.start, args.stop)
    if isinstance(states, Diverged):
        note(args, f"[yellow]Orbita rozbieżna w kroku {states.step} ({states.reason}).[/yellow]")
        finish(args, ctx, header, [], extra=window)
        return EXIT_DIVERGED

    cells = ctx.partition.cell_indices(states)
    rows = (
        [args.start + i, *(float(v) for v in state), int(cell)]
        for i, (state, cell) in enumerate(zip(states, cells))
    )
    finish(args, ctx, header, rows, extra=window)
    return EXIT_OK


def add_parser(subparsers: argparse._SubParsersAction) -> None:  # type: ignore[type-arg]
    p = subparsers.add_parser(
        "orbit",
        help="Wypisuje stany orbity x⁽ᵏ⁾ dla k z zadanego okna wraz z komórką podziału.",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        description="""
Kolumny: step,x1..xm,cell  (x⁽⁰⁾ = x0; cell = id komórki, overflow = liczba komórek regularnych).

Flagi --n i --transient nie wpływają na okno; liczy się tylko --from/--to.

Przykład:
  cdg orbit --map tinkerbell_a --param a=0.9 --from 1001 --to 4000
        """,
    )
    add_map_arguments(p)
    p.add_argument("--from", dest="start", type=non_negative_int, default=1001, metavar="K",
                   help="Pierwszy wypisywany krok (domyślnie 1001).")
    p.add_argument("--to", dest="stop", type=non_negative_int, default=4000, metavar="K",
                   help="Ostatni wypisywany krok, włącznie (domyślnie 4000).")
    add_orbit_arguments(p)
    add_output_arguments(p)
    p.set_defaults(func=run)
