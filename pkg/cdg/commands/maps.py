"""Komenda: cdg maps — lista map wbudowanych (albo opis mapy z pliku)."""

from __future__ import annotations

import argparse

from rich import box
from rich.console import Console
from rich.table import Table
from rich.text import Text

from dynsys import BUILTIN_NAMES, MapSystem, builtin
from mapdsl import load_map_file, parse
from partition import STANDARD_CELLS

from cdg._args import DSL_DEFAULT_CELLS
from cdg._common import EXIT_OK

console = Console(width=200)


def _fmt(values: tuple[float, ...]) -> str:
    return ", ".join(f"{v:g}" for v in values)


def _row(system: MapSystem, cells: tuple[int, ...]) -> list[str | Text]:
    params = ", ".join(
        f"{name}={value:g}" for name, value in zip(system.param_names, system.param_defaults)
    ) or ", ".join(system.param_names)
    sweep = "-"
    if system.sweep_range is not None:
        name, lo, hi = system.sweep_range
        sweep = f"{name} ∈ [{lo:g}, {hi:g}]"
    jac = Text("numeryczny", style="yellow") if system.numeric_jacobian else Text("analityczny", style="green")
    # Text: dziedzina i wzory zawierają nawiasy kwadratowe, nie markup rich
    return [
        Text(system.name),
        str(system.dimension),
        Text(str(system.domain)),
        Text(params),
        _fmt(system.x0),
        "×".join(str(c) for c in cells),
        Text(sweep),
        jac,
        Text(system.description),
    ]


def run(args: argparse.Namespace) -> int:
    table = Table(
        box=box.SIMPLE_HEAD,
        show_header=True,
        header_style="bold white",
        row_styles=["", "dim"],
        expand=False,
    )
    table.add_column("MAPA",      style="bold cyan", no_wrap=True)
    table.add_column("M",         justify="right")
    table.add_column("DZIEDZINA", no_wrap=True)
    table.add_column("PARAMETRY", no_wrap=True)
    table.add_column("X0",        no_wrap=True)
    table.add_column("PODZIAŁ",   no_wrap=True)
    table.add_column("ZAKRES",    no_wrap=True)
    table.add_column("JAKOBIAN",  no_wrap=True)
    table.add_column("WZÓR",      no_wrap=False, max_width=60)

    if args.map_file:
        spec = load_map_file(args.map_file)
        system = parse(spec)
        table.add_row(*_row(system, spec.cells or (DSL_DEFAULT_CELLS,) * system.dimension))
    else:
        for name in BUILTIN_NAMES:
            table.add_row(*_row(builtin(name), STANDARD_CELLS[name]))

    console.print()
    console.print(table)
    return EXIT_OK


def add_parser(subparsers: argparse._SubParsersAction) -> None:  # type: ignore[type-arg]
    p = subparsers.add_parser(
        "maps",
        help="Listuje mapy wbudowane z domyślnymi parametrami i podziałem.",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        description="""
Kolumny:
  MAPA      – nazwa do użycia w --map
  M         – wymiar
  DZIEDZINA – pudełko I
  PARAMETRY – parametry z wartościami domyślnymi
  X0        – domyślny punkt startowy
  PODZIAŁ   – liczba komórek na oś
  ZAKRES    – domyślny zakres przemiatania
  JAKOBIAN  – analityczny / numeryczny (mapy z pliku)
  WZÓR      – definicja mapy
        """,
    )
    p.add_argument("--map-file", metavar="PLIK", help="Pokaż mapę zdefiniowaną w pliku mapdsl.")
    p.set_defaults(func=run)
