"""Komenda: cdg lyapunov — wykładniki Lapunowa dla jednej wartości parametrów."""

from __future__ import annotations

import argparse

from data_model import Diverged
from lyapunov import lyapunov_1d, lyapunov_spectrum

from cdg._args import (
    add_map_arguments,
    add_orbit_arguments,
    add_output_arguments,
    positive_int,
    resolve_context,
)
from cdg._common import EXIT_DIVERGED, EXIT_OK, finish, note
from cdg._config import load_settings


def exponent_columns(m: int) -> list[str]:
    return [f"lambda_{k}" for k in range(1, m + 1)]


def run(args: argparse.Namespace) -> int:
    ctx = resolve_context(args, load_settings())
    system = ctx.system
    m = system.dimension
    header = [*system.param_names, *exponent_columns(m), "numeric_jacobian", "status"]

    if system.numeric_jacobian:
        note(args, "[dim]Jakobian liczony różnicami skończonymi.[/dim]")

    if m == 1:
        result = lyapunov_1d(system, ctx.params, ctx.orbit)
        exponents = None if isinstance(result, Diverged) else (result,)
    else:
        result = lyapunov_spectrum(system, ctx.params, ctx.orbit, args.renorm_every)
        exponents = None if isinstance(result, Diverged) else result.exponents

    # log(2)-podstawa dotyczy też wykładników
    if exponents is not None:
        exponents = tuple(v / ctx.log_base.factor for v in exponents)

    if isinstance(result, Diverged):
        note(args, f"[yellow]Orbita rozbieżna w kroku {result.step} ({result.reason}).[/yellow]")
        finish(args, ctx, header, [[*ctx.params, *([None] * m), system.numeric_jacobian, "diverged"]])
        return EXIT_DIVERGED

    assert exponents is not None
    finish(
        args, ctx, header,
        [[*ctx.params, *exponents, system.numeric_jacobian, "ok"]],
        extra={"renorm_every": str(args.renorm_every)},
    )
    return EXIT_OK


def add_parser(subparsers: argparse._SubParsersAction) -> None:  # type: ignore[type-arg]
    p = subparsers.add_parser(
        "lyapunov",
        help="Liczy wykładniki Lapunowa (1D: średnia log|f′|, mD: widmo QR).",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        description="""
Wypisuje jeden wiersz CSV:

  <parametry>,lambda_1..lambda_m,numeric_jacobian,status

Wykładniki posortowane malejąco; -inf oznacza zerową pochodną
(albo osobliwą ramę QR). Kod wyjścia 2 przy orbicie rozbieżnej.

Przykład:
  cdg lyapunov --map baker --param a=1.0
        """,
    )
    add_map_arguments(p)
    add_orbit_arguments(p)
    p.add_argument("--renorm-every", type=positive_int, default=1, metavar="K",
                   help="Ortonormalizacja QR co K kroków (domyślnie 1).")
    add_output_arguments(p)
    p.set_defaults(func=run)
