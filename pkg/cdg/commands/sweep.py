"""Komenda: cdg sweep — ECD i/lub wykładniki Lapunowa wzdłuż zakresu parametru."""

from __future__ import annotations

import argparse

from rich.progress import BarColumn, MofNCompleteColumn, Progress, TextColumn, TimeElapsedColumn

from data_model import InvalidConfig
from sweep import Analysis, RowStatus, SweepConfig, SweepRow, run_sweep

from cdg._args import (
    add_map_arguments,
    add_orbit_arguments,
    add_output_arguments,
    key_range,
    positive_int,
    resolve_context,
)
from cdg._common import EXIT_OK, console, finish, note
from cdg._config import load_settings
from cdg.commands.lyapunov import exponent_columns


def _analyses(text: str) -> frozenset[Analysis]:
    try:
        return frozenset(Analysis(a.strip()) for a in text.split(",") if a.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"nieznana analiza w {text!r} (dostępne: {', '.join(a.value for a in Analysis)})"
        ) from None


def _row_cells(row: SweepRow, m: int, factor: float) -> list:
    exponents = [v / factor for v in row.lyapunov] if row.lyapunov is not None else [None] * m
    return [
        row.index,
        row.param_value,
        row.ecd,
        *exponents,
        row.numeric_jacobian,
        row.status.value,
        row.overflow_fraction,
    ]


def run(args: argparse.Namespace) -> int:
    settings = load_settings()
    ctx = resolve_context(args, settings)
    system = ctx.system

    if args.sweep is not None:
        param, lo, hi = args.sweep
    elif system.sweep_range is not None:
        param, lo, hi = system.sweep_range
    else:
        raise InvalidConfig(f"Mapa '{system.name}' nie ma domyślnego zakresu; podaj --sweep NAZWA=LO:HI.")

    points  = settings.points if args.points is None else args.points
    workers = settings.workers if args.workers is None else args.workers

    cfg = SweepConfig(
        system       = system,
        param        = param,
        lo           = lo,
        hi           = hi,
        points       = points,
        orbit        = ctx.orbit,
        partition    = ctx.partition,
        analyses     = args.analyses,
        log_base     = ctx.log_base,
        base_params  = ctx.params,
        renorm_every = args.renorm_every,
    )

    if args.quiet:
        rows = run_sweep(cfg, workers=workers)
    else:
        progress = Progress(
            TextColumn("[bold]{task.description}"),
            BarColumn(),
            MofNCompleteColumn(),
            TimeElapsedColumn(),
            console=console,
            transient=True,
        )
        with progress:
            task = progress.add_task(f"{system.name} {param}∈[{lo}, {hi}]", total=points)
            rows = run_sweep(cfg, workers=workers, progress=lambda _row: progress.advance(task))

    diverged = sum(1 for r in rows if r.status is RowStatus.DIVERGED)
    overflow = sum(1 for r in rows if r.status is RowStatus.OVERFLOW)
    if diverged:
        note(args, f"[yellow]Ostrzeżenie:[/yellow] {diverged} z {points} wierszy z orbitą rozbieżną.")
    if overflow:
        note(args, f"[yellow]Ostrzeżenie:[/yellow] {overflow} z {points} wierszy z masą poza pudełkiem.")

    m = system.dimension
    header = ["index", param, "ecd", *exponent_columns(m), "numeric_jacobian", "status", "overflow_fraction"]
    finish(
        args, ctx, header,
        (_row_cells(r, m, ctx.log_base.factor) for r in rows),
        extra={
            "sweep": f"{param}={lo!r}:{hi!r}",
            "points": str(points),
            "analyses": ",".join(sorted(a.value for a in cfg.analyses)),
            "renorm_every": str(args.renorm_every),
        },
    )
    return EXIT_OK


def add_parser(subparsers: argparse._SubParsersAction) -> None:  # type: ignore[type-arg]
    p = subparsers.add_parser(
        "sweep",
        help="Przemiata parametr mapy i liczy ECD / wykładniki Lapunowa w każdym punkcie.",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        description="""
Parametr przebiega [LO, HI] w POINTS równych krokach (oba końce włącznie).
Każdy wiersz liczony jest od tego samego x0; wynik nie zależy od --workers.

Kolumny:
  index,<param>,ecd,lambda_1..lambda_m,numeric_jacobian,status,overflow_fraction

Puste pola: analiza nie zlecona albo orbita rozbieżna (status=diverged).

Przykład:
  cdg sweep --map bernoulli --sweep a=0:1 --points 740 --analyses ecd,lyapunov
        """,
    )
    add_map_arguments(p)
    p.add_argument("--sweep", type=key_range, metavar="NAZWA=LO:HI",
                   help="Przemiatany parametr i zakres (domyślnie zakres mapy).")
    p.add_argument("--points", type=int, metavar="N", help="Liczba punktów, ≥ 2 (CDG_POINTS, 740).")
    p.add_argument("--analyses", type=_analyses, default=frozenset(Analysis), metavar="LISTA",
                   help="ecd, lyapunov albo ecd,lyapunov (domyślnie obie).")
    p.add_argument("--workers", type=positive_int, metavar="W", help="Liczba procesów (CDG_WORKERS, liczba rdzeni).")
    p.add_argument("--renorm-every", type=positive_int, default=1, metavar="K",
                   help="Ortonormalizacja QR co K kroków (domyślnie 1).")
    add_orbit_arguments(p)
    add_output_arguments(p)
    p.set_defaults(func=run)
