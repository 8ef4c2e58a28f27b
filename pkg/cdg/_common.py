"""Pomocnicze elementy komend: konsola stderr, kody wyjścia, zapis wyników."""

from __future__ import annotations

import argparse
from collections.abc import Iterable, Sequence

from rich.console import Console

from ._args import RunContext
from ._manifest import RunManifest
from ._output import Cell, emit_csv

EXIT_OK       = 0
EXIT_USAGE    = 1
EXIT_DIVERGED = 2

console = Console(stderr=True)


def note(args: argparse.Namespace, message: str) -> None:
    """Komunikat na stderr, pomijany przy --quiet."""
    if not getattr(args, "quiet", False):
        console.print(message)


def finish(
    args:    argparse.Namespace,
    ctx:     RunContext,
    header:  Sequence[str],
    rows:    Iterable[Sequence[Cell]],
    extra:   dict[str, str] | None = None,
) -> None:
    """Wypisuje CSV; przy --out zapisuje obok manifest."""
    emit_csv(header, rows, args.out)
    if args.out:
        manifest = RunManifest(
            command=args.command,
            argv=list(getattr(args, "argv", [])),
            context=ctx,
            extra=dict(extra or {}),
        )
        path = manifest.write(args.out)
        note(args, f"[dim]Zapisano {args.out} (manifest: {path})[/dim]")
