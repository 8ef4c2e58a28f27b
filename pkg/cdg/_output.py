"""Zapis tabel CSV: przecinki, LF, nagłówek, liczby z 17 cyframi znaczącymi."""

from __future__ import annotations

import csv
import io
import pathlib
import sys
from collections.abc import Iterable, Sequence

type Cell = float | int | str | bool | None


def format_cell(value: Cell) -> str:
    match value:
        case None:
            return ""
        case bool():
            return "true" if value else "false"
        case int():
            return str(value)
        case float():
            return format(value, ".17g")
        case _:
            return str(value)


def render_csv(header: Sequence[str], rows: Iterable[Sequence[Cell]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([format_cell(v) for v in row])
    return buf.getvalue()


def emit_csv(header: Sequence[str], rows: Iterable[Sequence[Cell]], out: str | None) -> None:
    """CSV na stdout albo do pliku `out` (UTF-8, bez tłumaczenia końców linii)."""
    text = render_csv(header, rows)
    if out:
        pathlib.Path(out).write_text(text, encoding="utf-8", newline="")
        return
    sys.stdout.write(text)
    sys.stdout.flush()
