"""Manifest uruchomienia — plik obok CSV (ta sama nazwa, rozszerzenie .manifest), linie klucz=wartość."""

from __future__ import annotations

import datetime
import pathlib
import shlex
from dataclasses import dataclass, field

from cdg import __version__

from ._args import MANIFEST_SUFFIX, RunContext
from ._output import format_cell


@dataclass(slots=True)
class RunManifest:
    """
    Pełna rozwiązana konfiguracja, z której da się odtworzyć CSV.

    extra: pola specyficzne dla komendy (zakres przemiatania, analizy, okno orbity…)
    """
    command:   str
    argv:      list[str]
    context:   RunContext
    extra:     dict[str, str] = field(default_factory=dict)
    version:   str = __version__
    timestamp: str = field(
        default_factory=lambda: datetime.datetime.now(datetime.UTC).isoformat(timespec="seconds")
    )

    def lines(self) -> list[str]:
        ctx = self.context
        system = ctx.system
        params = ",".join(
            f"{name}={format_cell(value)}" for name, value in zip(system.param_names, ctx.params)
        )
        pairs: list[tuple[str, str]] = [
            ("tool", f"cdg {self.version}"),
            ("timestamp", self.timestamp),
            ("command", self.command),
            ("argv", shlex.join(self.argv)),
            ("map", system.name),
            ("map_source", ctx.source),
            ("dimension", str(system.dimension)),
            ("domain", str(system.domain)),
            ("params", params),
            ("cells", ",".join(str(c) for c in ctx.partition.cells_per_axis)),
            ("x0", ",".join(format_cell(v) for v in ctx.orbit.x0)),
            ("transient", str(ctx.orbit.transient)),
            ("n", str(ctx.orbit.n)),
            ("escape_radius", format_cell(ctx.orbit.escape_radius)),
            ("roundoff", format_cell(ctx.orbit.roundoff)),
            ("seed", str(ctx.orbit.seed)),
            ("log_base", ctx.log_base.value),
            ("numeric_jacobian", format_cell(system.numeric_jacobian)),
        ]
        pairs.extend(self.extra.items())
        return [f"{k}={v}" for k, v in pairs]

    def write(self, out: str) -> pathlib.Path:
        path = pathlib.Path(out).with_suffix(MANIFEST_SUFFIX)
        path.write_text("\n".join(self.lines()) + "\n", encoding="utf-8", newline="")
        return path
