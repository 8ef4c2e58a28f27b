"""
cdg — narzędzie CLI: entropijny stopień chaosu i wykładniki Lapunowa.

Użycie:
  cdg <komenda> [opcje]

Komendy:
  maps       Listuje mapy wbudowane (albo opisuje mapę z pliku mapdsl).
  ecd        Liczy entropijny stopień chaosu dla jednej wartości parametrów.
  lyapunov   Liczy wykładniki Lapunowa dla jednej wartości parametrów.
  sweep      Przemiata parametr i wypisuje tabelę ECD / wykładników.
  orbit      Wypisuje okno orbity z przypisaniem komórek podziału.

Kody wyjścia: 0 ok, 1 błąd użycia / konfiguracji, 2 orbita rozbieżna.
"""

from __future__ import annotations

import argparse
import sys

# Windows: terminal może używać cp1252; wymuszamy UTF-8, żeby polskie znaki
# w tekstach pomocy argparse były wypisywane poprawnie.
if hasattr(sys.stdout, "reconfigure"):
    sys.stdout.reconfigure(encoding="utf-8", errors="replace")
if hasattr(sys.stderr, "reconfigure"):
    sys.stderr.reconfigure(encoding="utf-8", errors="replace")

from rich.markup import escape

from data_model import ChaosDegreeError

from cdg import __version__
from cdg._args import UsageParser
from cdg._common import EXIT_USAGE, console
from cdg.commands import ecd as cmd_ecd
from cdg.commands import lyapunov as cmd_lyapunov
from cdg.commands import maps as cmd_maps
from cdg.commands import orbit as cmd_orbit
from cdg.commands import sweep as cmd_sweep


def build_parser() -> argparse.ArgumentParser:
    parser = UsageParser(
        prog="cdg",
        description="Entropijny stopień chaosu (ECD) i wykładniki Lapunowa map dyskretnych.",
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument(
        "--version", action="version", version=f"cdg {__version__}"
    )

    subparsers = parser.add_subparsers(
        title="komendy",
        metavar="<komenda>",
        dest="command",
    )
    subparsers.required = True

    cmd_maps.add_parser(subparsers)
    cmd_ecd.add_parser(subparsers)
    cmd_lyapunov.add_parser(subparsers)
    cmd_sweep.add_parser(subparsers)
    cmd_orbit.add_parser(subparsers)

    return parser


def main(argv: list[str] | None = None) -> None:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    args = parser.parse_args(argv)
    args.argv = argv
    try:
        code = args.func(args)
    except ChaosDegreeError as e:
        console.print(f"[red]Błąd ({e.code}):[/red] {escape(e.message)}")
        raise SystemExit(EXIT_USAGE)
    raise SystemExit(code)


if __name__ == "__main__":
    main()
