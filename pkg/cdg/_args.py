"""Wspólne flagi komend i ich rozwiązywanie do (mapa, parametry, podział, orbita)."""

from __future__ import annotations

import argparse
import math
import pathlib
import sys
from dataclasses import dataclass

from data_model import InvalidConfig, LogBase
from dynsys import MapSystem, builtin, resolve_params
from estimator import OrbitConfig
from mapdsl import load_map_file, parse
from partition import STANDARD_CELLS, GridPartition

from ._config import Settings

# Podział dla map z pliku bez klucza 'cells' i bez --cells
DSL_DEFAULT_CELLS = 100
MANIFEST_SUFFIX = ".manifest"


class UsageParser(argparse.ArgumentParser):
    """ArgumentParser kończący błędy użycia kodem 1 (kod 2 = orbita rozbieżna)."""

    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: błąd: {message}\n")


# ---------------------------------------------------------------------------
# Konwertery wartości flag
# ---------------------------------------------------------------------------

def _finite(text: str) -> float:
    value = float(text)
    if not math.isfinite(value):
        raise ValueError(f"wartość nieskończona: {text}")
    return value


def key_value(text: str) -> tuple[str, float]:
    """'a=0.9' → ('a', 0.9)."""
    name, sep, value = text.partition("=")
    if not sep or not name.strip():
        raise argparse.ArgumentTypeError(f"oczekiwano NAZWA=WARTOŚĆ, otrzymano {text!r}")
    try:
        return name.strip(), _finite(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"niepoprawna liczba w {text!r}") from None


def key_range(text: str) -> tuple[str, float, float]:
    """'a=0:1' → ('a', 0.0, 1.0)."""
    name, sep, rng = text.partition("=")
    lo, colon, hi = rng.partition(":")
    if not sep or not colon or not name.strip():
        raise argparse.ArgumentTypeError(f"oczekiwano NAZWA=LO:HI, otrzymano {text!r}")
    try:
        return name.strip(), _finite(lo), _finite(hi)
    except ValueError:
        raise argparse.ArgumentTypeError(f"niepoprawna liczba w {text!r}") from None


def float_list(text: str) -> tuple[float, ...]:
    """'0.1,0.1' → (0.1, 0.1)."""
    try:
        values = tuple(_finite(v) for v in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"oczekiwano listy liczb rozdzielonych przecinkami, otrzymano {text!r}") from None
    return values


def output_path(text: str) -> str:
    """Plik wynikowy CSV; sufiks .manifest jest zarezerwowany dla manifestu."""
    if pathlib.Path(text).suffix.lower() == MANIFEST_SUFFIX:
        raise argparse.ArgumentTypeError(
            f"plik wynikowy nie może mieć sufiksu {MANIFEST_SUFFIX} (nadpisałby go manifest): {text!r}"
        )
    return text


def cells_list(text: str) -> tuple[int, ...]:
    """'160,100' albo '160x100' → (160, 100)."""
    try:
        values = tuple(int(v) for v in text.replace("x", ",").split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"oczekiwano liczb całkowitych, np. 160,100; otrzymano {text!r}") from None
    if any(v < 1 for v in values):
        raise argparse.ArgumentTypeError(f"liczba komórek musi być ≥ 1: {text!r}")
    return values


def positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"oczekiwano liczby całkowitej, otrzymano {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"wartość musi być ≥ 1, otrzymano {value}")
    return value


def non_negative_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"oczekiwano liczby całkowitej, otrzymano {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"wartość musi być ≥ 0, otrzymano {value}")
    return value


# ---------------------------------------------------------------------------
# Rejestracja flag
# ---------------------------------------------------------------------------

def add_map_arguments(p: argparse.ArgumentParser) -> None:
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--map", metavar="NAZWA", help="Mapa wbudowana (lista: cdg maps).")
    src.add_argument("--map-file", metavar="PLIK", help="Plik z definicją mapy w języku mapdsl.")
    p.add_argument(
        "--param", action="append", type=key_value, default=[], metavar="NAZWA=WARTOŚĆ",
        help="Wartość parametru mapy (można powtarzać).",
    )


def add_orbit_arguments(p: argparse.ArgumentParser) -> None:
    p.add_argument("--cells", type=cells_list, metavar="N[,N...]",
                   help="Liczba komórek na oś (domyślnie standardowy podział mapy).")
    p.add_argument("--n", type=positive_int, metavar="N", help="Liczba zliczanych kroków (CDG_N, 100000).")
    p.add_argument("--transient", type=non_negative_int, metavar="T",
                   help="Liczba odrzuconych kroków początkowych (CDG_TRANSIENT, 1000).")
    p.add_argument("--x0", type=float_list, metavar="X1[,X2...]", help="Punkt startowy (domyślnie z mapy).")
    p.add_argument("--log-base", choices=[b.value for b in LogBase], help="Podstawa logarytmu (CDG_LOG_BASE, e).")
    p.add_argument("--escape-radius", type=_finite, metavar="R",
                   help="Próg normy sup uznawany za ucieczkę orbity (CDG_ESCAPE_RADIUS, 1e6).")
    p.add_argument("--roundoff", type=_finite, metavar="EPS",
                   help="Względna amplituda regularyzacji zaokrągleń, 0 = wyłączona (CDG_ROUNDOFF, 2^-50).")
    p.add_argument("--seed", type=non_negative_int, metavar="S", help="Ziarno regularyzacji (CDG_SEED, 0).")


def add_output_arguments(p: argparse.ArgumentParser) -> None:
    p.add_argument("--out", "-o", metavar="PLIK", type=output_path, help="Zapisz CSV do pliku (obok: PLIK.manifest).")
    p.add_argument("--quiet", "-q", action="store_true", help="Bez komunikatów i paska postępu na stderr.")


# ---------------------------------------------------------------------------
# Rozwiązywanie konfiguracji
# ---------------------------------------------------------------------------

@dataclass(frozen=True, slots=True)
class RunContext:
    system:    MapSystem
    params:    tuple[float, ...]
    partition: GridPartition
    orbit:     OrbitConfig
    log_base:  LogBase
    source:    str


def load_system(args: argparse.Namespace) -> tuple[MapSystem, tuple[int, ...], str]:
    """Zwraca (mapa, domyślny podział, opis źródła)."""
    if args.map_file:
        spec = load_map_file(args.map_file)
        system = parse(spec)
        cells = spec.cells or (DSL_DEFAULT_CELLS,) * system.dimension
        return system, cells, f"file:{args.map_file}"
    system = builtin(args.map)
    return system, STANDARD_CELLS[system.name], f"builtin:{system.name}"


def _cells_for(system: MapSystem, cells: tuple[int, ...]) -> tuple[int, ...]:
    if len(cells) == 1 and system.dimension > 1:
        return cells * system.dimension
    if len(cells) != system.dimension:
        raise InvalidConfig(f"--cells ma {len(cells)} pozycji, mapa '{system.name}' wymiar {system.dimension}.")
    return cells


def resolve_context(args: argparse.Namespace, settings: Settings) -> RunContext:
    """Składa flagi z ustawieniami środowiska; flagi mają pierwszeństwo."""
    system, default_cells, source = load_system(args)
    params = resolve_params(system, dict(args.param))
    partition = GridPartition(system.domain, _cells_for(system, args.cells or default_cells))

    x0 = args.x0 or system.x0
    orbit = OrbitConfig(
        x0            = tuple(x0),
        transient     = settings.transient if args.transient is None else args.transient,
        n             = settings.n if args.n is None else args.n,
        escape_radius = settings.escape_radius if args.escape_radius is None else args.escape_radius,
        roundoff      = settings.roundoff if args.roundoff is None else args.roundoff,
        seed          = settings.seed if args.seed is None else args.seed,
    )
    log_base = LogBase(args.log_base) if args.log_base else settings.log_base
    return RunContext(system, params, partition, orbit, log_base, source)
