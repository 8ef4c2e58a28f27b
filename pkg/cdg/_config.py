"""Domyślna konfiguracja uruchomień — zmienne środowiskowe (opcjonalnie z pliku .env)."""

from __future__ import annotations

import os
import pathlib
from collections.abc import Callable
from dataclasses import dataclass

from data_model import InvalidConfig, LogBase
from estimator import (
    DEFAULT_ESCAPE_RADIUS,
    DEFAULT_N,
    DEFAULT_ROUNDOFF,
    DEFAULT_TRANSIENT,
)

try:
    from dotenv import load_dotenv
    load_dotenv(pathlib.Path(__file__).resolve().parent.parent / ".env", override=False)
except ImportError:
    pass  # python-dotenv opcjonalne; zmienne mogą być ustawione w środowisku

DEFAULT_POINTS = 740


@dataclass(frozen=True, slots=True)
class Settings:
    n:             int
    transient:     int
    escape_radius: float
    log_base:      LogBase
    workers:       int
    points:        int
    roundoff:      float
    seed:          int


def _env[T](name: str, default: T, convert: Callable[[str], T]) -> T:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        return convert(raw.strip())
    except ValueError as exc:
        raise InvalidConfig(f"Niepoprawna wartość zmiennej {name}={raw!r}: {exc}") from exc


def load_settings() -> Settings:
    """Czyta CDG_* ze środowiska; flagi CLI nadpisują te wartości."""
    return Settings(
        n             = _env("CDG_N",             DEFAULT_N,             int),
        transient     = _env("CDG_TRANSIENT",     DEFAULT_TRANSIENT,     int),
        escape_radius = _env("CDG_ESCAPE_RADIUS", DEFAULT_ESCAPE_RADIUS, float),
        log_base      = _env("CDG_LOG_BASE",      LogBase.E,             LogBase),
        workers       = _env("CDG_WORKERS",       os.cpu_count() or 1,   int),
        points        = _env("CDG_POINTS",        DEFAULT_POINTS,        int),
        roundoff      = _env("CDG_ROUNDOFF",      DEFAULT_ROUNDOFF,      float),
        seed          = _env("CDG_SEED",          0,                     int),
    )
