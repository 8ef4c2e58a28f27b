"""Wspólne fixture'y testów."""

from __future__ import annotations

import pathlib
import sys

import pytest

ROOT = pathlib.Path(__file__).resolve().parent.parent
if str(ROOT) not in sys.path:
    sys.path.insert(0, str(ROOT))

from estimator import OrbitConfig  # noqa: E402

MAPS_DIR = ROOT / "maps"


@pytest.fixture
def maps_dir() -> pathlib.Path:
    return MAPS_DIR


@pytest.fixture
def orbit_cfg():
    """Fabryka OrbitConfig z krótkimi domyślnymi przebiegami."""
    def make(x0, *, n: int = 2000, transient: int = 100, **kwargs) -> OrbitConfig:
        return OrbitConfig(x0=tuple(x0), n=n, transient=transient, **kwargs)
    return make


@pytest.fixture
def clean_env(monkeypatch: pytest.MonkeyPatch) -> pytest.MonkeyPatch:
    """Usuwa CDG_* ze środowiska, żeby testy CLI nie zależały od .env."""
    for name in ("CDG_N", "CDG_TRANSIENT", "CDG_ESCAPE_RADIUS", "CDG_LOG_BASE",
                 "CDG_WORKERS", "CDG_POINTS", "CDG_ROUNDOFF", "CDG_SEED"):
        monkeypatch.delenv(name, raising=False)
    return monkeypatch


@pytest.fixture
def run_cli(clean_env, capsys):
    """Wywołuje cdg.cli.main(argv) → (kod wyjścia, stdout, stderr)."""
    from cdg.cli import main

    def run(*argv: str) -> tuple[int, str, str]:
        with pytest.raises(SystemExit) as exc:
            main(list(argv))
        out, err = capsys.readouterr()
        code = exc.value.code
        return (0 if code is None else int(code)), out, err
    return run
