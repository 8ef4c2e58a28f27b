"""
mapdsl/loader.py — wczytywanie pliku mapy (UTF-8, linie `klucz = wartość`).

Format (pełna gramatyka: docs/gramatyka-mapdsl.md):

    # komentarz do końca linii
    name      = bernoulli_dsl
    dimension = 1
    domain    = 0:1                 # lo:hi dla każdej osi, oddzielone przecinkami
    params    = a
    defaults  = a=1.0
    x0        = 0.3
    cells     = 2000
    guard     = x1 <= 0.5
    f1        = 2*a*x1
    g1        = a*(2*x1 - 1)

Publiczne API:
  read_map_spec(text)     → MapSpecSource
  load_map_file(path)     → MapSpecSource
"""

from __future__ import annotations

import pathlib
import re
from typing import Any

import jsonschema

from data_model import Box, MapSpecError

from .mapspec import MapSpecSource
from .schema import MAP_SPEC_SCHEMA

_KEY_RE       = re.compile(r"^[A-Za-z_][A-Za-z0-9_]*$")
_COMPONENT_RE = re.compile(r"^([fg])([1-9][0-9]*)$")
_SCALAR_KEYS  = frozenset({"name", "dimension", "domain", "params", "defaults", "x0", "cells", "guard"})

_validator = jsonschema.Draft202012Validator(MAP_SPEC_SCHEMA)


# ---------------------------------------------------------------------------
# Linie → surowy słownik
# ---------------------------------------------------------------------------

def _split_lines(text: str) -> tuple[dict[str, str], dict[str, int]]:
    """Zwraca (klucz → wartość, klucz → numer linii)."""
    raw: dict[str, str] = {}
    where: dict[str, int] = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise MapSpecError(f"Linia {lineno}: oczekiwano 'klucz = wartość'.")
        key, value = (part.strip() for part in line.split("=", 1))
        if not _KEY_RE.match(key):
            raise MapSpecError(f"Linia {lineno}: niepoprawny klucz '{key}'.")
        if key in raw:
            raise MapSpecError(f"Linia {lineno}: klucz '{key}' powtórzony (pierwszy raz w linii {where[key]}).")
        if key not in _SCALAR_KEYS and not _COMPONENT_RE.match(key):
            raise MapSpecError(f"Linia {lineno}: nieznany klucz '{key}'.")
        raw[key] = value
        where[key] = lineno
    return raw, where


def _floats(value: str, key: str, lineno: int) -> list[float]:
    try:
        return [float(v) for v in value.split(",") if v.strip()]
    except ValueError:
        raise MapSpecError(f"Linia {lineno}: '{key}' wymaga listy liczb, otrzymano '{value}'.") from None


def _components(raw: dict[str, str], prefix: str) -> list[str]:
    indices = sorted(
        int(m.group(2)) for k in raw if (m := _COMPONENT_RE.match(k)) and m.group(1) == prefix
    )
    if indices != list(range(1, len(indices) + 1)):
        raise MapSpecError(f"Składowe {prefix}1..{prefix}m muszą być numerowane kolejno od 1.")
    return [raw[f"{prefix}{i}"] for i in indices]


def _to_document(raw: dict[str, str], where: dict[str, int]) -> dict[str, Any]:
    """Przekształca surowe wartości tekstowe w dokument JSON do walidacji schematem."""
    doc: dict[str, Any] = {}

    if "name" in raw:
        doc["name"] = raw["name"]
    if "dimension" in raw:
        try:
            doc["dimension"] = int(raw["dimension"])
        except ValueError:
            raise MapSpecError(f"Linia {where['dimension']}: 'dimension' musi być liczbą całkowitą.") from None
    if "domain" in raw:
        axes: list[list[float]] = []
        for part in raw["domain"].split(","):
            bounds = part.split(":")
            if len(bounds) != 2:
                raise MapSpecError(f"Linia {where['domain']}: oś dziedziny musi mieć postać lo:hi.")
            axes.append(_floats(",".join(bounds), "domain", where["domain"]))
        doc["domain"] = axes
    if "params" in raw:
        doc["params"] = [p.strip() for p in raw["params"].split(",") if p.strip()]
    if "defaults" in raw:
        defaults: dict[str, float] = {}
        for item in raw["defaults"].split(","):
            if not item.strip():
                continue
            name, sep, value = item.partition("=")
            if not sep or not value.strip():
                raise MapSpecError(f"Linia {where['defaults']}: 'defaults' wymaga par nazwa=wartość.")
            defaults[name.strip()] = _floats(value, "defaults", where["defaults"])[0]
        doc["defaults"] = defaults
    if "x0" in raw:
        doc["x0"] = _floats(raw["x0"], "x0", where["x0"])
    if "cells" in raw:
        try:
            doc["cells"] = [int(v) for v in raw["cells"].split(",") if v.strip()]
        except ValueError:
            raise MapSpecError(f"Linia {where['cells']}: 'cells' wymaga listy liczb całkowitych.") from None
    if "guard" in raw:
        doc["guard"] = raw["guard"]

    doc["components"] = _components(raw, "f")
    otherwise = _components(raw, "g")
    if otherwise:
        doc["otherwise"] = otherwise
    return doc


# ---------------------------------------------------------------------------
# Dokument → MapSpecSource
# ---------------------------------------------------------------------------

def _validate(doc: dict[str, Any]) -> None:
    errors = sorted(_validator.iter_errors(doc), key=lambda e: list(e.absolute_path))
    if errors:
        first = errors[0]
        path = "/" + "/".join(str(p) for p in first.absolute_path)
        raise MapSpecError(f"Plik mapy niezgodny ze schematem ({path}): {first.message}")


def _from_document(doc: dict[str, Any]) -> MapSpecSource:
    m = doc["dimension"]

    axes = doc["domain"]
    if len(axes) == 1 and m > 1:
        axes = axes * m
    if len(axes) != m:
        raise MapSpecError(f"Dziedzina ma {len(axes)} osi, wymiar mapy {m}.")
    domain = Box(lows=tuple(a[0] for a in axes), highs=tuple(a[1] for a in axes))

    params = tuple(doc.get("params", ()))
    defaults_map: dict[str, float] = doc.get("defaults", {})
    unknown = sorted(set(defaults_map) - set(params))
    if unknown:
        raise MapSpecError(f"'defaults' dla nieznanych parametrów: {', '.join(unknown)}.")
    defaults: tuple[float, ...] = ()
    if defaults_map:
        missing = [p for p in params if p not in defaults_map]
        if missing:
            raise MapSpecError(f"'defaults' musi podawać wszystkie parametry; brak: {', '.join(missing)}.")
        defaults = tuple(defaults_map[p] for p in params)

    x0 = tuple(doc.get("x0", ()))
    if x0 and len(x0) != m:
        raise MapSpecError(f"'x0' ma {len(x0)} współrzędnych, wymiar mapy {m}.")

    cells = tuple(doc.get("cells", ()))
    if len(cells) == 1 and m > 1:
        cells = cells * m
    if cells and len(cells) != m:
        raise MapSpecError(f"'cells' ma {len(cells)} pozycji, wymiar mapy {m}.")

    return MapSpecSource(
        dimension=m,
        component_exprs=tuple(doc["components"]),
        param_names=params,
        domain=domain,
        guard=doc.get("guard"),
        else_exprs=tuple(doc.get("otherwise", ())),
        name=doc.get("name", "dsl"),
        param_defaults=defaults,
        x0=x0,
        cells=cells,
    )


def read_map_spec(text: str) -> MapSpecSource:
    """Parsuje treść pliku mapy. MapSpecError przy błędach formatu."""
    raw, where = _split_lines(text)
    doc = _to_document(raw, where)
    _validate(doc)
    try:
        return _from_document(doc)
    except MapSpecError:
        raise
    except ValueError as exc:
        raise MapSpecError(str(exc)) from None


def load_map_file(path: str | pathlib.Path) -> MapSpecSource:
    path = pathlib.Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as exc:
        raise MapSpecError(f"Nie można wczytać pliku mapy {path}: {exc}") from None
    return read_map_spec(text)
