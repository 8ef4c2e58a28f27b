"""
mapdsl/schema.py — schemat JSON pliku mapy (po przekształceniu linii
`klucz = wartość` na słownik).

Walidacja schematem wyłapuje błędy struktury (brak klucza, zły typ,
ujemny wymiar); arność i zmienne sprawdza mapspec.parse().
"""

from __future__ import annotations

from typing import Any

_NUMBER_LIST = {"type": "array", "items": {"type": "number"}, "minItems": 1}

MAP_SPEC_SCHEMA: dict[str, Any] = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "map_spec_v1",
    "type": "object",
    "required": ["dimension", "domain", "components"],
    "additionalProperties": False,
    "properties": {
        "name": {"type": "string", "pattern": r"^[A-Za-z_][A-Za-z0-9_.-]*$"},
        "dimension": {"type": "integer", "minimum": 1},
        "domain": {
            "type": "array",
            "minItems": 1,
            "items": {
                "type": "array",
                "prefixItems": [{"type": "number"}, {"type": "number"}],
                "minItems": 2,
                "maxItems": 2,
            },
        },
        "params": {
            "type": "array",
            "uniqueItems": True,
            "items": {"type": "string", "pattern": r"^[A-Za-z_][A-Za-z0-9_]*$"},
        },
        "defaults": {
            "type": "object",
            "additionalProperties": {"type": "number"},
        },
        "x0": _NUMBER_LIST,
        "cells": {"type": "array", "items": {"type": "integer", "minimum": 1}, "minItems": 1},
        "components": {"type": "array", "items": {"type": "string", "minLength": 1}, "minItems": 1},
        "guard": {"type": "string", "minLength": 1},
        "otherwise": {"type": "array", "items": {"type": "string", "minLength": 1}},
    },
}
