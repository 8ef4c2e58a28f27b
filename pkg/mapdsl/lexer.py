"""
mapdsl/lexer.py — podział wyrażenia DSL na tokeny.

Tokeny:
  NUM    liczba: 12, 0.5, .5, 1e-3, 2.5E+4
  IDENT  identyfikator: [A-Za-z_][A-Za-z0-9_]*
  OP     + - * / ^ ( ) < <=   oraz '**' (rozpoznawany, ale spoza gramatyki;
         parser zgłasza go jako nieoczekiwany token)
  END    koniec wejścia

Pozycje są 1-based (numer znaku w źródle).
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import Literal

from data_model import ParseError

TokenKind = Literal["NUM", "IDENT", "OP", "END"]

_NUM_RE   = re.compile(r"(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?")
_IDENT_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
_OPS      = ("**", "<=", "+", "-", "*", "/", "^", "(", ")", "<")

# Co może rozpocząć token; używane w komunikacie dla nieznanego znaku.
_TOKEN_START: frozenset[str] = frozenset({"liczba", "identyfikator", *_OPS[1:]})


@dataclass(frozen=True, slots=True)
class Token:
    kind:     TokenKind
    text:     str
    position: int
    value:    float = 0.0


def tokenize(source: str) -> list[Token]:
    """Zwraca listę tokenów zakończoną tokenem END. ParseError dla nieznanych znaków."""
    tokens: list[Token] = []
    i = 0
    n = len(source)
    while i < n:
        ch = source[i]
        if ch.isspace():
            i += 1
            continue

        m = _NUM_RE.match(source, i)
        if m:
            value = float(m.group())
            if not math.isfinite(value):
                raise ParseError(i + 1, frozenset({"skończona liczba"}), m.group())
            tokens.append(Token("NUM", m.group(), i + 1, value))
            i = m.end()
            continue

        m = _IDENT_RE.match(source, i)
        if m:
            tokens.append(Token("IDENT", m.group(), i + 1))
            i = m.end()
            continue

        for op in _OPS:
            if source.startswith(op, i):
                tokens.append(Token("OP", op, i + 1))
                i += len(op)
                break
        else:
            raise ParseError(i + 1, _TOKEN_START, ch)

    tokens.append(Token("END", "", n + 1))
    return tokens
