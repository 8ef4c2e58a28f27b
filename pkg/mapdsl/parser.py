"""
mapdsl/parser.py — parser rekurencyjnie zstępujący wyrażeń DSL.

Gramatyka (od najniższego priorytetu):

  guard    := additive ('<=' | '<') additive
  expr     := additive
  additive := term (('+' | '-') term)*
  term     := power (('*' | '/') power)*
  power    := unary ('^' power)?              prawostronnie łączne
  unary    := '-' unary | primary             minus unarny wiąże mocniej niż ^
  primary  := NUM | IDENT | FUNC '(' expr ')' | '(' expr ')'
  FUNC     := sin | cos | exp | log | abs

Publiczne API:
  parse_expr(source)   → Expr   (bez porównań)
  parse_guard(source)  → Compare
"""

from __future__ import annotations

from data_model import ParseError

from .lexer import Token, tokenize
from .nodes import FUNCTIONS, BinOp, Call, Compare, Expr, Neg, Num, Var

# Głębokość zagnieżdżenia, powyżej której odmawiamy parsowania
# (zamiast RecursionError na złośliwym wejściu).
MAX_DEPTH = 100

# Wysokość drzewa wyrażenia. Długie łańcuchy a+b+c+… nie zagnieżdżają nawiasów,
# ale dają drzewo o wysokości równej liczbie składników; przechodzenie
# drzewa (free_variables, format_expr, evaluate) jest rekurencyjne.
MAX_TREE_DEPTH = 200

_END = "koniec wyrażenia"
_OPERAND_START = frozenset({"liczba", "identyfikator", "(", "-"})


class _Parser:
    __slots__ = ("_tokens", "_pos", "_depth", "_heights")

    def __init__(self, tokens: list[Token]) -> None:
        self._tokens = tokens
        self._pos    = 0
        self._depth  = 0
        self._heights: dict[int, int] = {}

    # ------------------------------------------------------------------

    @property
    def _tok(self) -> Token:
        return self._tokens[self._pos]

    def _advance(self) -> Token:
        tok = self._tokens[self._pos]
        self._pos += 1
        return tok

    def _at(self, *ops: str) -> bool:
        tok = self._tok
        return tok.kind == "OP" and tok.text in ops

    def _fail(self, expected: frozenset[str]) -> ParseError:
        tok = self._tok
        return ParseError(tok.position, expected, tok.text if tok.kind != "END" else "")

    def _expect_end(self, continuation: frozenset[str]) -> None:
        if self._tok.kind != "END":
            raise self._fail(continuation | {_END})

    # ------------------------------------------------------------------

    def expression(self) -> Expr:
        return self._additive()

    def guard(self) -> Compare:
        left = self._additive()
        if not self._at("<=", "<"):
            raise self._fail(frozenset({"+", "-", "*", "/", "^", "<=", "<"}))
        op = self._advance().text
        right = self._additive()
        return Compare(op, left, right)

    def _additive(self) -> Expr:
        node = self._term()
        while self._at("+", "-"):
            tok = self._advance()
            node = self._grow(tok, BinOp(tok.text, node, self._term()))
        return node

    def _term(self) -> Expr:
        node = self._power()
        while self._at("*", "/"):
            tok = self._advance()
            node = self._grow(tok, BinOp(tok.text, node, self._power()))
        return node

    def _power(self) -> Expr:
        base = self._unary()
        if self._at("^"):
            tok = self._advance()
            self._enter()
            exponent = self._power()
            self._depth -= 1
            return self._grow(tok, BinOp("^", base, exponent))
        return base

    def _unary(self) -> Expr:
        if self._at("-"):
            tok = self._advance()
            self._enter()
            node = self._grow(tok, Neg(self._unary()))
            self._depth -= 1
            return node
        return self._primary()

    def _primary(self) -> Expr:
        tok = self._tok
        if tok.kind == "NUM":
            self._advance()
            return Num(tok.value)

        if tok.kind == "IDENT":
            self._advance()
            if tok.text in FUNCTIONS:
                if not self._at("("):
                    raise self._fail(frozenset({"("}))
                return self._grow(tok, Call(tok.text, self._parenthesized()))
            if self._at("("):
                # wywołanie nieznanej funkcji
                raise ParseError(tok.position, FUNCTIONS, tok.text)
            return Var(tok.text)

        if self._at("("):
            return self._parenthesized()

        raise self._fail(_OPERAND_START)

    def _parenthesized(self) -> Expr:
        self._advance()  # '('
        self._enter()
        node = self._additive()
        self._depth -= 1
        if not self._at(")"):
            raise self._fail(frozenset({"+", "-", "*", "/", "^", ")"}))
        self._advance()
        return node

    def _grow(self, tok: Token, node: Expr) -> Expr:
        """Rejestruje wysokość nowego węzła; ParseError przy tokenie, który ją przekroczył."""
        match node:
            case BinOp(left=left, right=right):
                children = (left, right)
            case Neg(operand=operand):
                children = (operand,)
            case Call(arg=arg):
                children = (arg,)
            case _:
                children = ()
        height = 1 + max((self._heights.get(id(c), 1) for c in children), default=0)
        if height > MAX_TREE_DEPTH:
            raise ParseError(tok.position, frozenset({f"wysokość drzewa wyrażenia ≤ {MAX_TREE_DEPTH}"}))
        self._heights[id(node)] = height
        return node

    def _enter(self) -> None:
        self._depth += 1
        if self._depth > MAX_DEPTH:
            raise ParseError(self._tok.position, frozenset({f"zagnieżdżenie ≤ {MAX_DEPTH}"}))


def _decode(source: str | bytes) -> str:
    if isinstance(source, bytes):
        try:
            return source.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError(exc.start + 1, frozenset({"tekst UTF-8"})) from None
    return source


def parse_expr(source: str | bytes) -> Expr:
    """Parsuje wyrażenie składowej mapy. ParseError z pozycją 1-based."""
    p = _Parser(tokenize(_decode(source)))
    try:
        node = p.expression()
    except RecursionError:
        raise ParseError(1, frozenset({f"zagnieżdżenie ≤ {MAX_DEPTH}"})) from None
    p._expect_end(frozenset({"+", "-", "*", "/", "^"}))
    return node


def parse_guard(source: str | bytes) -> Compare:
    """Parsuje strażnika gałęzi, np. 'x1 <= 0.5'."""
    p = _Parser(tokenize(_decode(source)))
    try:
        node = p.guard()
    except RecursionError:
        raise ParseError(1, frozenset({f"zagnieżdżenie ≤ {MAX_DEPTH}"})) from None
    p._expect_end(frozenset({"+", "-", "*", "/", "^"}))
    return node
