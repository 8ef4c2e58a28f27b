"""
data_model/errors.py — kody błędów i hierarchia wyjątków domenowych.

Każdy wyjątek niesie stały kod (ErrorCode), żeby CLI i testy mogły
rozróżniać klasy błędów bez parsowania komunikatów.

Diverged (ucieczka orbity) i osobliwa rama QR NIE są wyjątkami:
to wartości zwracane przez estimator/lyapunov (patrz data_model.results).
"""

from __future__ import annotations

from enum import StrEnum


class ErrorCode(StrEnum):
    """Stałe kody błędów."""

    # dynsys
    UNKNOWN_MAP        = "E_UNKNOWN_MAP"
    NON_FINITE_RESULT  = "E_NON_FINITE_RESULT"
    NO_JACOBIAN        = "E_NO_JACOBIAN"

    # mapdsl
    PARSE              = "E_PARSE"
    ARITY              = "E_ARITY"
    UNBOUND_VARIABLE   = "E_UNBOUND_VARIABLE"
    MAP_SPEC           = "E_MAP_SPEC"

    # partition / estimator
    NON_FINITE_INPUT   = "E_NON_FINITE_INPUT"
    EMPTY_COUNTS       = "E_EMPTY_COUNTS"

    # konfiguracja (sweep, CLI, środowisko)
    INVALID_CONFIG     = "E_INVALID_CONFIG"


class ChaosDegreeError(ValueError):
    """Bazowy wyjątek domenowy. Atrybut `code` identyfikuje klasę błędu."""

    code: ErrorCode = ErrorCode.INVALID_CONFIG

    def __init__(self, message: str) -> None:
        super().__init__(message)
        self.message = message


class InvalidConfig(ChaosDegreeError):
    code = ErrorCode.INVALID_CONFIG


class UnknownMap(ChaosDegreeError):
    code = ErrorCode.UNKNOWN_MAP

    def __init__(self, name: str, known: tuple[str, ...] = ()) -> None:
        hint = f" Dostępne: {', '.join(known)}." if known else ""
        super().__init__(f"Nieznana mapa: '{name}'.{hint}")
        self.name = name


class NonFiniteResult(ChaosDegreeError):
    """Krok mapy zwrócił NaN/∞ (numeryczny wybuch orbity)."""
    code = ErrorCode.NON_FINITE_RESULT


class NoJacobian(ChaosDegreeError):
    code = ErrorCode.NO_JACOBIAN

    def __init__(self, map_name: str) -> None:
        super().__init__(f"Mapa '{map_name}' nie udostępnia jakobianu.")
        self.map_name = map_name


class NonFiniteInput(ChaosDegreeError):
    code = ErrorCode.NON_FINITE_INPUT


class EmptyCounts(ChaosDegreeError):
    code = ErrorCode.EMPTY_COUNTS


class MapSpecError(ChaosDegreeError):
    """Plik mapy nie spełnia schematu (brak klucza, zły typ wartości)."""
    code = ErrorCode.MAP_SPEC


class ParseError(ChaosDegreeError):
    """
    Błąd składni wyrażenia DSL.

    - position: pozycja znaku (1-based) w źródle wyrażenia
    - expected: zbiór tokenów, które były dopuszczalne w tym miejscu
    """
    code = ErrorCode.PARSE

    def __init__(self, position: int, expected: frozenset[str], found: str = "") -> None:
        exp = ", ".join(sorted(expected)) if expected else "—"
        got = f", znaleziono {found!r}" if found else ""
        super().__init__(f"Błąd składni na pozycji {position}: oczekiwano {{{exp}}}{got}.")
        self.position = position
        self.expected = expected
        self.found    = found


class ArityError(ChaosDegreeError):
    code = ErrorCode.ARITY


class UnboundVariable(ChaosDegreeError):
    code = ErrorCode.UNBOUND_VARIABLE

    def __init__(self, name: str) -> None:
        super().__init__(f"Niezwiązana zmienna: '{name}'.")
        self.name = name
