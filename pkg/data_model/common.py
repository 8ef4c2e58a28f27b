"""
Wspólne typy pierwotne używane przez dynsys, partition, estimator i sweep.

  Box       — pudełko dziedziny (dolne/górne granice na każdej osi)
  State     — stan układu: krotka floatów długości m
  LogBase   — podstawa logarytmu w entropiach (e lub 2)
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import StrEnum

from .errors import InvalidConfig

# ---------------------------------------------------------------------------
# Aliasy typów
# ---------------------------------------------------------------------------

# Stan x⁽ⁿ⁾ ∈ ℝᵐ. Krotka zwykłych floatów: iteracja w czystym Pythonie
# jest wielokrotnie szybsza niż na małych tablicach numpy.
type State = tuple[float, ...]


# ---------------------------------------------------------------------------
# Podstawa logarytmu
# ---------------------------------------------------------------------------

class LogBase(StrEnum):
    """Podstawa logarytmu dla entropii. Domyślnie naturalna (jak w ln 2a)."""
    E   = "e"
    TWO = "2"

    @property
    def factor(self) -> float:
        """Dzielnik przeliczający nat → jednostki tej podstawy."""
        return 1.0 if self is LogBase.E else math.log(2.0)


# ---------------------------------------------------------------------------
# Box
# ---------------------------------------------------------------------------

@dataclass(frozen=True, slots=True)
class Box:
    """
    Pudełko dziedziny [lows₁, highs₁] × … × [lowsₘ, highsₘ].

    - lows:  dolne granice
    - highs: górne granice (highs[k] > lows[k] dla każdego k)
    """
    lows:  tuple[float, ...]
    highs: tuple[float, ...]

    def __post_init__(self) -> None:
        if len(self.lows) != len(self.highs) or not self.lows:
            raise InvalidConfig(
                f"Box: niezgodne wymiary granic ({len(self.lows)} vs {len(self.highs)})."
            )
        for k, (lo, hi) in enumerate(zip(self.lows, self.highs)):
            if not (math.isfinite(lo) and math.isfinite(hi)) or not lo < hi:
                raise InvalidConfig(
                    f"Box: oś {k + 1} wymaga skończonych granic lo < hi, otrzymano [{lo}, {hi}]."
                )

    @property
    def dimension(self) -> int:
        return len(self.lows)

    def __str__(self) -> str:
        return " x ".join(f"[{lo:g}, {hi:g}]" for lo, hi in zip(self.lows, self.highs))

    @classmethod
    def cube(cls, lo: float, hi: float, dimension: int) -> Box:
        """Kostka [lo, hi]ᵐ."""
        return cls(lows=(lo,) * dimension, highs=(hi,) * dimension)
