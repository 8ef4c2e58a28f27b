"""
partition/grid.py — jednorodna siatka pudełkowa {A_k} i indeksowanie punkt → komórka.

Konwencja komórek: na każdej osi komórka k to [lo + k·w, lo + (k+1)·w),
ostatnia komórka jest domknięta z góry (x = hi trafia do niej).
Indeksy wieloosiowe są linearyzowane wierszowo (oś 0 najwolniejsza).
Skończone punkty spoza pudełka trafiają do jednej komórki przepełnienia
o identyfikatorze `overflow_cell` (= liczba komórek regularnych).
"""

from __future__ import annotations

import math
from collections.abc import Sequence
from dataclasses import dataclass, field

import numpy as np

from data_model import Box, InvalidConfig, NonFiniteInput, UnknownMap

# Standardowe podziały map wbudowanych: Bernoulli A_i = [i/2000, (i+1)/2000),
# Baker 100×100 na [0,1]², Tinkerbell indeksy i = −120..39, j = −70..29
# (szerokość 1/100) na [−1.2, 0.4] × [−0.7, 0.3].
STANDARD_CELLS: dict[str, tuple[int, ...]] = {
    "bernoulli":    (2000,),
    "baker":        (100, 100),
    "tinkerbell_a": (160, 100),
    "tinkerbell_b": (160, 100),
    "logistic":     (2000,),
}


@dataclass(frozen=True, slots=True)
class GridPartition:
    """
    Podział pudełka na komórki.

    - box:            pudełko dziedziny I
    - cells_per_axis: liczba komórek na każdej osi
    """
    box:            Box
    cells_per_axis: tuple[int, ...]
    _scale:         tuple[float, ...] = field(init=False, repr=False, compare=False)
    _width:         tuple[float, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if len(self.cells_per_axis) != self.box.dimension:
            raise InvalidConfig(
                f"Podział: {len(self.cells_per_axis)} osi, pudełko ma wymiar {self.box.dimension}."
            )
        if any(int(c) != c or c < 1 for c in self.cells_per_axis):
            raise InvalidConfig(f"Podział: liczby komórek muszą być dodatnie, otrzymano {self.cells_per_axis}.")
        scale = tuple(
            c / (hi - lo) for c, lo, hi in zip(self.cells_per_axis, self.box.lows, self.box.highs)
        )
        width = tuple(
            (hi - lo) / c for c, lo, hi in zip(self.cells_per_axis, self.box.lows, self.box.highs)
        )
        object.__setattr__(self, "_scale", scale)
        object.__setattr__(self, "_width", width)

    # ------------------------------------------------------------------

    @property
    def dimension(self) -> int:
        return self.box.dimension

    @property
    def regular_cells(self) -> int:
        return math.prod(self.cells_per_axis)

    @property
    def total_cells(self) -> int:
        """Komórki regularne + komórka przepełnienia."""
        return self.regular_cells + 1

    @property
    def overflow_cell(self) -> int:
        return self.regular_cells

    @property
    def widths(self) -> tuple[float, ...]:
        return self._width

    # ------------------------------------------------------------------

    def cell_index(self, x: Sequence[float]) -> int:
        """Identyfikator komórki zawierającej x. NonFiniteInput dla NaN/∞."""
        if len(x) != self.dimension:
            raise InvalidConfig(f"Punkt ma {len(x)} współrzędnych, podział {self.dimension}.")
        if not all(math.isfinite(v) for v in x):
            raise NonFiniteInput(f"Punkt nie jest skończony: {tuple(x)}.")
        linear = 0
        for v, lo, hi, scale, w, cells in zip(
            x, self.box.lows, self.box.highs, self._scale, self._width, self.cells_per_axis
        ):
            if v < lo or v > hi:
                return self.overflow_cell
            k = min(math.floor((v - lo) * scale), cells - 1)
            # floor może się pomylić o 1 przy krawędzi; rozstrzyga lo + k·w jak w cell_bounds
            if v < lo + k * w:
                k -= 1
            elif k < cells - 1 and v >= lo + (k + 1) * w:
                k += 1
            linear = linear * cells + k
        return linear

    def cell_indices(self, points: np.ndarray) -> np.ndarray:
        """Wersja wektorowa: points (N, m) → tablica int64 (N,)."""
        pts = np.asarray(points, dtype=np.float64).reshape(-1, self.dimension)
        if not np.isfinite(pts).all():
            raise NonFiniteInput("Orbita zawiera współrzędne NaN/∞.")
        lows  = np.asarray(self.box.lows)
        highs = np.asarray(self.box.highs)
        cells = np.asarray(self.cells_per_axis, dtype=np.int64)

        inside = ((pts >= lows) & (pts <= highs)).all(axis=1)
        k = np.floor((pts - lows) * np.asarray(self._scale)).astype(np.int64)
        k = np.clip(k, 0, cells - 1)
        width = np.asarray(self._width)
        k -= (pts < lows + k * width).astype(np.int64)
        k += ((k < cells - 1) & (pts >= lows + (k + 1) * width)).astype(np.int64)

        linear = np.zeros(len(pts), dtype=np.int64)
        for axis in range(self.dimension):
            linear = linear * cells[axis] + k[:, axis]
        linear[~inside] = self.overflow_cell
        return linear

    def cell_bounds(self, cell: int) -> tuple[tuple[float, ...], tuple[float, ...]]:
        """
        Granice (dolne, górne) komórki regularnej. Górna granica ostatniej
        komórki osi to dokładnie hi (komórka domknięta).
        """
        if not 0 <= cell < self.regular_cells:
            raise InvalidConfig(f"Komórka {cell} nie jest komórką regularną.")
        ks: list[int] = []
        for cells in reversed(self.cells_per_axis):
            cell, k = divmod(cell, cells)
            ks.append(k)
        ks.reverse()
        lows = tuple(lo + k * w for lo, k, w in zip(self.box.lows, ks, self._width))
        highs = tuple(
            hi if k == cells - 1 else lo + (k + 1) * w
            for lo, hi, k, w, cells in zip(self.box.lows, self.box.highs, ks, self._width, self.cells_per_axis)
        )
        return lows, highs


# ---------------------------------------------------------------------------
# Operacje modułu
# ---------------------------------------------------------------------------

def cell_index(p: GridPartition, x: Sequence[float]) -> int:
    return p.cell_index(x)


def standard_partition(map_name: str) -> GridPartition:
    """Standardowy podział mapy wbudowanej. UnknownMap dla innych."""
    from dynsys import BUILTIN_NAMES, builtin

    if map_name not in STANDARD_CELLS:
        raise UnknownMap(map_name, BUILTIN_NAMES)
    return GridPartition(box=builtin(map_name).domain, cells_per_axis=STANDARD_CELLS[map_name])
