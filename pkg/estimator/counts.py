"""
estimator/counts.py — rzadka tablica przejść (cell(x⁽ᵏ⁾), cell(x⁽ᵏ⁺¹⁾)).

Tablica gęsta dla siatki Tinkerbella miałaby 16001² pól; obserwowanych
przejść jest O(n), więc trzymamy macierz CSR (scipy.sparse).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.sparse

from partition import GridPartition


@dataclass(frozen=True, slots=True)
class TransitionCounts:
    """
    Zliczenia par kolejnych komórek w oknie zliczania.

    - matrix:        CSR (total_cells × total_cells), matrix[i, j] = liczba przejść i → j
    - total:         n = Σ zliczeń
    - overflow_hits: liczba par, w których występuje komórka przepełnienia
    - n_cells:       total_cells podziału (z komórką przepełnienia)
    """
    matrix:        scipy.sparse.csr_matrix
    total:         int
    overflow_hits: int
    n_cells:       int

    def entries(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """(wiersze, kolumny, zliczenia) niezerowych wpisów w porządku CSR."""
        coo = self.matrix.tocoo()
        return coo.row.astype(np.int64), coo.col.astype(np.int64), coo.data.astype(np.int64)

    def row_totals(self) -> np.ndarray:
        """Σ_j count(i, j): licznik brzegowego rozkładu wejściowego p."""
        return np.asarray(self.matrix.sum(axis=1), dtype=np.int64).ravel()

    def column_totals(self) -> np.ndarray:
        """Σ_i count(i, j): licznik brzegowego rozkładu wyjściowego p̄."""
        return np.asarray(self.matrix.sum(axis=0), dtype=np.int64).ravel()

    def as_dict(self) -> dict[tuple[int, int], int]:
        rows, cols, data = self.entries()
        return {(int(i), int(j)): int(c) for i, j, c in zip(rows, cols, data)}


def count_transitions(orbit: np.ndarray, partition: GridPartition) -> TransitionCounts:
    """
    Dla k = 1..n zwiększa count(cell(x⁽ᵏ⁾), cell(x⁽ᵏ⁺¹⁾)); orbita ma n + 1 stanów.
    NonFiniteInput gdy orbita zawiera NaN/∞.
    """
    cells = partition.cell_indices(orbit)
    src, dst = cells[:-1], cells[1:]
    size = partition.total_cells

    matrix = scipy.sparse.coo_matrix(
        (np.ones(len(src), dtype=np.int64), (src, dst)),
        shape=(size, size),
    ).tocsr()
    matrix.sum_duplicates()
    matrix.sort_indices()

    overflow = partition.overflow_cell
    hits = int(np.count_nonzero((src == overflow) | (dst == overflow)))
    return TransitionCounts(matrix=matrix, total=int(len(src)), overflow_hits=hits, n_cells=size)
