"""
partition — jednorodny podział dziedziny i indeksowanie komórek.

Publiczne API:
  GridPartition(box, cells_per_axis)
  cell_index(p, x)         → id komórki (overflow dla punktów spoza pudełka)
  standard_partition(name) → standardowy podział mapy wbudowanej
"""

from .grid import STANDARD_CELLS, GridPartition, cell_index, standard_partition

__all__ = ["GridPartition", "cell_index", "standard_partition", "STANDARD_CELLS"]
