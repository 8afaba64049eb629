"""Stable marriage profiles viewed as digit placements in n^2 x n^2 Sudoku grids."""

__version__ = "0.1.0"
