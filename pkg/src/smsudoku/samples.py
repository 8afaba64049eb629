"""Reference grids, puzzles and profiles used by the checks and the CLI.

Grids are written column by column (each inner list is one column read top to
bottom, 0 for a blank).
"""
from __future__ import annotations

from .bridge import SudokuGrid, Template, grid_from_columns, make_grid, template_to_profile
from .profiles import PreferenceProfile, make_profile, profile_from_ranking_matrix

_LEX_EARLIEST = [
    [1, 4, 7, 2, 3, 8, 5, 6, 9],
    [2, 5, 8, 1, 6, 9, 3, 4, 7],
    [3, 6, 9, 4, 5, 7, 1, 2, 8],
    [4, 7, 1, 3, 8, 2, 6, 9, 5],
    [5, 8, 2, 6, 9, 1, 4, 7, 3],
    [6, 9, 3, 5, 7, 4, 2, 8, 1],
    [7, 1, 4, 8, 2, 3, 9, 5, 6],
    [8, 2, 5, 9, 1, 6, 7, 3, 4],
    [9, 3, 6, 7, 4, 5, 8, 1, 2],
]

_MEN_ALIKE = [
    [1, 4, 7, 2, 5, 8, 3, 6, 9],
    [2, 5, 8, 3, 6, 9, 4, 7, 1],
    [3, 6, 9, 4, 7, 1, 5, 8, 2],
    [4, 7, 1, 5, 8, 2, 6, 9, 3],
    [5, 8, 2, 6, 9, 3, 7, 1, 4],
    [6, 9, 3, 7, 1, 4, 8, 2, 5],
    [7, 1, 4, 8, 2, 5, 9, 3, 6],
    [8, 2, 5, 9, 3, 6, 1, 4, 7],
    [9, 3, 6, 1, 4, 7, 2, 5, 8],
]

_DG_TWO_MATCHINGS = [
    [1, 2, 3, 4, 5, 6, 7, 8, 9],
    [4, 5, 6, 7, 8, 9, 3, 1, 2],
    [7, 8, 9, 2, 3, 1, 4, 5, 6],
    [6, 4, 5, 3, 1, 2, 9, 7, 8],
    [9, 7, 8, 6, 4, 5, 1, 2, 3],
    [3, 1, 2, 9, 7, 8, 6, 4, 5],
    [8, 9, 7, 5, 6, 4, 2, 3, 1],
    [2, 3, 1, 8, 9, 7, 5, 6, 4],
    [5, 6, 4, 1, 2, 3, 8, 9, 7],
]

_JG_NOT_BOX_CYCLIC = [
    [1, 8, 6, 3, 9, 4, 2, 7, 5],
    [4, 2, 9, 5, 1, 7, 6, 3, 8],
    [7, 5, 3, 8, 6, 2, 9, 4, 1],
    [2, 9, 4, 1, 7, 5, 3, 8, 6],
    [5, 3, 7, 6, 2, 8, 4, 1, 9],
    [8, 6, 1, 9, 4, 3, 7, 5, 2],
    [3, 7, 5, 2, 8, 6, 1, 9, 4],
    [6, 1, 8, 4, 3, 9, 5, 2, 7],
    [9, 4, 2, 7, 5, 1, 8, 6, 3],
]

_JG_PUZZLE_EASY = [
    [0, 0, 0, 0, 0, 0, 3, 0, 5],
    [0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 3, 0, 0, 0],
    [0, 0, 0, 1, 0, 0, 0, 6, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 2, 0, 0],
    [7, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 8, 0, 0, 6],
    [0, 4, 0, 0, 5, 0, 0, 9, 0],
]

_JG_PUZZLE_MINIMAL = [
    [0, 6, 0, 0, 0, 0, 0, 0, 0],
    [9, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 1, 0, 0, 0, 0, 0, 0],
    [5, 7, 8, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 2, 0, 0, 0, 0, 0, 3],
]

_JG_ANSWER_EASY = [
    [1, 6, 9, 7, 2, 4, 3, 8, 5],
    [4, 3, 8, 5, 1, 6, 9, 7, 2],
    [2, 5, 7, 8, 9, 3, 6, 4, 1],
    [3, 2, 4, 1, 8, 5, 7, 6, 9],
    [5, 7, 6, 9, 3, 2, 4, 1, 8],
    [8, 9, 1, 6, 4, 7, 2, 5, 3],
    [7, 8, 5, 3, 6, 9, 1, 2, 4],
    [9, 1, 2, 4, 7, 8, 5, 3, 6],
    [6, 4, 3, 2, 5, 1, 8, 9, 7],
]

_JG_ANSWER_MINIMAL = [
    [1, 6, 4, 5, 7, 8, 2, 3, 9],
    [9, 2, 5, 3, 1, 6, 8, 4, 7],
    [7, 8, 3, 4, 9, 2, 6, 5, 1],
    [2, 3, 9, 1, 6, 4, 5, 7, 8],
    [8, 4, 7, 9, 2, 5, 3, 1, 6],
    [6, 5, 1, 7, 8, 3, 4, 9, 2],
    [5, 7, 8, 2, 3, 9, 1, 6, 4],
    [3, 1, 6, 8, 4, 7, 9, 2, 5],
    [4, 9, 2, 6, 5, 1, 7, 8, 3],
]

LEX_EARLIEST: SudokuGrid = grid_from_columns(_LEX_EARLIEST, 3)
MEN_ALIKE_DG: SudokuGrid = grid_from_columns(_MEN_ALIKE, 3)
DG_TWO_MATCHINGS: SudokuGrid = grid_from_columns(_DG_TWO_MATCHINGS, 3)
JG_NOT_BOX_CYCLIC: SudokuGrid = grid_from_columns(_JG_NOT_BOX_CYCLIC, 3)
JG_PUZZLE_EASY: SudokuGrid = grid_from_columns(_JG_PUZZLE_EASY, 3)
JG_PUZZLE_MINIMAL: SudokuGrid = grid_from_columns(_JG_PUZZLE_MINIMAL, 3)
JG_ANSWER_EASY: SudokuGrid = grid_from_columns(_JG_ANSWER_EASY, 3)
JG_ANSWER_MINIMAL: SudokuGrid = grid_from_columns(_JG_ANSWER_MINIMAL, 3)

JG_N2: SudokuGrid = make_grid(2, [[1, 2, 3, 4], [4, 3, 2, 1], [3, 4, 1, 2], [2, 1, 4, 3]])

# placement matrices of the two answers and of the non-box-cyclic grid, entries as digit strings
JG_NOT_BOX_CYCLIC_PLACEMENT = ((123, 456, 789), (789, 123, 456), (456, 789, 123))
JG_ANSWER_EASY_PLACEMENT = ((137, 459, 268), (268, 137, 459), (459, 268, 137))
JG_ANSWER_MINIMAL_PLACEMENT = ((125, 389, 467), (367, 124, 589), (489, 567, 123))
JG_N2_PLACEMENT = ((13, 24), (24, 13))

# digit-profile types of the twelve n=2 grids (first row 1234) in lexicographic order
N2_CLASS_TYPES = (
    "AAAA", "BABA", "ABAB", "BBBB", "BBAA", "CDBB",
    "AABB", "BBCD", "BBBB", "CBBD", "BDCB", "CDCD",
)

# A prefers C, B prefers D, both women prefer B
SMALL_EXAMPLE: PreferenceProfile = make_profile([[1, 2], [2, 1]], [[2, 1], [2, 1]])

# disjoint mutually Latin n=3 profile
DISJOINT_LATIN: PreferenceProfile = make_profile(
    [[1, 2, 3], [3, 1, 2], [2, 3, 1]], [[1, 2, 3], [2, 3, 1], [3, 1, 2]]
)

# 4x4 joint profile given by its ranking matrix; stable matching (w, m): (1,3) (2,4) (3,2) (4,1)
JOINT_4X4: PreferenceProfile = profile_from_ranking_matrix(
    [
        [(3, 4), (4, 3), (1, 2), (2, 1)],
        [(4, 3), (3, 4), (2, 1), (1, 2)],
        [(1, 2), (2, 1), (3, 4), (4, 3)],
        [(2, 1), (1, 2), (4, 3), (3, 4)],
    ]
)
JOINT_4X4_STABLE_PAIRING = (3, 2, 0, 1)  # man -> woman, 0-based

# template of a 4x4 profile that takes four deferred-acceptance rounds, (row, col) 0-based
GS_EXAMPLE_CELLS = (
    (0, 15), (1, 0), (2, 4), (3, 8), (4, 5), (5, 9), (6, 3), (7, 12),
    (8, 6), (9, 10), (10, 13), (11, 2), (12, 7), (13, 11), (14, 14), (15, 1),
)
GS_EXAMPLE: PreferenceProfile = template_to_profile(Template(4, frozenset(GS_EXAMPLE_CELLS)))
GS_EXAMPLE_FINAL_CELLS = ((1, 0), (4, 5), (9, 10), (14, 14))

# one template of each of the types A, C and D at n=2, (row, col) 0-based
TYPE_A_CELLS = ((0, 0), (2, 1), (1, 2), (3, 3))
TYPE_C_CELLS = ((0, 0), (3, 1), (2, 2), (1, 3))
TYPE_D_CELLS = ((1, 0), (2, 1), (3, 2), (0, 3))
TYPE_A: PreferenceProfile = template_to_profile(Template(2, frozenset(TYPE_A_CELLS)))
TYPE_C: PreferenceProfile = template_to_profile(Template(2, frozenset(TYPE_C_CELLS)))
TYPE_D: PreferenceProfile = template_to_profile(Template(2, frozenset(TYPE_D_CELLS)))

# the six n=3 keys as (f(1), f(2), f(3)), in reporting order
N3_KEY_ORDER = ((1, 2, 3), (1, 3, 2), (3, 2, 1), (3, 1, 2), (2, 3, 1), (2, 1, 3))
N3_KEY_COUNTS = (1, 1, 3, 2, 2, 2)

PSEUDO_LATIN_MAXIMA = {1: 1, 2: 2, 3: 3, 4: 10, 5: 12}
