"""Variant-aware Sudoku solving: standard, disjoint-groups (DG) and joint-groups (JG).

DG adds one all-different group per in-box position.  JG requires every
digit to form a joint profile: within a digit, all occurrences sharing an
in-box row share the in-box column and vice versa, i.e. each digit carries a
partial bijection from in-box rows to in-box columns.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Tuple, Union

from .bridge import Cell, SudokuGrid, grid_flags, make_grid, units

STANDARD = "standard"
DG = "dg"
JG = "jg"
VARIANTS = (STANDARD, DG, JG)


class InconsistentPuzzle(ValueError):
    """The givens already break a rule of the chosen variant."""


@dataclass(frozen=True)
class Puzzle:
    grid: SudokuGrid
    variant: str = STANDARD

    def __post_init__(self):
        if self.variant not in VARIANTS:
            raise ValueError(f"unknown variant {self.variant!r}; choose from {VARIANTS}")


@dataclass
class SolveReport:
    solutions: List[SudokuGrid]
    reached_cap: bool
    nodes_expanded: int = 0

    @property
    def count(self) -> int:
        return len(self.solutions)

    @property
    def solution_count_status(self) -> Union[int, str]:
        return "reached cap" if self.reached_cap else len(self.solutions)

    @property
    def status(self) -> str:
        if not self.solutions:
            return "none"
        return "unique" if len(self.solutions) == 1 and not self.reached_cap else "multiple"


@dataclass
class _Layout:
    n: int
    size: int
    ncells: int
    units: List[List[int]]
    cell_units: List[List[int]]
    peers: List[List[int]]
    jg_conflicts: List[List[int]] = field(default_factory=list)


_LAYOUTS: Dict[Tuple[int, str], _Layout] = {}


def _layout(n: int, variant: str) -> _Layout:
    key = (n, variant)
    if key in _LAYOUTS:
        return _LAYOUTS[key]
    size = n * n
    ncells = size * size
    idx = lambda rc: rc[0] * size + rc[1]  # noqa: E731
    unit_list = [[idx(c) for c in u] for u in units(n, dg=variant == DG)]
    cell_units: List[List[int]] = [[] for _ in range(ncells)]
    for u in unit_list:
        for c in u:
            cell_units[c].append(u)
    peers = [sorted({p for u in cell_units[c] for p in u} - {c}) for c in range(ncells)]
    jg_conflicts: List[List[int]] = [[] for _ in range(ncells)]
    if variant == JG:
        for a in range(ncells):
            ra, ca = divmod(a, size)
            for b in range(ncells):
                rb, cb = divmod(b, size)
                same_row = ra % n == rb % n
                same_col = ca % n == cb % n
                if same_row != same_col:
                    jg_conflicts[a].append(b)
    layout = _Layout(n, size, ncells, unit_list, cell_units, peers, jg_conflicts)
    _LAYOUTS[key] = layout
    return layout


def _cell_name(cell: int, size: int) -> str:
    r, c = divmod(cell, size)
    return f"r{r + 1}c{c + 1}"


def check_clues(puzzle: Puzzle) -> None:
    """Raise InconsistentPuzzle naming the broken constraint and the two cells."""
    grid = puzzle.grid
    lay = _layout(grid.n, puzzle.variant)
    flat = [v for row in grid.cells for v in row]
    for a in range(lay.ncells):
        if not flat[a]:
            continue
        for b in lay.peers[a]:
            if b > a and flat[b] == flat[a]:
                kind = _shared_unit_kind(a, b, grid.n)
                raise InconsistentPuzzle(
                    f"{kind} constraint: digit {flat[a]} repeated at "
                    f"{_cell_name(a, lay.size)} and {_cell_name(b, lay.size)}"
                )
        for b in lay.jg_conflicts[a]:
            if b > a and flat[b] == flat[a]:
                raise InconsistentPuzzle(
                    f"joint-groups constraint: digit {flat[a]} at {_cell_name(a, lay.size)} and "
                    f"{_cell_name(b, lay.size)} breaks its key"
                )


def _shared_unit_kind(a: int, b: int, n: int) -> str:
    size = n * n
    ra, ca = divmod(a, size)
    rb, cb = divmod(b, size)
    if ra == rb:
        return "row"
    if ca == cb:
        return "column"
    if (ra // n, ca // n) == (rb // n, cb // n):
        return "box"
    return "disjoint-groups"


class _Search:
    def __init__(self, puzzle: Puzzle, cap: Optional[int]):
        self.grid = puzzle.grid
        self.lay = _layout(puzzle.grid.n, puzzle.variant)
        self.cap = cap
        self.full = (1 << self.lay.size) - 1
        self.solutions: List[Tuple[int, ...]] = []
        self.nodes = 0
        self.reached_cap = False

    def _propagate(self, cand: List[int], todo: List[Tuple[int, int]]) -> bool:
        """Apply (cell, bit) eliminations until a fixpoint; False on contradiction."""
        lay = self.lay
        while todo:
            cell, bit = todo.pop()
            if not cand[cell] & bit:
                continue
            cand[cell] &= ~bit
            rest = cand[cell]
            if not rest:
                return False
            if rest & (rest - 1) == 0:
                for p in lay.peers[cell]:
                    if cand[p] & rest:
                        todo.append((p, rest))
                for p in lay.jg_conflicts[cell]:
                    if cand[p] & rest:
                        todo.append((p, rest))
            for unit in lay.cell_units[cell]:
                places = [c for c in unit if cand[c] & bit]
                if not places:
                    return False
                if len(places) == 1:
                    only = places[0]
                    others = cand[only] & ~bit
                    while others:
                        low = others & -others
                        todo.append((only, low))
                        others ^= low
        return True

    def run(self) -> None:
        lay = self.lay
        cand = [self.full] * lay.ncells
        todo = []
        for (r, c), v in self.grid.clues():
            bit = 1 << (v - 1)
            others = self.full & ~bit
            while others:
                low = others & -others
                todo.append((r * lay.size + c, low))
                others ^= low
        if self._propagate(cand, todo):
            self._search(cand)

    def _search(self, cand: List[int]) -> None:
        if self.reached_cap:
            return
        best, best_count = -1, 10**9
        for cell, mask in enumerate(cand):
            if mask & (mask - 1):
                k = bin(mask).count("1")
                if k < best_count:
                    best, best_count = cell, k
                    if k == 2:
                        break
        if best < 0:
            self.solutions.append(tuple(m.bit_length() for m in cand))
            if self.cap is not None and len(self.solutions) >= self.cap:
                self.reached_cap = True
            return
        mask = cand[best]
        while mask:
            bit = mask & -mask
            mask ^= bit
            self.nodes += 1
            trial = cand[:]
            todo = []
            others = trial[best] & ~bit
            while others:
                low = others & -others
                todo.append((best, low))
                others ^= low
            if self._propagate(trial, todo):
                self._search(trial)
            if self.reached_cap:
                return


class _PlainSearch:
    """Row-major backtracking with no propagation; serves as an oracle."""

    def __init__(self, puzzle: Puzzle, cap: Optional[int]):
        self.lay = _layout(puzzle.grid.n, puzzle.variant)
        self.values = [v for row in puzzle.grid.cells for v in row]
        self.cap = cap
        self.solutions: List[Tuple[int, ...]] = []
        self.nodes = 0
        self.reached_cap = False
        self.blanks = [i for i, v in enumerate(self.values) if not v]

    def _ok(self, cell: int, v: int) -> bool:
        vals = self.values
        return all(vals[p] != v for p in self.lay.peers[cell]) and all(
            vals[p] != v for p in self.lay.jg_conflicts[cell]
        )

    def run(self, k: int = 0) -> None:
        if k == len(self.blanks):
            self.solutions.append(tuple(self.values))
            if self.cap is not None and len(self.solutions) >= self.cap:
                self.reached_cap = True
            return
        cell = self.blanks[k]
        for v in range(1, self.lay.size + 1):
            if self._ok(cell, v):
                self.nodes += 1
                self.values[cell] = v
                self.run(k + 1)
                self.values[cell] = 0
                if self.reached_cap:
                    return


def solve(puzzle: Puzzle, cap: Optional[int] = 2, propagate: bool = True) -> SolveReport:
    """Find solutions up to ``cap`` (None for all), sorted lexicographically by row-major scan."""
    if cap is not None and cap < 1:
        raise ValueError("cap must be positive")
    check_clues(puzzle)
    engine = _Search(puzzle, cap) if propagate else _PlainSearch(puzzle, cap)
    engine.run()
    size = puzzle.grid.size
    grids = [
        make_grid(puzzle.grid.n, [flat[r * size : (r + 1) * size] for r in range(size)])
        for flat in sorted(engine.solutions)
    ]
    return SolveReport(grids, engine.reached_cap, engine.nodes)


def has_unique_solution(puzzle: Puzzle) -> bool:
    report = solve(puzzle, cap=2)
    return report.status == "unique"


def satisfies_variant(grid: SudokuGrid, variant: str) -> bool:
    """Re-check a finished grid from scratch against the variant rules."""
    flags = grid_flags(grid)
    if variant == DG:
        return flags.dg
    if variant == JG:
        return flags.jg
    return flags.valid


def all_grids(n: int) -> List[SudokuGrid]:
    from .bridge import empty_grid

    return solve(Puzzle(empty_grid(n)), cap=None).solutions


# ---------------------------------------------------------------------------
# n = 2 clue bounds

@dataclass(frozen=True)
class ClueBounds:
    guarantee_threshold: int
    witness_puzzle: Puzzle
    witness_solutions: int


def _completion_counts(grids: Sequence[SudokuGrid], cells: Sequence[Cell]) -> Dict[Tuple[int, ...], int]:
    counts: Dict[Tuple[int, ...], int] = {}
    for g in grids:
        key = tuple(g[c] for c in cells)
        counts[key] = counts.get(key, 0) + 1
    return counts


def n2_clue_bounds() -> ClueBounds:
    """Smallest k such that every k-clue sub-puzzle of every n=2 grid completes uniquely.

    Every completion of a sub-puzzle is itself one of the 288 grids, so a
    clue set determines its grid iff no other grid agrees on those cells.
    Also returns the first (lexicographic) sub-puzzle with k-1 clues and two
    completions, confirmed by the solver.
    """
    grids = all_grids(2)
    cells = [(r, c) for r in range(4) for c in range(4)]
    threshold = 16
    witness = None
    for k in range(16, 0, -1):
        failing = None
        for subset in combinations(cells, k):
            counts = _completion_counts(grids, subset)
            if any(v > 1 for v in counts.values()):
                failing = subset
                break
        if failing is not None:
            witness = failing
            break
        threshold = k
    assert witness is not None
    counts = _completion_counts(grids, witness)
    grid = next(g for g in grids if counts[tuple(g[c] for c in witness)] > 1)
    puzzle = Puzzle(grid.restricted_to(witness))
    report = solve(puzzle, cap=None)
    return ClueBounds(threshold, puzzle, report.count)


def jg_min_clues_n2() -> int:
    """Fewest clues of a uniquely solvable joint-groups puzzle at n = 2.

    Exhaustive over clue subsets of the canonical JG grid; relabelling digits
    carries the answer to the other 23 JG grids.
    """
    from .samples import JG_N2

    jg_grids = [g for g in all_grids(2) if grid_flags(g).jg]
    cells = [(r, c) for r in range(4) for c in range(4)]
    for k in range(0, 17):
        for subset in combinations(cells, k):
            key = tuple(JG_N2[c] for c in subset)
            if sum(1 for g in jg_grids if tuple(g[c] for c in subset) == key) == 1:
                return k
    return 16
