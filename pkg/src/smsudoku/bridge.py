"""Translation between preference profiles and n^2 x n^2 Sudoku grids.

Geometry: band b (horizontal) is woman b, stack s (vertical) is man s.  Inside
the box at (band w, stack m) the cell at in-box row i, column j records that
woman w ranks man m as i and man m ranks woman w as j.  Rows and columns are
0-based here; the grid text format carries only cell values.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from .profiles import PreferenceProfile, extract_key, make_profile, parse_header, ranking_matrix

Cell = Tuple[int, int]
EMPTY = 0


class GridError(ValueError):
    """Raised for malformed or invalid grids and templates."""


@dataclass(frozen=True)
class BoxCoordinates:
    band: int
    stack: int
    in_box_row: int
    in_box_col: int

    def cell(self, n: int) -> Cell:
        return self.band * n + self.in_box_row, self.stack * n + self.in_box_col


def box_coordinates(cell: Cell, n: int) -> BoxCoordinates:
    r, c = cell
    return BoxCoordinates(r // n, c // n, r % n, c % n)


@dataclass(frozen=True)
class SudokuGrid:
    """Cells hold 1..n^2, or 0 for an empty cell."""

    n: int
    cells: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        size = self.n * self.n
        if len(self.cells) != size or any(len(row) != size for row in self.cells):
            raise GridError(f"grid for n={self.n} must be {size}x{size}")
        for row in self.cells:
            for v in row:
                if not 0 <= v <= size:
                    raise GridError(f"cell value {v} outside 1..{size}")

    @property
    def size(self) -> int:
        return self.n * self.n

    def __getitem__(self, cell: Cell) -> int:
        return self.cells[cell[0]][cell[1]]

    def is_complete(self) -> bool:
        return all(v for row in self.cells for v in row)

    def box(self, band: int, stack: int) -> Tuple[Tuple[int, ...], ...]:
        n = self.n
        return tuple(
            tuple(self.cells[band * n + i][stack * n + j] for j in range(n)) for i in range(n)
        )

    def clues(self) -> List[Tuple[Cell, int]]:
        return [((r, c), v) for r, row in enumerate(self.cells) for c, v in enumerate(row) if v]

    def with_cells(self, updates: Dict[Cell, int]) -> "SudokuGrid":
        rows = [list(row) for row in self.cells]
        for (r, c), v in updates.items():
            rows[r][c] = v
        return make_grid(self.n, rows)

    def restricted_to(self, cells: Iterable[Cell]) -> "SudokuGrid":
        keep = set(cells)
        rows = [[v if (r, c) in keep else EMPTY for c, v in enumerate(row)] for r, row in enumerate(self.cells)]
        return make_grid(self.n, rows)


def make_grid(n: int, rows: Sequence[Sequence[int]]) -> SudokuGrid:
    return SudokuGrid(n, tuple(tuple(int(v) for v in row) for row in rows))


def empty_grid(n: int) -> SudokuGrid:
    return make_grid(n, [[EMPTY] * (n * n) for _ in range(n * n)])


def units(n: int, dg: bool = False) -> List[List[Cell]]:
    """Rows, columns and boxes; with ``dg`` also the n^2 same-position groups."""
    size = n * n
    out = [[(r, c) for c in range(size)] for r in range(size)]
    out += [[(r, c) for r in range(size)] for c in range(size)]
    out += [
        [(b * n + i, s * n + j) for i in range(n) for j in range(n)] for b in range(n) for s in range(n)
    ]
    if dg:
        out += [
            [(b * n + i, s * n + j) for b in range(n) for s in range(n)] for i in range(n) for j in range(n)
        ]
    return out


def _all_distinct(grid: SudokuGrid, groups: List[List[Cell]]) -> bool:
    for group in groups:
        vals = [grid[c] for c in group if grid[c]]
        if len(vals) != len(set(vals)):
            return False
    return True


def is_valid_grid(grid: SudokuGrid) -> bool:
    """Complete grid with every digit once per row, column and box."""
    return grid.is_complete() and _all_distinct(grid, units(grid.n))


# ---------------------------------------------------------------------------
# templates

@dataclass(frozen=True)
class Template:
    n: int
    positions: FrozenSet[Cell]

    def __post_init__(self):
        check_template(self.n, self.positions)


def check_template(n: int, positions: Iterable[Cell]) -> None:
    positions = list(positions)
    size = n * n
    if len(positions) != size:
        raise GridError(f"template needs {size} cells, got {len(positions)}")
    rows = {r for r, _ in positions}
    cols = {c for _, c in positions}
    boxes = {(r // n, c // n) for r, c in positions}
    if len(rows) != size or len(cols) != size or len(boxes) != size:
        raise GridError("template must have exactly one cell in every row, column and box")
    if any(not (0 <= r < size and 0 <= c < size) for r, c in positions):
        raise GridError("template cell outside the grid")


def profile_to_template(profile: PreferenceProfile) -> Template:
    n = profile.n
    rm = ranking_matrix(profile)
    cells = frozenset(
        BoxCoordinates(w, m, rm[w][m][0] - 1, rm[w][m][1] - 1).cell(n) for w in range(n) for m in range(n)
    )
    return Template(n, cells)


def template_to_profile(template: Template) -> PreferenceProfile:
    n = template.n
    men = [[0] * n for _ in range(n)]
    women = [[0] * n for _ in range(n)]
    for cell in template.positions:
        bc = box_coordinates(cell, n)
        women[bc.band][bc.stack] = bc.in_box_row + 1
        men[bc.stack][bc.band] = bc.in_box_col + 1
    return make_profile(men, women)


def digit_template(grid: SudokuGrid, digit: int) -> Template:
    cells = frozenset((r, c) for r, row in enumerate(grid.cells) for c, v in enumerate(row) if v == digit)
    return Template(grid.n, cells)


def grid_to_profiles(grid: SudokuGrid) -> List[PreferenceProfile]:
    """Profiles for digits 1..n^2 of a complete valid grid, in digit order."""
    if not grid.is_complete():
        raise GridError("grid is incomplete")
    if not is_valid_grid(grid):
        raise GridError("grid violates the Sudoku rules")
    return [template_to_profile(digit_template(grid, d)) for d in range(1, grid.size + 1)]


def profiles_to_grid(profiles: Sequence[PreferenceProfile]) -> SudokuGrid:
    if not profiles:
        raise GridError("no profiles given")
    n = profiles[0].n
    size = n * n
    if len(profiles) != size or any(p.n != n for p in profiles):
        raise GridError(f"need {size} profiles of size {n}")
    owner: Dict[Cell, int] = {}
    for d, profile in enumerate(profiles, 1):
        for cell in profile_to_template(profile).positions:
            if cell in owner:
                raise GridError(
                    f"profiles for digits {owner[cell]} and {d} overlap at cell "
                    f"(row {cell[0] + 1}, col {cell[1] + 1})"
                )
            owner[cell] = d
    rows = [[owner[(r, c)] for c in range(size)] for r in range(size)]
    return make_grid(n, rows)


def profiles_overlap(a: PreferenceProfile, b: PreferenceProfile) -> bool:
    return bool(profile_to_template(a).positions & profile_to_template(b).positions)


def blocking_pairs_geometric(template: Template, pairing: Sequence[int]) -> List[Tuple[int, int]]:
    """Blocking pairs read off the picture.

    (m, w) blocks when its circle sits left of the circle of m's marriage in
    stack m and above the circle of w's marriage in band w.
    """
    n = template.n
    at: Dict[Tuple[int, int], Cell] = {}
    for cell in template.positions:
        bc = box_coordinates(cell, n)
        at[(bc.stack, bc.band)] = cell
    husband = {w: m for m, w in enumerate(pairing)}
    found = []
    for m in range(n):
        for w in range(n):
            row, col = at[(m, w)]
            wife_col = at[(m, pairing[m])][1]
            husband_row = at[(husband[w], w)][0]
            if col < wife_col and row < husband_row:
                found.append((m, w))
    return found


# ---------------------------------------------------------------------------
# grid properties

@dataclass(frozen=True)
class GridFlags:
    valid: bool
    dg: bool
    jg: bool


def grid_flags(grid: SudokuGrid) -> GridFlags:
    if not is_valid_grid(grid):
        return GridFlags(False, False, False)
    dg = _all_distinct(grid, units(grid.n, dg=True))
    jg = all(extract_key(p) is not None for p in grid_to_profiles(grid))
    return GridFlags(True, dg, jg)


def is_box_cyclic(grid: SudokuGrid) -> bool:
    """Boxes repeat along diagonals: box(b+1, s+1) == box(b, s) modulo n."""
    n = grid.n
    return all(
        grid.box((b + 1) % n, (s + 1) % n) == grid.box(b, s) for b in range(n) for s in range(n)
    )


def _check_base_box(base_box: Sequence[Sequence[int]]) -> Tuple[Tuple[int, ...], ...]:
    base = tuple(tuple(int(v) for v in row) for row in base_box)
    n = len(base)
    if n < 1 or any(len(row) != n for row in base):
        raise GridError("base box must be square")
    if sorted(v for row in base for v in row) != list(range(1, n * n + 1)):
        raise GridError(f"base box must hold each of 1..{n * n} once")
    return base


def box_cyclic_grid(base_box: Sequence[Sequence[int]]) -> SudokuGrid:
    """Joint-groups grid built by shifting the base box diagonally.

    The box at band b, stack s is the base box shifted k = (b - s) mod n steps
    right and down (wrapping), so every diagonal of boxes repeats one box.
    """
    base = _check_base_box(base_box)
    n = len(base)
    size = n * n
    rows = [[0] * size for _ in range(size)]
    for b in range(n):
        for s in range(n):
            k = (b - s) % n
            for i in range(n):
                for j in range(n):
                    rows[b * n + i][s * n + j] = base[(i - k) % n][(j - k) % n]
    return make_grid(n, rows)


def box_cyclic_key(n: int, a: int, b: int) -> Tuple[int, ...]:
    """Key of the digit at 1-based position (a, b) of the base box: f(x) = ((b - a + x - 1) mod n) + 1."""
    return tuple((b - a + x - 1) % n + 1 for x in range(1, n + 1))


def placement_matrix(grid: SudokuGrid) -> Tuple[Tuple[Tuple[int, ...], ...], ...]:
    """Per in-box position, the sorted digits occupying it in some box.

    Defined for joint-groups grids, where every listed digit fills that
    position in exactly n boxes.
    """
    n = grid.n
    counts: Dict[Tuple[int, int, int], int] = {}
    for r, row in enumerate(grid.cells):
        for c, v in enumerate(row):
            key = (r % n, c % n, v)
            counts[key] = counts.get(key, 0) + 1
    bad = sorted((v, i + 1, j + 1, k) for (i, j, v), k in counts.items() if k != n)
    if not grid.is_complete() or bad:
        detail = ""
        if bad:
            v, i, j, k = bad[0]
            detail = f": digit {v} fills in-box position ({i},{j}) {k} times, not {n}"
        raise GridError("placement matrix needs a complete joint-groups grid" + detail)
    return tuple(
        tuple(tuple(sorted(v for (ii, jj, v) in counts if (ii, jj) == (i, j))) for j in range(n))
        for i in range(n)
    )


def is_cyclic_matrix(matrix: Sequence[Sequence]) -> bool:
    """Each row is the previous row rotated one step to the right."""
    n = len(matrix)
    return all(
        matrix[(i + 1) % n][(j + 1) % n] == matrix[i][j] for i in range(n) for j in range(n)
    )


def manhattan_cost(position: Tuple[int, int], n: Optional[int] = None) -> int:
    """Egalitarian cost of the couple marked at 1-based in-box position (s, t)."""
    s, t = position
    if s < 1 or t < 1 or (n is not None and (s > n or t > n)):
        raise ValueError(f"in-box position {position} out of range")
    return (s - 1) + (t - 1) + 2


def relabel_canonical(grid: SudokuGrid) -> SudokuGrid:
    """Rename digits so the first row reads 1, 2, ..., n^2."""
    mapping = {v: i + 1 for i, v in enumerate(grid.cells[0])}
    if len(mapping) != grid.size or 0 in mapping:
        raise GridError("first row must be complete and distinct to canonicalise")
    return make_grid(grid.n, [[mapping[v] if v else EMPTY for v in row] for row in grid.cells])


# ---------------------------------------------------------------------------
# text format

def format_grid(grid: SudokuGrid) -> str:
    lines = [f"n={grid.n}"]
    lines += [" ".join(str(v) if v else "." for v in row) for row in grid.cells]
    return "\n".join(lines) + "\n"


def parse_grid(text: str) -> SudokuGrid:
    lines = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    if not lines:
        raise GridError("empty grid file")
    try:
        n = parse_header(lines[0])
    except ValueError as exc:
        raise GridError(str(exc)) from None
    size = n * n
    body = lines[1:]
    if len(body) != size:
        raise GridError(f"expected {size} grid rows, got {len(body)}")
    rows = []
    for line in body:
        toks = line.split()
        if len(toks) != size:
            raise GridError(f"expected {size} tokens per row, got {len(toks)}: {line!r}")
        row = []
        for tok in toks:
            if tok == ".":
                row.append(EMPTY)
            elif tok.isdigit() and 1 <= int(tok) <= size:
                row.append(int(tok))
            else:
                raise GridError(f"bad cell token {tok!r}")
        rows.append(row)
    return make_grid(n, rows)


def grid_from_columns(columns: Sequence[Sequence[int]], n: int) -> SudokuGrid:
    """Build a grid from column-major data (0 for blanks)."""
    size = n * n
    return make_grid(n, [[columns[c][r] for c in range(size)] for r in range(size)])


def template_grid(template: Template, digit: int = 1) -> SudokuGrid:
    size = template.n * template.n
    rows = [[digit if (r, c) in template.positions else EMPTY for c in range(size)] for r in range(size)]
    return make_grid(template.n, rows)


def grid_template(grid: SudokuGrid) -> Optional[Template]:
    """If the filled cells of a partial grid are a single template, return it."""
    cells = frozenset(cell for cell, _ in grid.clues())
    try:
        return Template(grid.n, cells)
    except GridError:
        return None


def all_templates(n: int) -> List[Template]:
    """Every single-digit placement in an n^2 x n^2 grid, by brute force over row -> column maps."""
    from itertools import permutations

    size = n * n
    out = []
    for cols in permutations(range(size)):
        if len({(r // n, c // n) for r, c in enumerate(cols)}) == size:
            out.append(Template(n, frozenset(enumerate(cols))))
    return out
