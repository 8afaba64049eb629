import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from smsudoku import bridge as br
from smsudoku import samples
from smsudoku import solver as sv

N2_CELLS = [(r, c) for r in range(4) for c in range(4)]


def test_all_n2_grids_both_engines():
    fast = sv.solve(sv.Puzzle(br.empty_grid(2)), cap=None)
    plain = sv.solve(sv.Puzzle(br.empty_grid(2)), cap=None, propagate=False)
    assert fast.count == plain.count == 288
    assert fast.solutions == plain.solutions


@pytest.mark.parametrize("variant", [sv.DG, sv.JG])
def test_variant_counts_match_filter(variant):
    flag = {sv.DG: "dg", sv.JG: "jg"}[variant]
    filtered = [g for g in sv.all_grids(2) if getattr(br.grid_flags(g), flag)]
    found = sv.solve(sv.Puzzle(br.empty_grid(2), variant), cap=None).solutions
    assert found == filtered


def test_jg_n2_count():
    assert sv.solve(sv.Puzzle(br.empty_grid(2), sv.JG), cap=None).count == 24


@pytest.mark.parametrize(
    "puzzle,answer",
    [(samples.JG_PUZZLE_EASY, samples.JG_ANSWER_EASY), (samples.JG_PUZZLE_MINIMAL, samples.JG_ANSWER_MINIMAL)],
)
def test_jg_puzzles(puzzle, answer):
    report = sv.solve(sv.Puzzle(puzzle, sv.JG), cap=2)
    assert report.status == "unique"
    assert report.solutions == [answer]
    assert sv.satisfies_variant(answer, sv.JG)


def test_jg_puzzle_needs_variant():
    # without the joint-groups rule the minimal puzzle is far from unique
    report = sv.solve(sv.Puzzle(samples.JG_PUZZLE_MINIMAL), cap=2)
    assert report.status == "multiple" and report.reached_cap


def test_minimal_puzzle_clues_all_needed():
    grid = samples.JG_PUZZLE_MINIMAL
    assert len(grid.clues()) == 8
    for cell, _ in grid.clues():
        assert sv.solve(sv.Puzzle(grid.with_cells({cell: 0}), sv.JG), cap=2).count >= 2


def test_plain_engine_agrees_on_minimal_puzzle():
    fast = sv.solve(sv.Puzzle(samples.JG_PUZZLE_MINIMAL, sv.JG), cap=2)
    plain = sv.solve(sv.Puzzle(samples.JG_PUZZLE_MINIMAL, sv.JG), cap=2, propagate=False)
    assert fast.solutions == plain.solutions


@given(st.sampled_from(sv.all_grids(2)), st.sets(st.sampled_from(N2_CELLS), max_size=16), st.sampled_from(sv.VARIANTS))
@settings(max_examples=150, deadline=None)
def test_engines_agree_n2(grid, keep, variant):
    puzzle = sv.Puzzle(grid.restricted_to(keep), variant)
    try:
        fast = sv.solve(puzzle, cap=None)
    except sv.InconsistentPuzzle:
        with pytest.raises(sv.InconsistentPuzzle):
            sv.solve(puzzle, cap=None, propagate=False)
        return
    plain = sv.solve(puzzle, cap=None, propagate=False)
    assert fast.solutions == plain.solutions
    for sol in fast.solutions:
        assert sv.satisfies_variant(sol, variant)
        assert all(sol[c] == v for c, v in puzzle.grid.clues())


@given(st.sets(st.sampled_from([(r, c) for r in range(9) for c in range(9)]), min_size=40, max_size=60))
@settings(max_examples=20, deadline=None)
def test_engines_agree_n3(keep):
    puzzle = sv.Puzzle(samples.JG_ANSWER_EASY.restricted_to(keep), sv.JG)
    fast = sv.solve(puzzle, cap=3)
    plain = sv.solve(puzzle, cap=3, propagate=False)
    assert fast.solutions == plain.solutions
    assert samples.JG_ANSWER_EASY in fast.solutions or fast.reached_cap


def test_cap_reporting():
    report = sv.solve(sv.Puzzle(br.empty_grid(2)), cap=5)
    assert report.count == 5 and report.reached_cap
    assert report.solution_count_status == "reached cap"
    assert report.status == "multiple"


def test_no_solution():
    # givens clash only after propagation
    grid = br.make_grid(2, [[1, 2, 0, 0], [0, 0, 1, 0], [0, 0, 0, 2], [0, 0, 0, 0]])
    report = sv.solve(sv.Puzzle(grid), cap=None)
    assert report.count == 0 and report.status == "none"
    assert sv.solve(sv.Puzzle(grid), cap=None, propagate=False).count == 0


@pytest.mark.parametrize(
    "rows,variant,kind",
    [
        ([[1, 1, 0, 0], [0] * 4, [0] * 4, [0] * 4], sv.STANDARD, "row"),
        ([[1, 0, 0, 0], [0] * 4, [1, 0, 0, 0], [0] * 4], sv.STANDARD, "column"),
        ([[1, 0, 0, 0], [0, 1, 0, 0], [0] * 4, [0] * 4], sv.STANDARD, "box"),
        ([[1, 0, 0, 0], [0] * 4, [0, 0, 1, 0], [0] * 4], sv.DG, "disjoint-groups"),
        ([[1, 0, 0, 0], [0] * 4, [0, 0, 0, 1], [0] * 4], sv.JG, "joint-groups"),
    ],
)
def test_inconsistent_names_constraint(rows, variant, kind):
    with pytest.raises(sv.InconsistentPuzzle, match=f"^{kind} constraint"):
        sv.solve(sv.Puzzle(br.make_grid(2, rows), variant))


def test_unknown_variant():
    with pytest.raises(ValueError):
        sv.Puzzle(br.empty_grid(2), "killer")


def test_bad_cap():
    with pytest.raises(ValueError):
        sv.solve(sv.Puzzle(br.empty_grid(2)), cap=0)


def test_clue_bounds_n2():
    bounds = sv.n2_clue_bounds()
    assert bounds.guarantee_threshold == 13
    assert len(bounds.witness_puzzle.grid.clues()) == 12
    assert bounds.witness_solutions == 2


def test_jg_min_clues_n2():
    assert sv.jg_min_clues_n2() == 3
