"""One test per acceptance criterion; the conftest prints a PASS/FAIL line for each."""
import random
import time
from collections import Counter
from itertools import permutations

import pytest

from smsudoku import analysis as an
from smsudoku import bridge as br
from smsudoku import matching as mt
from smsudoku import profiles as pr
from smsudoku import samples
from smsudoku import solver as sv

criterion = pytest.mark.criterion


def _timed(fn, *args, **kwargs):
    start = time.perf_counter()
    result = fn(*args, **kwargs)
    return result, time.perf_counter() - start


@pytest.fixture(scope="module")
def census():
    return an.n2_census()


@criterion(1, "n=2 grid census")
def test_criterion_01_census_totals():
    report, elapsed = _timed(an.n2_census)
    assert report.total_grids == 288
    assert report.classes_up_to_relabel == 12
    assert elapsed < 5


@criterion(2, "n=2 profile typing and per-type matchings")
def test_criterion_02_profile_types():
    counts = Counter(an.classify_n2(p) for p in pr.all_profiles(2))
    assert counts == {"A": 4, "B": 8, "C": 2, "D": 2}
    per_type = {}
    for p in pr.all_profiles(2):
        stable = mt.enumerate_stable_matchings(p)
        per_type.setdefault(an.classify_n2(p), set()).add((len(stable), min(m.total_cost for m in stable)))
    assert per_type == {"A": {(1, 6)}, "B": {(1, 5)}, "C": {(1, 4)}, "D": {(2, 6)}}


@criterion(3, "census multisets, slots, incidence, structural facts")
def test_criterion_03_census_multisets(census):
    assert census.type_multiset_histogram == {"AAAA": 1, "AABB": 4, "BBBB": 2, "BBCD": 4, "CCDD": 1}
    assert census.type_slot_counts == {"A": 12, "B": 24, "C": 6, "D": 6}
    assert len(census.profiles_per_grid_incidence) == 16
    assert set(census.profiles_per_grid_incidence.values()) == {3}
    assert an.n2_census_constraints_check(census)


@criterion(4, "the single n=2 JG class")
def test_criterion_04_jg_n2(census):
    jg = [c for c in census.classes if c.jg]
    assert len(jg) == 1
    grid = jg[0].grid
    assert br.is_box_cyclic(grid)
    assert br.placement_matrix(grid) == (((1, 3), (2, 4)), ((2, 4), (1, 3)))
    flags = [pr.family_flags(p) for p in br.grid_to_profiles(grid)]
    assert [(f.mirror, f.pseudo_latin) for f in flags] == [(True, False), (False, True), (True, False), (False, True)]


@criterion(5, "JG puzzles solve uniquely; minimal puzzle is minimal")
@pytest.mark.parametrize(
    "puzzle,answer",
    [(samples.JG_PUZZLE_EASY, samples.JG_ANSWER_EASY), (samples.JG_PUZZLE_MINIMAL, samples.JG_ANSWER_MINIMAL)],
    ids=["left", "right"],
)
def test_criterion_05_jg_puzzles(puzzle, answer):
    report, elapsed = _timed(sv.solve, sv.Puzzle(puzzle, sv.JG), cap=2)
    assert report.status == "unique"
    assert report.solutions == [answer]
    assert elapsed < 10


@criterion(5, "JG puzzles solve uniquely; minimal puzzle is minimal")
def test_criterion_05_minimal_clue_removal():
    grid = samples.JG_PUZZLE_MINIMAL
    assert len(grid.clues()) == 8
    for cell, _ in grid.clues():
        assert sv.solve(sv.Puzzle(grid.with_cells({cell: 0}), sv.JG), cap=2).count >= 2


@criterion(6, "placement matrices of the answers")
def test_criterion_06_placement_matrices():
    def digits(matrix):
        return tuple(tuple(int("".join(map(str, e))) for e in row) for row in matrix)

    easy = br.placement_matrix(samples.JG_ANSWER_EASY)
    assert digits(easy) == ((137, 459, 268), (268, 137, 459), (459, 268, 137))
    assert br.is_cyclic_matrix(easy)
    minimal = br.placement_matrix(samples.JG_ANSWER_MINIMAL)
    assert digits(minimal) == ((125, 389, 467), (367, 124, 589), (489, 567, 123))
    assert br.is_box_cyclic(samples.JG_ANSWER_MINIMAL)


@criterion(7, "n=3 joint-key classification")
def test_criterion_07_joint_keys_n3():
    table = an.classify_joint_keys_n3()
    assert [k.key for k in table] == list(samples.N3_KEY_ORDER)
    assert tuple(k.stable_matching_count for k in table) == (1, 1, 3, 2, 2, 2)
    for p in an.all_joint_profiles(3):
        for s in mt.enumerate_stable_matchings(p):
            assert len({(p.women_ranks[w][m], p.men_ranks[m][w]) for m, w in s.couples()}) == 1


@criterion(8, "pseudo-Latin maxima")
def test_criterion_08_pseudo_latin_small():
    assert [an.pseudo_latin_max_matchings(n) for n in range(1, 5)] == [1, 2, 3, 10]


@criterion(8, "pseudo-Latin maxima")
def test_criterion_08_pseudo_latin_n5():
    value, elapsed = _timed(an.pseudo_latin_max_matchings, 5)
    assert elapsed < 60
    assert value == 12, f"maximum over all 161280 pseudo-Latin profiles at n=5 is {value}, expected 12"


@criterion(9, "template count at n=2")
def test_criterion_09_templates():
    assert len(br.all_templates(2)) == 16


@criterion(10, "property suites")
def test_criterion_10_gs_random_profiles():
    rng = random.Random(2024)
    for _ in range(1000):
        n = rng.randint(1, 6)
        rows = lambda: [rng.sample(range(1, n + 1), n) for _ in range(n)]  # noqa: E731
        p = pr.make_profile(rows(), rows())
        stable = mt.enumerate_stable_matchings(p)
        for side in (mt.MEN, mt.WOMEN):
            trace = mt.gale_shapley(p, side)
            assert trace.num_rounds <= mt.max_gs_rounds(n)
            assert not mt.blocking_pairs(p, trace.matching)
        men = mt.gale_shapley(p, mt.MEN).matching
        for s in stable:
            assert mt.dominates_for_men(p, men, s)
            assert mt.dominates_for_women(p, s, men)


@criterion(10, "property suites")
def test_criterion_10_mutually_latin_one_round():
    # all ordered pairs of Latin squares up to n=4; women proposing on (a, b) is men proposing on (b, a)
    for n in range(1, 5):
        squares = [sq.tolist() for sq in an.latin_squares(n)]
        for a in squares:
            for b in squares:
                assert mt.gale_shapley(pr.make_profile(a, b)).num_rounds == 1


@criterion(10, "property suites")
def test_criterion_10_no_hell_couples():
    for n in range(1, 5):
        for key in permutations(range(1, n + 1)):
            p = pr.profile_from_key(key)
            for s in mt.enumerate_stable_matchings(p):
                assert n == 1 or all(p.cost(m, w) < 2 * n for m, w in s.couples())


@criterion(10, "property suites")
def test_criterion_10_graeco_latin():
    for n in (1, 2, 3):
        for p in pr.all_profiles(n):
            assert an.graeco_latin_check(p) == (pr.is_disjoint(p) and pr.is_mutually_latin(p))
    for sq in an.latin_squares(4):
        for other in an.latin_squares(4)[::7]:
            p = pr.make_profile(other.T.tolist(), sq.tolist())
            assert an.graeco_latin_check(p) == (pr.is_disjoint(p) and pr.is_mutually_latin(p))


@criterion(10, "property suites")
def test_criterion_10_geometric_blocking():
    # every profile up to n=3 and a seeded sample at n=4, each with every pairing
    rng = random.Random(4)
    pool = [p for n in (1, 2, 3) for p in pr.all_profiles(n)]
    pool += [pr.make_profile([rng.sample(range(1, 5), 4) for _ in range(4)], [rng.sample(range(1, 5), 4) for _ in range(4)]) for _ in range(300)]
    for p in pool:
        tmpl = br.profile_to_template(p)
        for pairing in permutations(range(p.n)):
            rank = sorted((b.man, b.woman) for b in mt.blocking_pairs(p, mt.make_matching(p, pairing)))
            assert sorted(br.blocking_pairs_geometric(tmpl, pairing)) == rank


@criterion(11, "n=2 clue bounds")
def test_criterion_11_clue_bounds():
    bounds, elapsed = _timed(sv.n2_clue_bounds)
    assert bounds.guarantee_threshold == 13
    assert len(bounds.witness_puzzle.grid.clues()) == 12
    assert bounds.witness_solutions == 2
    assert elapsed < 120
