"""Claim-by-claim verification report.

Each claim recomputes a published value from scratch and compares it to the
expected one.  Report lines look like

    CLAIM <id> <description>: PASS|FAIL (got <value>, expected <value>)
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Any, Callable, List, Tuple

from . import analysis, bridge, matching, profiles, samples, solver


@dataclass(frozen=True)
class ClaimResult:
    claim_id: str
    description: str
    got: Any
    expected: Any

    @property
    def passed(self) -> bool:
        return self.got == self.expected

    def line(self) -> str:
        verdict = "PASS" if self.passed else "FAIL"
        return f"CLAIM {self.claim_id} {self.description}: {verdict} (got {self.got}, expected {self.expected})"


Claim = Tuple[str, str, Callable[[], Tuple[Any, Any]]]


def random_profile(rng: random.Random, n: int) -> profiles.PreferenceProfile:
    def rows():
        out = []
        for _ in range(n):
            row = list(range(1, n + 1))
            rng.shuffle(row)
            out.append(row)
        return out

    return profiles.make_profile(rows(), rows())


def random_latin_square(rng: random.Random, n: int) -> List[List[int]]:
    """Cyclic square with shuffled rows, columns and symbols."""
    rows, cols, syms = list(range(n)), list(range(n)), list(range(1, n + 1))
    rng.shuffle(rows)
    rng.shuffle(cols)
    rng.shuffle(syms)
    return [[syms[(rows[i] + cols[j]) % n] for j in range(n)] for i in range(n)]


# ---------------------------------------------------------------------------
# claims

_census_cache: dict = {}


def _census() -> analysis.CensusReport:
    if "report" not in _census_cache:
        _census_cache["report"] = analysis.n2_census()
    return _census_cache["report"]


def _grid_count():
    return _census().total_grids, 288


def _class_count():
    return _census().classes_up_to_relabel, 12


def _type_counts():
    return _census().per_type_profile_counts, {"A": 4, "B": 8, "C": 2, "D": 2}


def _type_table():
    summary = analysis.n2_type_summary()
    return {t: v[1:] for t, v in summary.items()}, {"A": (1, 6), "B": (1, 5), "C": (1, 4), "D": (2, 6)}


def _multisets():
    return _census().type_multiset_histogram, {"AAAA": 1, "AABB": 4, "BBBB": 2, "BBCD": 4, "CCDD": 1}


def _slots():
    return _census().type_slot_counts, {"A": 12, "B": 24, "C": 6, "D": 6}


def _incidence():
    return sorted(set(_census().profiles_per_grid_incidence.values())), [3]


def _facts():
    return analysis.n2_census_constraints_check(_census()), True


def _class_sequence():
    return tuple(c.types for c in _census().classes), samples.N2_CLASS_TYPES


def _dg_jg_split():
    got = sorted({(c.multiset, c.dg, c.jg) for c in _census().classes})
    expected = [
        ("AAAA", True, False), ("AABB", True, False), ("BBBB", True, False),
        ("BBCD", False, False), ("CCDD", False, True),
    ]
    return got, expected


def _jg_n2():
    s = analysis.jg_n2_summary(_census())
    got = (s["jg_classes"], s.get("box_cyclic"), s.get("placement"), s.get("types"))
    return got, (1, True, (((1, 3), (2, 4)), ((2, 4), (1, 3))), "CDCD")


def _puzzle(puzzle_grid, answer):
    def claim():
        report = solver.solve(solver.Puzzle(puzzle_grid, solver.JG), cap=2)
        got = (report.status, report.solutions[0] == answer if report.solutions else False)
        return got, ("unique", True)

    return claim


def _minimal_clues():
    grid = samples.JG_PUZZLE_MINIMAL
    clues = grid.clues()
    weakest = min(
        solver.solve(solver.Puzzle(grid.with_cells({cell: 0}), solver.JG), cap=2).count for cell, _ in clues
    )
    return (len(clues), weakest >= 2), (8, True)


def _matrix_digits(matrix) -> tuple:
    return tuple(tuple(int("".join(map(str, e))) for e in row) for row in matrix)


def _answer_placements():
    easy = bridge.placement_matrix(samples.JG_ANSWER_EASY)
    minimal = bridge.placement_matrix(samples.JG_ANSWER_MINIMAL)
    got = (
        _matrix_digits(easy),
        _matrix_digits(minimal),
        bridge.is_cyclic_matrix(easy),
        bridge.is_box_cyclic(samples.JG_ANSWER_MINIMAL),
    )
    return got, (samples.JG_ANSWER_EASY_PLACEMENT, samples.JG_ANSWER_MINIMAL_PLACEMENT, True, True)


def _not_box_cyclic():
    g = samples.JG_NOT_BOX_CYCLIC
    got = (bridge.grid_flags(g).jg, bridge.is_box_cyclic(g), _matrix_digits(bridge.placement_matrix(g)))
    return got, (True, False, samples.JG_NOT_BOX_CYCLIC_PLACEMENT)


def _n3_keys():
    return tuple(k.stable_matching_count for k in analysis.classify_joint_keys_n3()), samples.N3_KEY_COUNTS


def _n3_uniform():
    uniform, by_key = analysis.joint_n3_all_uniform()
    return (uniform, all(len(v) == 1 for v in by_key.values())), (True, True)


def _pseudo_latin(ns):
    def claim():
        return (
            {n: analysis.pseudo_latin_max_matchings(n) for n in ns},
            {n: samples.PSEUDO_LATIN_MAXIMA[n] for n in ns},
        )

    return claim


def _templates():
    return len(bridge.all_templates(2)), 16


def _clue_bounds():
    b = solver.n2_clue_bounds()
    return (b.guarantee_threshold, len(b.witness_puzzle.grid.clues()), b.witness_solutions), (13, 12, 2)


def _jg_min():
    k = solver.jg_min_clues_n2()
    return (k >= 3, k), (True, 3)


def _gs_example():
    trace = matching.gale_shapley(samples.GS_EXAMPLE)
    tmpl = bridge.profile_to_template(samples.GS_EXAMPLE)
    cells = sorted(
        c for c in tmpl.positions
        if (bridge.box_coordinates(c, 4).stack, bridge.box_coordinates(c, 4).band) in trace.matching.couples()
    )
    return (trace.num_rounds, tuple(cells)), (4, samples.GS_EXAMPLE_FINAL_CELLS)


def _small_example():
    p = samples.SMALL_EXAMPLE
    got = (
        profiles.ranking_matrix(p),
        profiles.tally_matrix(p),
        [m.pairing for m in matching.enumerate_stable_matchings(p)],
    )
    return got, ((((2, 1), (1, 2)), ((2, 2), (1, 1))), ((1, 1), (1, 1)), [(0, 1)])


def _disjoint_latin():
    p = samples.DISJOINT_LATIN
    f = profiles.family_flags(p)
    got = (len(matching.enumerate_stable_matchings(p)), f.disjoint, f.mutually_latin, f.joint, analysis.graeco_latin_check(p))
    return got, (2, True, True, False, True)


def _dg_grids():
    lex = [len(matching.enumerate_stable_matchings(p)) for p in bridge.grid_to_profiles(samples.LEX_EARLIEST)]
    two = [len(matching.enumerate_stable_matchings(p)) for p in bridge.grid_to_profiles(samples.DG_TWO_MATCHINGS)]
    got = (bridge.grid_flags(samples.LEX_EARLIEST).dg, lex, [d for d, c in enumerate(two, 1) if c == 2])
    return got, (True, [1] * 9, [1, 3])


def _joint_4x4():
    p = samples.JOINT_4X4
    mt = matching.make_matching(p, samples.JOINT_4X4_STABLE_PAIRING)
    return (matching.blocking_pairs(p, mt), analysis.matching_rankings(p, mt.pairing)), ([], {(1, 2), (2, 1)})


def _pseudo_latin_n3():
    p = profiles.profile_from_key((3, 2, 1))
    got = (len(matching.enumerate_stable_matchings(p)), matching.egalitarian_matching(p).total_cost)
    return got, (3, 12)


def _gs_properties(count):
    def claim():
        rng = random.Random(20240101)
        bad = 0
        for _ in range(count):
            p = random_profile(rng, rng.randint(1, 6))
            men = matching.gale_shapley(p, matching.MEN)
            women = matching.gale_shapley(p, matching.WOMEN)
            stable = matching.enumerate_stable_matchings(p)
            ok = (
                men.num_rounds <= matching.max_gs_rounds(p.n)
                and women.num_rounds <= matching.max_gs_rounds(p.n)
                and not matching.blocking_pairs(p, men.matching)
                and all(matching.dominates_for_men(p, men.matching, s) for s in stable)
                and all(matching.dominates_for_women(p, s, men.matching) for s in stable)
                and all(matching.dominates_for_women(p, women.matching, s) for s in stable)
            )
            bad += not ok
        return bad, 0

    return claim


def _one_round():
    rng = random.Random(7)
    rounds = set()
    for _ in range(300):
        n = rng.randint(1, 7)
        p = profiles.make_profile(random_latin_square(rng, n), random_latin_square(rng, n))
        rounds.add(matching.gale_shapley(p).num_rounds)
        rounds.add(matching.gale_shapley(p, matching.WOMEN).num_rounds)
    return sorted(rounds), [1]


def _no_hell_couples():
    bad = 0
    for n in range(1, 5):
        from itertools import permutations

        for key in permutations(range(1, n + 1)):
            p = profiles.profile_from_key(key)
            for mt in matching.enumerate_stable_matchings(p):
                bad += any(p.cost(m, w) == 2 * n and n > 1 for m, w in mt.couples())
    return bad, 0


def _graeco_latin(max_n):
    def claim():
        bad = 0
        for n in range(1, max_n + 1):
            for p in profiles.all_profiles(n):
                bad += analysis.graeco_latin_check(p) != analysis.disjoint_and_latin(p)
        return bad, 0

    return claim


def _geometric_blocking(max_n, samples_per_n):
    """Exhaustive over profiles up to max_n, then random profiles up to n=4; every pairing checked."""

    def claim():
        from itertools import permutations

        rng = random.Random(11)
        pool = [p for n in range(1, max_n + 1) for p in profiles.all_profiles(n)]
        pool += [random_profile(rng, n) for n in range(max_n + 1, 5) for _ in range(samples_per_n)]
        bad = 0
        for p in pool:
            tmpl = bridge.profile_to_template(p)
            for pairing in permutations(range(p.n)):
                rank = sorted((b.man, b.woman) for b in matching.blocking_pairs(p, matching.make_matching(p, pairing)))
                bad += rank != sorted(bridge.blocking_pairs_geometric(tmpl, pairing))
        return bad, 0

    return claim


def _symmetry():
    swap = {"A": "A", "B": "B", "C": "D", "D": "C"}
    got = []
    for p in profiles.all_profiles(2):
        t = analysis.classify_n2(p)
        got.append(
            analysis.classify_n2(p.swap_genders()) == t
            and analysis.classify_n2(profiles.reflect_vertical(p)) == swap[t]
            and analysis.classify_n2(profiles.reflect_horizontal(p)) == swap[t]
        )
    return sum(got), 16


def claims(full: bool = False) -> List[Claim]:
    out: List[Claim] = [
        ("n2-grids", "complete n=2 grids", _grid_count),
        ("n2-classes", "n=2 grids up to digit relabeling", _class_count),
        ("n2-types", "n=2 profiles per type", _type_counts),
        ("n2-table", "per-type (stable matchings, egalitarian cost)", _type_table),
        ("n2-multisets", "census type multisets", _multisets),
        ("n2-slots", "census profile slots per type", _slots),
        ("n2-incidence", "classes containing each profile", _incidence),
        ("n2-facts", "equal C/D, A excludes C/D, even A", _facts),
        ("n2-sequence", "per-digit types of the 12 classes in lexicographic order", _class_sequence),
        ("n2-dg-jg", "DG/JG split of the census", _dg_jg_split),
        ("n2-jg", "unique n=2 JG class: box-cyclic, placement, types", _jg_n2),
        ("jg-puzzle-easy", "first JG puzzle solves uniquely to its answer", _puzzle(samples.JG_PUZZLE_EASY, samples.JG_ANSWER_EASY)),
        ("jg-puzzle-min", "second JG puzzle solves uniquely to its answer", _puzzle(samples.JG_PUZZLE_MINIMAL, samples.JG_ANSWER_MINIMAL)),
        ("jg-puzzle-clues", "second puzzle has 8 clues, each removal gives >=2 solutions", _minimal_clues),
        ("jg-placements", "answer placement matrices, cyclic / box-cyclic", _answer_placements),
        ("jg-not-box-cyclic", "JG grid that is not box-cyclic and its placement matrix", _not_box_cyclic),
        ("n3-keys", "stable matchings per n=3 key", _n3_keys),
        ("n3-uniform", "all n=3 joint stable matchings uniform", _n3_uniform),
        ("pseudo-latin", "max stable matchings over pseudo-Latin profiles n=1..4", _pseudo_latin(range(1, 5))),
        ("templates", "single-digit templates at n=2", _templates),
        ("n2-clue-bounds", "n=2 uniqueness threshold, witness clues and solutions", _clue_bounds),
        ("jg-min-clues-n2", "fewest clues of a unique n=2 JG puzzle", _jg_min),
        ("gs-example", "4x4 deferred acceptance rounds and final cells", _gs_example),
        ("small-example", "2x2 ranking matrix, tally, stable matchings", _small_example),
        ("disjoint-latin", "disjoint mutually Latin n=3 profile", _disjoint_latin),
        ("dg-grids", "DG grids: matchings per digit", _dg_grids),
        ("joint-4x4", "4x4 joint profile: bold matching stable with rankings (1,2),(2,1)", _joint_4x4),
        ("pseudo-latin-n3", "n=3 pseudo-Latin: stable matchings, egalitarian cost", _pseudo_latin_n3),
        ("gs-properties", "GS bound, stability, man-optimality on random profiles", _gs_properties(1000 if full else 200)),
        ("gs-one-round", "GS rounds on mutually Latin profiles", _one_round),
        ("no-hell-couples", "hell-couples in stable matchings of canonical joint profiles n<=4", _no_hell_couples),
        ("graeco-latin", "disjoint and mutually Latin iff Graeco-Latin, all profiles n<=%d" % (3 if full else 2), _graeco_latin(3 if full else 2)),
        ("geometric-blocking", "geometric blocking pairs equal rank blocking pairs, n<=4", _geometric_blocking(3 if full else 2, 300 if full else 50)),
        ("n2-symmetry", "n=2 profiles whose type follows the gender swap and both reflections", _symmetry),
    ]
    if full:
        out.append(("pseudo-latin-n5", "max stable matchings over pseudo-Latin profiles n=5", _pseudo_latin([5])))
    return out


def run_claims(full: bool = False) -> List[ClaimResult]:
    results = []
    for claim_id, description, fn in claims(full):
        got, expected = fn()
        results.append(ClaimResult(claim_id, description, got, expected))
    return results
