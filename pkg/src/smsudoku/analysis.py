"""Exhaustive censuses: the n=2 universe, n=3 joint keys, pseudo-Latin maxima."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import permutations
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from .bridge import SudokuGrid, grid_flags, grid_to_profiles, is_box_cyclic, placement_matrix, relabel_canonical
from .matching import enumerate_stable_matchings
from .profiles import (
    PreferenceProfile,
    ProfileError,
    all_profiles,
    is_disjoint,
    is_mutually_latin,
    joint_profile,
    make_profile,
    profile_from_key,
)
from .samples import N3_KEY_ORDER
from .solver import all_grids

TYPE_LABELS = ("A", "B", "C", "D")


def classify_n2(profile: PreferenceProfile) -> str:
    """Type A-D of a size-2 profile from its pair costs and soulmate/hell-pair layout."""
    if profile.n != 2:
        raise ProfileError(f"n=2 classification needs n=2, got n={profile.n}")
    costs = sorted(profile.cost(m, w) for m in range(2) for w in range(2))
    if costs == [2, 2, 4, 4]:
        return "C"
    if costs == [3, 3, 3, 3]:
        return "D"
    if costs == [2, 3, 3, 4]:
        soul = next((m, w) for m in range(2) for w in range(2) if profile.cost(m, w) == 2)
        hell = next((m, w) for m in range(2) for w in range(2) if profile.cost(m, w) == 4)
        return "A" if soul[0] != hell[0] and soul[1] != hell[1] else "B"
    raise ProfileError(f"unexpected cost multiset {costs}")  # pragma: no cover


@dataclass(frozen=True)
class CensusClass:
    grid: SudokuGrid
    types: str  # type of each digit's profile, in digit order
    dg: bool
    jg: bool

    @property
    def multiset(self) -> str:
        return "".join(sorted(self.types))


@dataclass(frozen=True)
class CensusReport:
    total_grids: int
    classes_up_to_relabel: int
    classes: Tuple[CensusClass, ...]
    type_multiset_histogram: Dict[str, int]
    per_type_profile_counts: Dict[str, int]  # distinct profiles of each type
    type_slot_counts: Dict[str, int]  # profile slots across the classes
    profiles_per_grid_incidence: Dict[PreferenceProfile, int]


def n2_census() -> CensusReport:
    grids = all_grids(2)
    canon = sorted({relabel_canonical(g).cells for g in grids})
    classes = []
    for cells in canon:
        grid = SudokuGrid(2, cells)
        flags = grid_flags(grid)
        types = "".join(classify_n2(p) for p in grid_to_profiles(grid))
        classes.append(CensusClass(grid, types, flags.dg, flags.jg))
    histogram = Counter(c.multiset for c in classes)
    slots = Counter(t for c in classes for t in c.types)
    per_type = Counter(classify_n2(p) for p in all_profiles(2))
    incidence: Counter = Counter()
    for c in classes:
        for p in set(grid_to_profiles(c.grid)):
            incidence[p] += 1
    for p in all_profiles(2):
        incidence.setdefault(p, 0)
    return CensusReport(
        total_grids=len(grids),
        classes_up_to_relabel=len(classes),
        classes=tuple(classes),
        type_multiset_histogram=dict(sorted(histogram.items())),
        per_type_profile_counts={t: per_type[t] for t in TYPE_LABELS},
        type_slot_counts={t: slots[t] for t in TYPE_LABELS},
        profiles_per_grid_incidence=dict(incidence),
    )


@dataclass(frozen=True)
class CensusFacts:
    equal_c_and_d: bool
    a_excludes_c_and_d: bool
    even_a_count: bool

    def __bool__(self) -> bool:
        return self.equal_c_and_d and self.a_excludes_c_and_d and self.even_a_count


def census_facts(types: str) -> CensusFacts:
    counts = Counter(types)
    return CensusFacts(
        equal_c_and_d=counts["C"] == counts["D"],
        a_excludes_c_and_d=not counts["A"] or counts["C"] + counts["D"] == 0,
        even_a_count=counts["A"] % 2 == 0,
    )


def n2_census_constraints_check(report: Optional[CensusReport] = None) -> bool:
    """The three structural facts hold for every census class."""
    report = report or n2_census()
    return all(bool(census_facts(c.types)) for c in report.classes)


def n2_type_summary() -> Dict[str, Tuple[int, int, int]]:
    """Per type: (profiles, stable matchings, total egalitarian cost), checked on every profile.

    Raises if two profiles of one type disagree on either number.
    """
    seen: Dict[str, Tuple[int, int]] = {}
    counts: Counter = Counter()
    for p in all_profiles(2):
        t = classify_n2(p)
        stable = enumerate_stable_matchings(p)
        costs = {m.total_cost for m in stable}
        if len(costs) != 1:
            raise AssertionError(f"type {t} profile with differing matching costs {costs}")
        value = (len(stable), costs.pop())
        if seen.setdefault(t, value) != value:
            raise AssertionError(f"type {t} is not homogeneous: {seen[t]} vs {value}")
        counts[t] += 1
    return {t: (counts[t],) + seen[t] for t in TYPE_LABELS}


# ---------------------------------------------------------------------------
# joint profiles at n = 3

@dataclass(frozen=True)
class KeyClass:
    key: Tuple[int, ...]
    stable_matching_count: int
    stable_rankings: Tuple[Tuple[int, int], ...]  # mutual ranking (woman's, man's) of each uniform matching
    all_uniform: bool


def matching_rankings(profile: PreferenceProfile, pairing: Sequence[int]) -> set:
    return {(profile.women_ranks[w][m], profile.men_ranks[m][w]) for m, w in enumerate(pairing)}


def classify_joint_keys_n3(keys: Sequence[Sequence[int]] = N3_KEY_ORDER) -> List[KeyClass]:
    table = []
    for key in keys:
        profile = profile_from_key(key)
        stable = enumerate_stable_matchings(profile)
        rankings = [matching_rankings(profile, mt.pairing) for mt in stable]
        uniform = all(len(r) == 1 for r in rankings)
        table.append(
            KeyClass(
                key=tuple(key),
                stable_matching_count=len(stable),
                stable_rankings=tuple(sorted(next(iter(r)) for r in rankings if len(r) == 1)),
                all_uniform=uniform,
            )
        )
    return table


def all_joint_profiles(n: int) -> List[PreferenceProfile]:
    """Every joint profile of size n: any Latin square of women's ranks with any key."""
    squares = latin_squares(n)
    keys = list(permutations(range(1, n + 1)))
    return [joint_profile(sq.tolist(), key) for sq in squares for key in keys]


def joint_n3_all_uniform() -> Tuple[bool, Dict[Tuple[int, ...], set]]:
    """Check all 72 joint n=3 profiles: every stable matching uniform, counts a function of the key."""
    by_key: Dict[Tuple[int, ...], set] = {}
    uniform = True
    for sq in latin_squares(3):
        for key in permutations((1, 2, 3)):
            p = joint_profile(sq.tolist(), key)
            stable = enumerate_stable_matchings(p)
            uniform &= all(len(matching_rankings(p, mt.pairing)) == 1 for mt in stable)
            by_key.setdefault(key, set()).add(len(stable))
    return uniform, by_key


# ---------------------------------------------------------------------------
# Latin squares and pseudo-Latin profiles

def latin_squares(n: int) -> np.ndarray:
    """All Latin squares of order n over 1..n, shape (count, n, n), built row by row."""
    perms = np.array(list(permutations(range(n))), dtype=np.int64)
    # bit (col * n + value) marks a value used in a column
    codes = np.zeros(len(perms), dtype=np.int64)
    for col in range(n):
        codes |= np.left_shift(1, col * n + perms[:, col])
    rows = np.arange(len(perms))[:, None]
    used = codes.copy()
    for _ in range(1, n):
        ok = (used[:, None] & codes[None, :]) == 0
        parent, child = np.nonzero(ok)
        rows = np.concatenate([rows[parent], child[:, None]], axis=1)
        used = used[parent] | codes[child]
    return (perms[rows] + 1).astype(np.int8)


def pseudo_latin_profile(women_latin) -> PreferenceProfile:
    """Women rank by the Latin square; each man answers rank i with n+1-i."""
    n = len(women_latin)
    women = [[int(v) for v in row] for row in women_latin]
    men = [[n + 1 - women[w][m] for w in range(n)] for m in range(n)]
    return make_profile(men, women)


def count_stable_batch(men: np.ndarray, women: np.ndarray) -> np.ndarray:
    """Stable matching counts for a batch of profiles given as (B, n, n) rank arrays.

    Checks every pairing at once: a pairing is unstable when some (m, w) has
    both partners ranking each other above their assigned spouses.
    """
    batch, n, _ = men.shape
    perms = np.array(list(permutations(range(n))), dtype=np.intp)
    inv = np.argsort(perms, axis=1)
    idx = np.arange(n)[None, :]
    men_own = men[:, idx, perms]  # (B, k, n): man m's rank of his wife
    women_own = women[:, idx, inv]  # (B, k, n): woman w's rank of her husband
    women_t = np.swapaxes(women, 1, 2)  # [b, m, w] = woman w's rank of man m
    blocks = (men[:, None, :, :] < men_own[:, :, :, None]) & (women_t[:, None, :, :] < women_own[:, :, None, :])
    unstable = blocks.reshape(batch, len(perms), -1).any(axis=2)
    return (~unstable).sum(axis=1)


MAX_PSEUDO_LATIN_N = 5


def pseudo_latin_stable_counts(n: int, batch: int = 2048) -> np.ndarray:
    """Stable matching count for every pseudo-Latin profile of size n."""
    if n > MAX_PSEUDO_LATIN_N:
        raise ValueError(f"n={n} too large for the exhaustive pseudo-Latin scan (max {MAX_PSEUDO_LATIN_N})")
    squares = latin_squares(n)
    out = np.empty(len(squares), dtype=np.int64)
    for start in range(0, len(squares), batch):
        women = squares[start : start + batch]
        men = (n + 1 - np.swapaxes(women, 1, 2)).astype(np.int8)
        out[start : start + batch] = count_stable_batch(men, women)
    return out


def pseudo_latin_max_matchings(n: int) -> int:
    return int(pseudo_latin_stable_counts(n).max())


def graeco_latin_check(profile: PreferenceProfile) -> bool:
    """Superimpose women's ranks with the transposed men's ranks; Graeco-Latin iff
    both layers are Latin and every ordered pair of symbols occurs once."""
    n = profile.n
    layer_a = np.array(profile.women_ranks)
    layer_b = np.array(profile.men_ranks).T
    symbols = set(range(1, n + 1))
    for layer in (layer_a, layer_b):
        if any(set(row) != symbols for row in layer.tolist()) or any(set(col) != symbols for col in layer.T.tolist()):
            return False
    pairs = set(zip(layer_a.ravel().tolist(), layer_b.ravel().tolist()))
    return len(pairs) == n * n


def jg_n2_summary(report: Optional[CensusReport] = None) -> dict:
    report = report or n2_census()
    jg = [c for c in report.classes if c.jg]
    out = {"jg_classes": len(jg)}
    if len(jg) == 1:
        grid = jg[0].grid
        out.update(
            box_cyclic=is_box_cyclic(grid),
            placement=placement_matrix(grid),
            types=jg[0].types,
            grid=grid,
        )
    return out


def disjoint_and_latin(profile: PreferenceProfile) -> bool:
    return is_disjoint(profile) and is_mutually_latin(profile)
