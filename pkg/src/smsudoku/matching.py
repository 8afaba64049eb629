"""Stable matchings: Gale-Shapley traces, blocking pairs, brute-force enumeration."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import List, Optional, Sequence, Tuple

from .profiles import PreferenceProfile, ProfileError, extract_key

MAX_ENUMERATION_N = 8

MEN = "men"
WOMEN = "women"

# per-proposer states recorded at the end of a round
IDLE = "idle"  # held an engagement from an earlier round and did not act
PROPOSING = "proposing"  # proposed this round and the proposal is being held
ENGAGED = "engaged"  # engaged before this round and kept the engagement despite new suitors
REJECTED = "rejected"  # refused this round, either on proposal or by being dumped


class EnumerationTooLarge(ValueError):
    pass


@dataclass(frozen=True)
class Matching:
    """``pairing[m]`` is the woman married to man ``m``."""

    pairing: Tuple[int, ...]
    per_couple_costs: Tuple[int, ...]

    @property
    def total_cost(self) -> int:
        return sum(self.per_couple_costs)

    def wife(self, man: int) -> int:
        return self.pairing[man]

    def husband(self, woman: int) -> int:
        return self.pairing.index(woman)

    def couples(self) -> List[Tuple[int, int]]:
        return list(enumerate(self.pairing))


def make_matching(profile: PreferenceProfile, pairing: Sequence[int]) -> Matching:
    pairing = tuple(pairing)
    if sorted(pairing) != list(range(profile.n)):
        raise ValueError(f"pairing {pairing} is not a bijection on {profile.n} people")
    return Matching(pairing, tuple(profile.cost(m, w) for m, w in enumerate(pairing)))


@dataclass(frozen=True)
class GsRound:
    proposals: Tuple[Tuple[int, int], ...]  # (proposer, target)
    engaged: Tuple[Tuple[int, int], ...]  # (proposer, reviewer) held at the end of the round
    rejected: Tuple[int, ...]
    states: Tuple[Tuple[str, Optional[int]], ...]  # per proposer: (state, current target)


@dataclass(frozen=True)
class GsTrace:
    proposing_side: str
    rounds: Tuple[GsRound, ...]
    matching: Matching

    @property
    def num_rounds(self) -> int:
        return len(self.rounds)

    def render(self) -> str:
        """One line per round; people are printed 1-based, proposer first."""
        lines = []
        for k, rnd in enumerate(self.rounds, 1):
            props = " ".join(f"{p + 1}->{r + 1}" for p, r in rnd.proposals)
            eng = " ".join(f"({p + 1},{r + 1})" for p, r in rnd.engaged)
            rej = " ".join(str(p + 1) for p in rnd.rejected) or "-"
            lines.append(f"round {k}: proposals {props}; engaged {eng}; rejected {rej}")
        return "\n".join(lines)


def gale_shapley(profile: PreferenceProfile, proposing_side: str = MEN, order: Optional[Sequence[int]] = None) -> GsTrace:
    """Deferred acceptance with simultaneous rounds.

    In each round every unengaged proposer proposes to the best reviewer he has
    not yet tried; then every reviewer with new proposals keeps the best suitor
    among those and her current fiance.  ``order`` only changes the order in
    which proposers are visited, never the result.
    """
    if proposing_side == MEN:
        prop_ranks, rev_ranks = profile.men_ranks, profile.women_ranks
    elif proposing_side == WOMEN:
        prop_ranks, rev_ranks = profile.women_ranks, profile.men_ranks
    else:
        raise ValueError(f"proposing side must be {MEN!r} or {WOMEN!r}")
    n = profile.n
    order = list(range(n)) if order is None else list(order)
    prefs = [sorted(range(n), key=row.__getitem__) for row in prop_ranks]
    next_choice = [0] * n
    fiance: List[Optional[int]] = [None] * n  # reviewer -> proposer
    engaged_to: List[Optional[int]] = [None] * n  # proposer -> reviewer
    rounds = []
    while any(engaged_to[p] is None for p in range(n)):
        proposals = []
        suitors: List[List[int]] = [[] for _ in range(n)]
        for p in order:
            if engaged_to[p] is None:
                r = prefs[p][next_choice[p]]
                next_choice[p] += 1
                proposals.append((p, r))
                suitors[r].append(p)
        rejected = []
        for r in range(n):
            if not suitors[r]:
                continue
            pool = suitors[r] + ([fiance[r]] if fiance[r] is not None else [])
            best = min(pool, key=rev_ranks[r].__getitem__)
            for p in pool:
                if p != best:
                    rejected.append(p)
                    engaged_to[p] = None
            fiance[r] = best
            engaged_to[best] = r
        proposed = {p for p, _ in proposals}
        states = []
        for p in range(n):
            if p in rejected:
                states.append((REJECTED, None))
            elif p in proposed:
                states.append((PROPOSING, engaged_to[p]))
            elif suitors[engaged_to[p]]:
                states.append((ENGAGED, engaged_to[p]))
            else:
                states.append((IDLE, engaged_to[p]))
        rounds.append(
            GsRound(
                proposals=tuple(sorted(proposals)),
                engaged=tuple((p, engaged_to[p]) for p in range(n) if engaged_to[p] is not None),
                rejected=tuple(sorted(rejected)),
                states=tuple(states),
            )
        )
    if proposing_side == MEN:
        pairing = engaged_to
    else:
        pairing = [0] * n
        for w, m in enumerate(engaged_to):
            pairing[m] = w
    return GsTrace(proposing_side, tuple(rounds), make_matching(profile, pairing))


def max_gs_rounds(n: int) -> int:
    return n * n - n + 1


@dataclass(frozen=True)
class BlockingPair:
    man: int
    woman: int


def blocking_pairs(profile: PreferenceProfile, matching: Matching) -> List[BlockingPair]:
    """Pairs who strictly prefer each other to their assigned partners."""
    n = profile.n
    husband = [0] * n
    for m, w in enumerate(matching.pairing):
        husband[w] = m
    found = []
    for m in range(n):
        own = profile.men_ranks[m][matching.pairing[m]]
        for w in range(n):
            if profile.men_ranks[m][w] < own and profile.women_ranks[w][m] < profile.women_ranks[w][husband[w]]:
                found.append(BlockingPair(m, w))
    return found


def is_stable(profile: PreferenceProfile, pairing: Sequence[int]) -> bool:
    n = profile.n
    men, women = profile.men_ranks, profile.women_ranks
    husband = [0] * n
    for m, w in enumerate(pairing):
        husband[w] = m
    for m in range(n):
        own = men[m][pairing[m]]
        for w in range(n):
            if men[m][w] < own and women[w][m] < women[w][husband[w]]:
                return False
    return True


def _guard(n: int) -> None:
    if n > MAX_ENUMERATION_N:
        raise EnumerationTooLarge(f"n={n} exceeds the exhaustive enumeration limit of {MAX_ENUMERATION_N}")


def enumerate_stable_matchings(profile: PreferenceProfile) -> List[Matching]:
    """All stable matchings by checking every one of the n! pairings, in lexicographic order."""
    _guard(profile.n)
    return [
        make_matching(profile, pairing)
        for pairing in permutations(range(profile.n))
        if is_stable(profile, pairing)
    ]


def egalitarian_matching(profile: PreferenceProfile) -> Matching:
    """Stable matching of least total cost; ties go to the lexicographically smallest pairing."""
    return min(enumerate_stable_matchings(profile), key=lambda mt: mt.total_cost)


def valid_partners(profile: PreferenceProfile) -> List[List[bool]]:
    n = profile.n
    table = [[False] * n for _ in range(n)]
    for mt in enumerate_stable_matchings(profile):
        for m, w in enumerate(mt.pairing):
            table[m][w] = True
    return table


def uniform_matching(profile: PreferenceProfile, ranking: Tuple[int, int]) -> Optional[Matching]:
    """Marry every couple whose mutual ranking (woman's rank, man's rank) equals ``ranking``.

    Only joint profiles admit these; returns None when the ranking does not
    occur, i.e. ``ranking[1] != key(ranking[0])``.
    """
    key = extract_key(profile)
    if key is None:
        raise ProfileError("uniform matchings are only defined for joint profiles")
    s, t = ranking
    if not (1 <= s <= profile.n) or key[s - 1] != t:
        return None
    pairing = [0] * profile.n
    for w in range(profile.n):
        m = profile.women_ranks[w].index(s)
        pairing[m] = w
    return make_matching(profile, pairing)


def uniform_matching_is_stable(key: Sequence[int], ranking: Tuple[int, int]) -> bool:
    """Decide stability from the key alone: unstable iff some (k, key(k)) lies strictly up-left."""
    i, j = ranking
    return not any(k < i and key[k - 1] < j for k in range(1, len(key) + 1))


def dominates_for_men(profile: PreferenceProfile, a: Matching, b: Matching) -> bool:
    """Every man weakly prefers his partner in ``a`` to his partner in ``b``."""
    return all(
        profile.men_ranks[m][a.pairing[m]] <= profile.men_ranks[m][b.pairing[m]] for m in range(profile.n)
    )


def dominates_for_women(profile: PreferenceProfile, a: Matching, b: Matching) -> bool:
    return all(
        profile.women_ranks[w][a.husband(w)] <= profile.women_ranks[w][b.husband(w)] for w in range(profile.n)
    )
