"""Preference profiles for the stable marriage problem and their derived matrices.

People are indexed from 0 inside the library; ranks are always 1..n.  The text
formats and the CLI print people 1-based.

``men_ranks[m][w]`` is the rank man ``m`` gives woman ``w`` and
``women_ranks[w][m]`` the rank woman ``w`` gives man ``m``.  Rows hold ranks,
not preference-ordered lists.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Tuple

Matrix = Tuple[Tuple[int, ...], ...]


class ProfileError(ValueError):
    """Raised for malformed preference profiles."""


def _as_matrix(rows: Iterable[Iterable[int]]) -> Matrix:
    return tuple(tuple(int(v) for v in row) for row in rows)


def _check_rank_rows(name: str, matrix: Matrix, n: int) -> None:
    if len(matrix) != n:
        raise ProfileError(f"{name}: expected {n} rows, got {len(matrix)}")
    expected = list(range(1, n + 1))
    for i, row in enumerate(matrix):
        if len(row) != n:
            raise ProfileError(f"{name}: row {i + 1} has {len(row)} entries, expected {n}")
        if sorted(row) != expected:
            raise ProfileError(f"{name}: row {i + 1} {row} is not a permutation of 1..{n}")


@dataclass(frozen=True)
class PreferenceProfile:
    n: int
    men_ranks: Matrix
    women_ranks: Matrix

    def __post_init__(self):
        if self.n < 1:
            raise ProfileError("n must be positive")
        _check_rank_rows("men", self.men_ranks, self.n)
        _check_rank_rows("women", self.women_ranks, self.n)

    def cost(self, man: int, woman: int) -> int:
        """Egalitarian cost of a man-woman pair: the sum of their mutual ranks."""
        return self.men_ranks[man][woman] + self.women_ranks[woman][man]

    def swap_genders(self) -> "PreferenceProfile":
        return PreferenceProfile(self.n, self.women_ranks, self.men_ranks)

    def men_preference_lists(self) -> List[List[int]]:
        """Women in each man's order of preference (best first)."""
        return [sorted(range(self.n), key=row.__getitem__) for row in self.men_ranks]

    def women_preference_lists(self) -> List[List[int]]:
        return [sorted(range(self.n), key=row.__getitem__) for row in self.women_ranks]


def make_profile(men_ranks: Sequence[Sequence[int]], women_ranks: Sequence[Sequence[int]]) -> PreferenceProfile:
    men = _as_matrix(men_ranks)
    women = _as_matrix(women_ranks)
    if len(men) != len(women):
        raise ProfileError(f"dimension mismatch: {len(men)} men vs {len(women)} women")
    return PreferenceProfile(len(men), men, women)


def ranking_matrix(profile: PreferenceProfile) -> Tuple[Tuple[Tuple[int, int], ...], ...]:
    """Entry (i, j) is (s, t): s = woman i's rank of man j, t = man j's rank of woman i."""
    n = profile.n
    return tuple(
        tuple((profile.women_ranks[i][j], profile.men_ranks[j][i]) for j in range(n))
        for i in range(n)
    )


def profile_from_ranking_matrix(rm: Sequence[Sequence[Tuple[int, int]]]) -> PreferenceProfile:
    n = len(rm)
    women = [[rm[i][j][0] for j in range(n)] for i in range(n)]
    men = [[rm[i][j][1] for i in range(n)] for j in range(n)]
    return make_profile(men, women)


def tally_matrix(profile: PreferenceProfile) -> Matrix:
    n = profile.n
    counts = [[0] * n for _ in range(n)]
    for row in ranking_matrix(profile):
        for s, t in row:
            counts[s - 1][t - 1] += 1
    return _as_matrix(counts)


SOULMATES = "soulmates"
HELL_PAIR = "hell-pair"
OUTCAST_PAIR = "outcast-pair"
PLAIN = "plain"


@dataclass(frozen=True)
class PairRole:
    man: int
    woman: int
    cost: int
    role: str
    # outcasts may also be soulmates or a hell-pair, so the flag is kept separately
    outcast: bool = False


def is_outcast_pair(profile: PreferenceProfile, man: int, woman: int) -> bool:
    """True if every other woman ranks ``man`` last and every other man ranks ``woman`` last.

    For n == 1 there is nobody else, so the single pair is vacuously outcast.
    """
    n = profile.n
    return all(
        profile.women_ranks[w][man] == n for w in range(n) if w != woman
    ) and all(profile.men_ranks[m][woman] == n for m in range(n) if m != man)


def classify_pairs(profile: PreferenceProfile) -> List[PairRole]:
    n = profile.n
    roles = []
    for m in range(n):
        for w in range(n):
            s, t = profile.women_ranks[w][m], profile.men_ranks[m][w]
            outcast = is_outcast_pair(profile, m, w)
            if s == 1 and t == 1:
                role = SOULMATES
            elif s == n and t == n:
                role = HELL_PAIR
            elif outcast:
                role = OUTCAST_PAIR
            else:
                role = PLAIN
            roles.append(PairRole(m, w, s + t, role, outcast))
    return roles


def is_latin_square(matrix: Matrix) -> bool:
    n = len(matrix)
    symbols = set(range(1, n + 1))
    return all(set(row) == symbols for row in matrix) and all(
        {matrix[i][j] for i in range(n)} == symbols for j in range(n)
    )


def is_mutually_latin(profile: PreferenceProfile) -> bool:
    return is_latin_square(profile.men_ranks) and is_latin_square(profile.women_ranks)


def is_pseudo_latin(profile: PreferenceProfile) -> bool:
    n = profile.n
    return all(profile.cost(m, w) == n + 1 for m in range(n) for w in range(n))


def is_disjoint(profile: PreferenceProfile) -> bool:
    return all(v == 1 for row in tally_matrix(profile) for v in row)


def extract_key(profile: PreferenceProfile) -> Optional[Tuple[int, ...]]:
    """Key of a joint profile as a tuple ``f`` with ``f[i-1]`` = f(i); None if not joint.

    A joint profile's tally matrix has exactly n non-zero entries, each equal to
    n, one per row and column.
    """
    n = profile.n
    tally = tally_matrix(profile)
    key = []
    for row in tally:
        nonzero = [j for j, v in enumerate(row) if v]
        if len(nonzero) != 1 or row[nonzero[0]] != n:
            return None
        key.append(nonzero[0] + 1)
    if sorted(key) != list(range(1, n + 1)):
        return None
    return tuple(key)


def is_joint(profile: PreferenceProfile) -> bool:
    return extract_key(profile) is not None


@dataclass(frozen=True)
class FamilyFlags:
    mutually_latin: bool
    pseudo_latin: bool
    disjoint: bool
    joint: bool
    mirror: bool


def family_flags(profile: PreferenceProfile) -> FamilyFlags:
    key = extract_key(profile)
    return FamilyFlags(
        mutually_latin=is_mutually_latin(profile),
        pseudo_latin=is_pseudo_latin(profile),
        disjoint=is_disjoint(profile),
        joint=key is not None,
        mirror=key is not None and key == tuple(range(1, profile.n + 1)),
    )


def check_key(key: Sequence[int], n: Optional[int] = None) -> Tuple[int, ...]:
    key = tuple(int(v) for v in key)
    if n is None:
        n = len(key)
    if len(key) != n or sorted(key) != list(range(1, n + 1)):
        raise ProfileError(f"key {key} is not a permutation of 1..{n}")
    return key


def profile_from_key(key: Sequence[int], n: Optional[int] = None) -> PreferenceProfile:
    """Canonical joint profile with the given key.

    Woman w ranks man m as ((m + w) mod n) + 1, so the women's rows read
    1..n, 2..n 1, and so on; a man ranked i by a woman ranks her key(i).
    """
    key = check_key(key, n)
    n = len(key)
    women = [[(m + w) % n + 1 for m in range(n)] for w in range(n)]
    men = [[key[women[w][m] - 1] for w in range(n)] for m in range(n)]
    return make_profile(men, women)


def joint_profile(women_latin: Sequence[Sequence[int]], key: Sequence[int]) -> PreferenceProfile:
    """Joint profile from any Latin square of women's ranks and a key."""
    key = check_key(key)
    n = len(key)
    women = _as_matrix(women_latin)
    men = [[key[women[w][m] - 1] for w in range(n)] for m in range(n)]
    return make_profile(men, women)


def relabel(profile: PreferenceProfile, men_perm: Sequence[int], women_perm: Sequence[int]) -> PreferenceProfile:
    """Rename man m to men_perm[m] and woman w to women_perm[w]."""
    n = profile.n
    men = [[0] * n for _ in range(n)]
    women = [[0] * n for _ in range(n)]
    for m in range(n):
        for w in range(n):
            men[men_perm[m]][women_perm[w]] = profile.men_ranks[m][w]
            women[women_perm[w]][men_perm[m]] = profile.women_ranks[w][m]
    return make_profile(men, women)


def reflect_vertical(profile: PreferenceProfile) -> PreferenceProfile:
    """Mirror the grid picture left-right: men are renumbered n+1-x and men's ranks reversed."""
    n = profile.n
    men = [[n + 1 - profile.men_ranks[n - 1 - m][w] for w in range(n)] for m in range(n)]
    women = [[profile.women_ranks[w][n - 1 - m] for m in range(n)] for w in range(n)]
    return make_profile(men, women)


def reflect_horizontal(profile: PreferenceProfile) -> PreferenceProfile:
    """Mirror the grid picture top-bottom: women are renumbered and women's ranks reversed."""
    return reflect_vertical(profile.swap_genders()).swap_genders()


# ---------------------------------------------------------------------------
# text format

def format_profile(profile: PreferenceProfile) -> str:
    lines = [f"n={profile.n}", "men"]
    lines += [" ".join(map(str, row)) for row in profile.men_ranks]
    lines.append("women")
    lines += [" ".join(map(str, row)) for row in profile.women_ranks]
    return "\n".join(lines) + "\n"


def _content_lines(text: str) -> List[str]:
    out = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            out.append(line)
    return out


def parse_header(line: str) -> int:
    key, sep, value = line.partition("=")
    if key.strip() != "n" or not sep:
        raise ProfileError(f"expected header 'n=<int>', got {line!r}")
    try:
        n = int(value)
    except ValueError:
        raise ProfileError(f"bad size in header {line!r}") from None
    if n < 1:
        raise ProfileError("n must be positive")
    return n


def parse_profile(text: str) -> PreferenceProfile:
    lines = _content_lines(text)
    if not lines:
        raise ProfileError("empty profile")
    n = parse_header(lines[0])
    if len(lines) != 2 * n + 3 or lines[1] != "men" or lines[n + 2] != "women":
        raise ProfileError("expected 'men' block and 'women' block of n rows each")
    try:
        men = [[int(tok) for tok in line.split()] for line in lines[2 : n + 2]]
        women = [[int(tok) for tok in line.split()] for line in lines[n + 3 :]]
    except ValueError as exc:
        raise ProfileError(f"non-integer rank: {exc}") from None
    profile = make_profile(men, women)
    if profile.n != n:
        raise ProfileError(f"header says n={n} but matrices are {profile.n}x{profile.n}")
    return profile


def parse_profiles(text: str) -> List[PreferenceProfile]:
    """Parse several concatenated profiles (as written by ``convert`` on a grid)."""
    lines = _content_lines(text)
    profiles = []
    while lines:
        n = parse_header(lines[0])
        chunk, lines = lines[: 2 * n + 3], lines[2 * n + 3 :]
        profiles.append(parse_profile("\n".join(chunk)))
    return profiles


def all_profiles(n: int) -> List[PreferenceProfile]:
    """Every profile of size n ((n!)^(2n) of them); only sensible for n <= 2."""
    from itertools import permutations, product

    perms = list(permutations(range(1, n + 1)))
    out = []
    for rows in product(perms, repeat=2 * n):
        out.append(make_profile(rows[:n], rows[n:]))
    return out
