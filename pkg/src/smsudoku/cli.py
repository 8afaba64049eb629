"""Command-line front end.  Every subcommand parses input, calls the library and prints text.

Exit codes: 0 success, 1 usage error, 2 malformed input, 3 inconsistent
puzzle, 4 verification failure.  Errors go to stderr as a single line
``error: <kind>: <message>``.
"""
from __future__ import annotations

import argparse
import sys
from typing import List, Optional, Sequence

from . import analysis, bridge, matching, profiles, solver, verify
from .bridge import GridError, SudokuGrid
from .profiles import PreferenceProfile, ProfileError

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_MALFORMED = 2
EXIT_INCONSISTENT = 3
EXIT_VERIFY_FAIL = 4


class CliError(Exception):
    def __init__(self, kind: str, message: str, code: int):
        super().__init__(message)
        self.kind = kind
        self.code = code


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse would exit 2, which is reserved for bad input
        raise CliError("usage", message, EXIT_USAGE)


# ---------------------------------------------------------------------------
# input handling

def _read(path: str) -> str:
    try:
        if path == "-":
            return sys.stdin.read()
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise CliError("malformed-input", f"cannot read {path}: {exc.strerror}", EXIT_MALFORMED) from None


def _is_profile_text(text: str) -> bool:
    """Profile files have 'men' right after the header; grid files do not."""
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines or not lines[0].replace(" ", "").startswith("n="):
        raise CliError("malformed-input", "missing header line 'n=<int>'", EXIT_MALFORMED)
    return len(lines) > 1 and lines[1] == "men"


def _load(path: str):
    """Return ('profiles', [PreferenceProfile, ...]) or ('grid', SudokuGrid)."""
    text = _read(path)
    try:
        if _is_profile_text(text):
            return "profiles", profiles.parse_profiles(text)
        return "grid", bridge.parse_grid(text)
    except (ProfileError, GridError) as exc:
        raise CliError("malformed-input", str(exc), EXIT_MALFORMED) from None


def _load_profile(path: str) -> PreferenceProfile:
    kind, value = _load(path)
    if kind == "profiles" and len(value) == 1:
        return value[0]
    if kind == "grid":
        tmpl = bridge.grid_template(value)
        if tmpl is not None:
            return bridge.template_to_profile(tmpl)
    raise CliError("malformed-input", "expected a single profile or a one-digit template grid", EXIT_MALFORMED)


def _load_grid(path: str) -> SudokuGrid:
    kind, value = _load(path)
    if kind != "grid":
        raise CliError("malformed-input", "expected a grid file", EXIT_MALFORMED)
    return value


# ---------------------------------------------------------------------------
# output helpers

def _pairs(pairs) -> str:
    return " ".join(f"({a + 1},{b + 1})" for a, b in pairs)


def _matrix_lines(rows) -> List[str]:
    return [" ".join(str(v) for v in row) for row in rows]


def _ranking_lines(profile: PreferenceProfile) -> List[str]:
    return [" ".join(f"({s},{t})" for s, t in row) for row in profiles.ranking_matrix(profile)]


def _placement_lines(grid: SudokuGrid) -> List[str]:
    return [" ".join("".join(map(str, entry)) for entry in row) for row in bridge.placement_matrix(grid)]


def _matching_line(mt: matching.Matching) -> str:
    return f"{_pairs(enumerate(mt.pairing))} cost {mt.total_cost}"


# ---------------------------------------------------------------------------
# subcommands

def cmd_convert(args) -> List[str]:
    kind, value = _load(args.input)
    if kind == "profiles":
        if len(value) == 1:
            tmpl = bridge.profile_to_template(value[0])
            return [bridge.format_grid(bridge.template_grid(tmpl, args.digit or 1)).rstrip("\n")]
        try:
            return [bridge.format_grid(bridge.profiles_to_grid(value)).rstrip("\n")]
        except GridError as exc:
            raise CliError("malformed-input", str(exc), EXIT_MALFORMED) from None
    grid = value
    if grid.is_complete():
        try:
            digit_profiles = bridge.grid_to_profiles(grid)
        except GridError as exc:
            raise CliError("malformed-input", str(exc), EXIT_MALFORMED) from None
        digits = [args.digit] if args.digit else range(1, grid.size + 1)
        out = []
        for d in digits:
            if not 1 <= d <= grid.size:
                raise CliError("usage", f"digit must be in 1..{grid.size}", EXIT_USAGE)
            out.append(f"# digit {d}")
            out.append(profiles.format_profile(digit_profiles[d - 1]).rstrip("\n"))
        return out
    tmpl = bridge.grid_template(grid)
    if tmpl is None:
        raise CliError("malformed-input", "partial grid is not a single-digit template", EXIT_MALFORMED)
    return [profiles.format_profile(bridge.template_to_profile(tmpl)).rstrip("\n")]


def cmd_solve(args) -> List[str]:
    grid = _load_grid(args.input)
    if args.cap < 0:
        raise CliError("usage", "cap must be >= 0", EXIT_USAGE)
    try:
        report = solver.solve(solver.Puzzle(grid, args.variant), cap=args.cap or None)
    except solver.InconsistentPuzzle as exc:
        raise CliError("inconsistent-puzzle", str(exc), EXIT_INCONSISTENT) from None
    out = [
        f"# variant: {args.variant}",
        f"# status: {report.status}",
        f"# solutions: {report.solution_count_status}",
    ]
    shown = report.solutions if args.all else report.solutions[:1]
    for k, sol in enumerate(shown):
        if k:
            out.append("")
        out.append(bridge.format_grid(sol).rstrip("\n"))
    return out


def cmd_match(args) -> List[str]:
    profile = _load_profile(args.input)
    sides = [matching.MEN, matching.WOMEN] if args.propose == "both" else [args.propose]
    out = []
    for side in sides:
        trace = matching.gale_shapley(profile, side)
        out.append(f"# proposing: {side}")
        out.append(trace.render())
        out.append(f"rounds: {trace.num_rounds}")
        out.append(f"matching: {_matching_line(trace.matching)}")
    return out


def cmd_enumerate(args) -> List[str]:
    profile = _load_profile(args.input)
    try:
        stable = matching.enumerate_stable_matchings(profile)
    except matching.EnumerationTooLarge as exc:
        raise CliError("usage", str(exc), EXIT_USAGE) from None
    out = [f"stable matchings: {len(stable)}"]
    out += [f"  {_matching_line(mt)}" for mt in stable]
    out.append(f"egalitarian: {_matching_line(matching.egalitarian_matching(profile))}")
    out.append("valid partners (rows men, columns women):")
    table = matching.valid_partners(profile)
    out += ["  " + " ".join("x" if ok else "." for ok in row) for row in table]
    return out


def _classify_profile(profile: PreferenceProfile) -> List[str]:
    flags = profiles.family_flags(profile)
    key = profiles.extract_key(profile)
    out = [
        f"n: {profile.n}",
        f"mutually-latin: {flags.mutually_latin}",
        f"pseudo-latin: {flags.pseudo_latin}",
        f"disjoint: {flags.disjoint}",
        f"joint: {flags.joint}",
        f"mirror: {flags.mirror}",
        f"key: {' '.join(map(str, key)) if key else '-'}",
    ]
    if profile.n == 2:
        out.append(f"type: {analysis.classify_n2(profile)}")
    roles = [r for r in profiles.classify_pairs(profile) if r.role != profiles.PLAIN]
    out.append("special pairs: " + (" ".join(f"({r.man + 1},{r.woman + 1}):{r.role}" for r in roles) or "-"))
    out.append("ranking matrix (rows women, columns men):")
    out += ["  " + line for line in _ranking_lines(profile)]
    out.append("tally matrix:")
    out += ["  " + line for line in _matrix_lines(profiles.tally_matrix(profile))]
    return out


def _classify_grid(grid: SudokuGrid) -> List[str]:
    if not grid.is_complete():
        tmpl = bridge.grid_template(grid)
        if tmpl is None:
            raise CliError("malformed-input", "partial grid is not a single-digit template", EXIT_MALFORMED)
        return _classify_profile(bridge.template_to_profile(tmpl))
    flags = bridge.grid_flags(grid)
    out = [f"valid: {flags.valid}", f"dg: {flags.dg}", f"jg: {flags.jg}", f"box-cyclic: {bridge.is_box_cyclic(grid)}"]
    if flags.jg:
        out.append("placement matrix:")
        out += ["  " + line for line in _placement_lines(grid)]
    if flags.valid:
        for d, p in enumerate(bridge.grid_to_profiles(grid), 1):
            f = profiles.family_flags(p)
            names = [name for name in ("mutually_latin", "pseudo_latin", "disjoint", "joint", "mirror") if getattr(f, name)]
            label = f" type {analysis.classify_n2(p)}" if grid.n == 2 else ""
            out.append(f"digit {d}:{label} {' '.join(names) or '-'}")
    return out


def cmd_classify(args) -> List[str]:
    kind, value = _load(args.input)
    if kind == "profiles":
        out = []
        for k, p in enumerate(value):
            if len(value) > 1:
                out.append(f"# profile {k + 1}")
            out += _classify_profile(p)
        return out
    return _classify_grid(value)


def cmd_census(args) -> List[str]:
    report = analysis.n2_census()
    out = [
        f"complete grids: {report.total_grids}",
        f"classes up to relabeling: {report.classes_up_to_relabel}",
        "classes (first row 1..4, lexicographic):",
    ]
    for c in report.classes:
        rows = "/".join("".join(map(str, row)) for row in c.grid.cells)
        out.append(f"  {rows} types {c.types} dg {c.dg} jg {c.jg}")
    out.append("type multisets: " + " ".join(f"{k}x{v}" for k, v in report.type_multiset_histogram.items()))
    out.append("profiles per type: " + " ".join(f"{k}={v}" for k, v in report.per_type_profile_counts.items()))
    out.append("profile slots per type: " + " ".join(f"{k}={v}" for k, v in report.type_slot_counts.items()))
    incidence = sorted(set(report.profiles_per_grid_incidence.values()))
    out.append(f"classes per profile: {' '.join(map(str, incidence))}")
    out.append(f"structural facts hold: {analysis.n2_census_constraints_check(report)}")
    return out


def _parse_base(text: str) -> List[List[int]]:
    try:
        return [[int(tok) for tok in row.split()] for row in text.split("/")]
    except ValueError:
        raise CliError("malformed-input", f"bad base box {text!r}", EXIT_MALFORMED) from None


def cmd_generate(args) -> List[str]:
    if args.base:
        base = _parse_base(args.base)
    else:
        n = args.n
        if n < 1:
            raise CliError("usage", "n must be positive", EXIT_USAGE)
        base = [[r * n + c + 1 for c in range(n)] for r in range(n)]
    try:
        grid = bridge.box_cyclic_grid(base)
    except (GridError, ValueError) as exc:
        raise CliError("malformed-input", str(exc), EXIT_MALFORMED) from None
    out = [bridge.format_grid(grid).rstrip("\n"), "# placement matrix:"]
    out += ["# " + line for line in _placement_lines(grid)]
    return out


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="smsudoku", description="Stable matchings and Sudoku grids.")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    p = sub.add_parser("convert", help="profile <-> template <-> grid")
    p.add_argument("input")
    p.add_argument("--digit", type=int, help="digit to extract or to write")
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("solve", help="solve a standard, DG or JG puzzle")
    p.add_argument("input")
    p.add_argument("--variant", choices=solver.VARIANTS, default=solver.STANDARD)
    p.add_argument("--cap", type=int, default=2, help="stop after this many solutions (0 = all)")
    p.add_argument("--all", action="store_true", help="print every solution found, not just the first")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("match", help="deferred acceptance with a round-by-round trace")
    p.add_argument("input")
    p.add_argument("--propose", choices=(matching.MEN, matching.WOMEN, "both"), default=matching.MEN)
    p.set_defaults(func=cmd_match)

    p = sub.add_parser("enumerate", help="all stable matchings, egalitarian optimum, valid partners")
    p.add_argument("input")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("classify", help="family flags of a profile or a grid")
    p.add_argument("input")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("census", help="the n=2 grid census")
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("generate", help="box-cyclic JG grid from a base box")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--base", help='base box rows separated by "/", e.g. "1 2/3 4"')
    group.add_argument("--n", type=int, help="use the base box 1..n^2 in reading order")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("verify", help="recompute every published value")
    p.add_argument("--full", action="store_true", help="include the slow n=5 scan and larger property runs")
    p.set_defaults(func=None)
    return parser


def run(argv: Optional[Sequence[str]] = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        if args.command is None:
            raise CliError("usage", "missing subcommand", EXIT_USAGE)
        if args.command == "verify":
            failed = 0
            for result in verify.run_claims(full=args.full):
                print(result.line(), file=out, flush=True)
                failed += not result.passed
            return EXIT_VERIFY_FAIL if failed else EXIT_OK
        for line in args.func(args):
            print(line, file=out)
        return EXIT_OK
    except CliError as exc:
        print(f"error: {exc.kind}: {exc}", file=err)
        return exc.code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
