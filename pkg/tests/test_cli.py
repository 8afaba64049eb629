import io
import subprocess
import sys

import pytest

from smsudoku import bridge as br
from smsudoku import cli
from smsudoku import matching as mt
from smsudoku import profiles as pr
from smsudoku import samples, solver


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = cli.run(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


@pytest.fixture
def write(tmp_path):
    def _write(name, text):
        path = tmp_path / name
        path.write_text(text)
        return str(path)

    return _write


def test_solve_minimal_jg_puzzle(write):
    path = write("p.grid", br.format_grid(samples.JG_PUZZLE_MINIMAL))
    code, out, _ = run("solve", "--variant", "jg", path)
    assert code == cli.EXIT_OK
    assert "# status: unique" in out
    assert br.parse_grid(out) == samples.JG_ANSWER_MINIMAL


def test_solve_multiple_and_all(write):
    path = write("e.grid", br.format_grid(br.empty_grid(2)))
    code, out, _ = run("solve", "--cap", "3", "--all", path)
    assert code == 0
    assert "# status: multiple" in out and "# solutions: reached cap" in out
    blocks = out.split("\n\n")
    assert len(blocks) == 3
    assert [br.parse_grid(b) for b in blocks] == solver.solve(solver.Puzzle(br.empty_grid(2)), cap=3).solutions


def test_solve_cap_zero_counts_all(write):
    path = write("e.grid", br.format_grid(br.empty_grid(2)))
    _, out, _ = run("solve", "--cap", "0", path)
    assert "# solutions: 288" in out


def test_solve_inconsistent(write):
    path = write("bad.grid", "n=2\n1 1 . .\n. . . .\n. . . .\n. . . .\n")
    code, out, err = run("solve", path)
    assert code == cli.EXIT_INCONSISTENT
    assert err.startswith("error: inconsistent-puzzle: row constraint")
    assert err.count("\n") == 1 and not out


def test_match_small_example(write):
    path = write("p.txt", pr.format_profile(samples.SMALL_EXAMPLE))
    code, out, _ = run("match", "--propose", "men", path)
    assert code == 0
    trace = mt.gale_shapley(samples.SMALL_EXAMPLE)
    assert trace.render() in out
    assert "rounds: 1" in out
    assert "matching: (1,1) (2,2) cost 5" in out


def test_match_both_sides(write):
    path = write("p.txt", pr.format_profile(samples.GS_EXAMPLE))
    _, out, _ = run("match", "--propose", "both", path)
    assert "# proposing: men" in out and "# proposing: women" in out
    assert mt.gale_shapley(samples.GS_EXAMPLE, mt.WOMEN).render() in out


def test_enumerate(write):
    path = write("p.txt", pr.format_profile(samples.DISJOINT_LATIN))
    code, out, _ = run("enumerate", path)
    assert code == 0
    stable = mt.enumerate_stable_matchings(samples.DISJOINT_LATIN)
    assert out.startswith(f"stable matchings: {len(stable)}\n")
    best = mt.egalitarian_matching(samples.DISJOINT_LATIN)
    assert f"egalitarian: {cli._matching_line(best)}" in out


def test_classify_profile(write):
    path = write("p.txt", pr.format_profile(samples.TYPE_D))
    _, out, _ = run("classify", path)
    assert "pseudo-latin: True" in out and "joint: True" in out
    assert "key: 2 1" in out and "type: D" in out


def test_classify_grid(write):
    path = write("g.grid", br.format_grid(samples.JG_N2))
    _, out, _ = run("classify", path)
    assert "jg: True" in out and "box-cyclic: True" in out
    assert "  13 24\n  24 13" in out


def test_convert_round_trips(write):
    grid_path = write("g.grid", br.format_grid(samples.JG_ANSWER_EASY))
    code, profiles_text, _ = run("convert", grid_path)
    assert code == 0
    assert pr.parse_profiles(profiles_text) == br.grid_to_profiles(samples.JG_ANSWER_EASY)
    back_path = write("all.txt", profiles_text)
    _, grid_text, _ = run("convert", back_path)
    assert br.parse_grid(grid_text) == samples.JG_ANSWER_EASY


def test_convert_single_digit(write):
    grid_path = write("g.grid", br.format_grid(samples.JG_N2))
    _, text, _ = run("convert", "--digit", "2", grid_path)
    profile = pr.parse_profile(text)
    assert profile == br.grid_to_profiles(samples.JG_N2)[1]
    _, tmpl_text, _ = run("convert", "--digit", "2", write("p.txt", text))
    tmpl_grid = br.parse_grid(tmpl_text)
    assert br.grid_template(tmpl_grid) == br.digit_template(samples.JG_N2, 2)
    _, again, _ = run("convert", write("t.grid", tmpl_text))
    assert pr.parse_profile(again) == profile


def test_generate(write):
    code, out, _ = run("generate", "--base", "1 2/3 4")
    assert code == 0
    grid = br.parse_grid(out)
    assert grid == br.box_cyclic_grid([[1, 2], [3, 4]])
    assert "# 14 23" in out


def test_generate_bad_base():
    code, _, err = run("generate", "--base", "1 1/2 3")
    assert code == cli.EXIT_MALFORMED
    assert err.startswith("error: malformed-input:")


def test_census():
    code, out, _ = run("census")
    assert code == 0
    assert "complete grids: 288" in out
    assert "classes up to relabeling: 12" in out
    assert "type multisets: AAAAx1 AABBx4 BBBBx2 BBCDx4 CCDDx1" in out


def test_verify_quick():
    code, out, _ = run("verify")
    lines = out.strip().splitlines()
    assert code == cli.EXIT_OK
    assert lines and all(line.startswith("CLAIM ") and ": PASS (got " in line for line in lines)


@pytest.mark.parametrize(
    "argv,code,kind",
    [
        (["frobnicate"], cli.EXIT_USAGE, "usage"),
        ([], cli.EXIT_USAGE, "usage"),
        (["solve", "--variant", "killer", "x"], cli.EXIT_USAGE, "usage"),
        (["solve", "/nonexistent/file"], cli.EXIT_MALFORMED, "malformed-input"),
    ],
)
def test_error_codes(argv, code, kind):
    got, _, err = run(*argv)
    assert got == code
    assert err.startswith(f"error: {kind}:") and err.count("\n") == 1


def test_malformed_file(write):
    path = write("bad.txt", "n=2\nmen\n1 2\n")
    code, _, err = run("enumerate", path)
    assert code == cli.EXIT_MALFORMED
    assert err.startswith("error: malformed-input:")


def test_missing_header(write):
    code, _, _ = run("classify", write("bad.txt", "1 2\n3 4\n"))
    assert code == cli.EXIT_MALFORMED


def test_module_entry_point(write):
    path = write("p.txt", pr.format_profile(samples.SMALL_EXAMPLE))
    proc = subprocess.run([sys.executable, "-m", "smsudoku", "match", path], capture_output=True, text=True)
    assert proc.returncode == 0
    assert "matching: (1,1) (2,2) cost 5" in proc.stdout
