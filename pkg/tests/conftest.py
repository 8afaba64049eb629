"""Collects acceptance-criterion outcomes and prints one line per criterion at the end of the run."""
from collections import OrderedDict


_RESULTS: "OrderedDict[int, dict]" = OrderedDict()


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion covered by the test")


def pytest_collection_modifyitems(items):
    for item in items:
        marker = item.get_closest_marker("criterion")
        if marker:
            number, title = marker.args
            _RESULTS.setdefault(number, {"title": title, "outcomes": []})


def pytest_runtest_makereport(item, call):
    marker = item.get_closest_marker("criterion")
    if marker is None or call.when != "call":
        return
    number = marker.args[0]
    passed = call.excinfo is None
    note = "" if passed else str(call.excinfo.value).splitlines()[0][:160]
    _RESULTS[number]["outcomes"].append((item.name, passed, note))


def pytest_terminal_summary(terminalreporter):
    if not any(r["outcomes"] for r in _RESULTS.values()):
        return
    terminalreporter.section("acceptance criteria")
    for number, record in sorted(_RESULTS.items()):
        outcomes = record["outcomes"]
        if not outcomes:
            continue
        ok = all(p for _, p, _ in outcomes)
        line = f"criterion {number:>2} {record['title']}: {'PASS' if ok else 'FAIL'}"
        failed = [f"{name}: {note}" for name, p, note in outcomes if not p]
        if failed:
            line += " (" + "; ".join(failed) + ")"
        terminalreporter.write_line(line)
