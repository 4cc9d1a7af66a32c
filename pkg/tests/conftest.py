import os
import sys

sys.path.insert(0, os.path.dirname(__file__))

_ACCEPTANCE = {}


def pytest_runtest_makereport(item, call):
    marker = item.get_closest_marker("acceptance")
    if marker is None or call.when != "call":
        return
    number, title, limit = marker.args
    passed = call.excinfo is None
    elapsed = call.stop - call.start
    prev = _ACCEPTANCE.get(number)
    if prev is not None:
        passed = passed and prev[1]
        elapsed += prev[2]
    _ACCEPTANCE[number] = (title, passed, elapsed, limit)


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for number in sorted(_ACCEPTANCE):
        title, passed, elapsed, limit = _ACCEPTANCE[number]
        status = "PASS" if passed else "FAIL"
        tr.write_line(f"[{status}] {number:2d}. {title} ({elapsed:.2f} s, limit {limit} s)")
