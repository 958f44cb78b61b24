import sys
from collections import defaultdict
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

_results: dict[int, list[tuple[str, str]]] = defaultdict(list)
_titles: dict[int, str] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion this test belongs to")


def pytest_collection_modifyitems(items):
    for item in items:
        mark = item.get_closest_marker("criterion")
        if mark:
            _titles[mark.args[0]] = mark.args[1]


def pytest_runtest_makereport(item, call):
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    if call.when == "call" or (call.when == "setup" and call.excinfo is not None):
        outcome = "passed" if call.excinfo is None else "failed"
        _results[mark.args[0]].append((item.name, outcome))


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_results):
        runs = _results[number]
        failed = [name for name, outcome in runs if outcome != "passed"]
        status = "FAIL" if failed else "PASS"
        line = f"criterion {number:>2}: {status}  {_titles.get(number, '')} ({len(runs) - len(failed)}/{len(runs)})"
        if failed:
            line += "  failing: " + ", ".join(failed)
        terminalreporter.write_line(line)
