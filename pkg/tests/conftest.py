import pathlib
import re

GOLDEN = pathlib.Path(__file__).parent / "golden"

_criteria: dict[int, tuple[str, str, float]] = {}


def pytest_runtest_logreport(report):
    m = re.search(r"test_acceptance\.py::test_criterion_(\d+)_(\w+)", report.nodeid)
    if not m:
        return
    n = int(m.group(1))
    if report.when == "call" or report.outcome != "passed":
        prev = _criteria.get(n)
        outcome = "PASS" if report.outcome == "passed" else "FAIL"
        if prev and prev[1] == "FAIL":
            outcome = "FAIL"
        _criteria[n] = (m.group(2), outcome, report.duration)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_criteria):
        name, outcome, seconds = _criteria[n]
        terminalreporter.write_line(f"criterion {n} [{name}]: {outcome} ({seconds:.1f} s)")
