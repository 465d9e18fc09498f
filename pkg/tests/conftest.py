import pathlib
import sys

import pytest

sys.path.insert(0, str(pathlib.Path(__file__).parent))

from attack_econ import ScenarioParams  # noqa: E402

GOLDEN = pathlib.Path(__file__).parent / "golden"


@pytest.fixture
def fig2():
    """Reference economics (V=1000, p2=delta=0.8, C1=100, C2=200) at alpha = 0.5."""
    return ScenarioParams(V=1000.0, alpha=0.5, p2=0.8, delta=0.8, c1=100.0, c2=200.0)


_criteria: dict[int, list[tuple[str, bool]]] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    if report.when == "call" or (report.when == "setup" and not report.passed):
        _criteria.setdefault(marker.args[0], []).append((item.name, report.passed))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        runs = _criteria[number]
        status = "PASS" if all(ok for _, ok in runs) else "FAIL"
        names = ", ".join(name for name, _ in runs)
        terminalreporter.write_line(f"criterion {number}: {status}  ({names})")
