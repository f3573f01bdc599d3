import pytest

_criteria: dict[str, bool] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None or (rep.when != "call" and rep.passed):
        return
    label = str(mark.args[0])
    _criteria[label] = _criteria.get(label, True) and rep.passed


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for label in sorted(_criteria, key=lambda s: (not s.isdigit(), s.zfill(3))):
        terminalreporter.write_line(f"criterion {label}: {'PASS' if _criteria[label] else 'FAIL'}")
