import pytest

_criteria: dict[int, tuple[str, str, str]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion checked by this test")


@pytest.fixture
def measured():
    """Tests append 'name=value' notes here; they are shown in the summary line."""
    return []


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    number, title = marker.args
    if rep.when == "call" or (rep.when == "setup" and not rep.passed):
        notes = item.funcargs.get("measured") or []
        _criteria[number] = ("PASS" if rep.passed else "FAIL", title, ", ".join(notes))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        status, title, notes = _criteria[number]
        line = f"{status}  AC{number:<2} {title}"
        if notes:
            line += f"  [{notes}]"
        terminalreporter.write_line(line)
    passed = sum(s == "PASS" for s, _, _ in _criteria.values())
    terminalreporter.write_line(f"{passed}/{len(_criteria)} acceptance criteria passed")
