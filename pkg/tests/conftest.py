import pytest

_acceptance = {}


@pytest.fixture
def criterion(request):
    """Register an acceptance criterion label; the outcome is reported at session end."""
    labels = []
    yield labels.append
    for label in labels:
        _acceptance.setdefault(request.node.nodeid, []).append(label)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    if report.when == "call":
        item.config._accept_outcomes = getattr(item.config, "_accept_outcomes", {})
        item.config._accept_outcomes[item.nodeid] = report.passed


def pytest_terminal_summary(terminalreporter, config):
    if not _acceptance:
        return
    outcomes = getattr(config, "_accept_outcomes", {})
    terminalreporter.section("acceptance criteria")
    for nodeid, labels in sorted(_acceptance.items(), key=lambda kv: kv[1][0]):
        status = "PASS" if outcomes.get(nodeid) else "FAIL"
        for label in labels:
            terminalreporter.write_line(f"{status}  {label}")
