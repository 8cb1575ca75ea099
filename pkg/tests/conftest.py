import pytest

_ACCEPTANCE_RESULTS = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    if report.when != "call" or "test_acceptance" not in str(item.fspath):
        return
    label = getattr(item.function, "_criterion", None)
    if label is not None:
        previous = _ACCEPTANCE_RESULTS.get(label, True)
        _ACCEPTANCE_RESULTS[label] = previous and report.passed


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for label in sorted(_ACCEPTANCE_RESULTS, key=lambda kv: int(kv.split(":")[0])):
        status = "PASS" if _ACCEPTANCE_RESULTS[label] else "FAIL"
        terminalreporter.write_line(f"criterion {label}: {status}")
