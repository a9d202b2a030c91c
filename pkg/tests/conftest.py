import pytest

ACCEPTANCE = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    if not item.name.startswith("test_criterion_"):
        return
    number = int(item.name.split("_")[2])
    title = (item.function.__doc__ or item.name).strip().splitlines()[0]
    failed = report.failed or ACCEPTANCE.get(number, (None, False))[1]
    if report.when == "call" or report.failed:
        ACCEPTANCE[number] = (title, failed)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        title, failed = ACCEPTANCE[number]
        terminalreporter.write_line(f"{'FAIL' if failed else 'PASS'}  criterion {number:2d}: {title}")
