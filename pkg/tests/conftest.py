import pytest

_KEY = pytest.StashKey[list]()


@pytest.fixture
def report_criterion(request):
    """Record one pass/fail line for an acceptance criterion."""
    log = request.config.stash.setdefault(_KEY, [])

    def record(name, checks, runtime=None):
        failed = [label for label, ok in checks if not ok]
        status = "PASS" if not failed else "FAIL"
        line = f"{status} criterion {name}"
        if runtime is not None:
            line += f" ({runtime:.2f} s)"
        if failed:
            line += ": failed " + "; ".join(failed)
        print(line)
        log.append(line)
        return failed

    return record


def pytest_terminal_summary(terminalreporter, config):
    lines = config.stash.get(_KEY, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
