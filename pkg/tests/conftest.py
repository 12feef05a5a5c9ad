import pytest

_acceptance_lines = []


@pytest.fixture
def verdict():
    """Record a one-line pass/fail verdict, shown in the terminal summary."""
    def record(num, label, ok):
        _acceptance_lines.append(
            "acceptance %02d %-36s %s" % (num, label,
                                          "PASS" if ok else "FAIL"))
        assert ok, "acceptance %02d (%s) failed" % (num, label)
    return record


def pytest_terminal_summary(terminalreporter):
    if _acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_acceptance_lines):
            terminalreporter.write_line(line)
