import time

_acceptance_report = []


def record_criterion(tag, started):
    _acceptance_report.append((tag, time.monotonic() - started))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance_report:
        return
    terminalreporter.write_sep("-", "acceptance criteria")
    for tag, elapsed in _acceptance_report:
        terminalreporter.write_line(f"PASS  {tag} ({elapsed:.2f}s)")
