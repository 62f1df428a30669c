"""Shared pytest hooks: repeat the acceptance checklist after the run.

The acceptance tests announce one line per criterion as they execute, but
pytest's capture swallows stdout for passing tests.  Recording the lines
here and replaying them in the terminal summary keeps the checklist
visible in a plain `pytest -v` run.
"""

CRITERION_LINES = []


def record_criterion(line):
    CRITERION_LINES.append(line)


def pytest_terminal_summary(terminalreporter):
    if not CRITERION_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(set(CRITERION_LINES)):
        terminalreporter.write_line(line)
