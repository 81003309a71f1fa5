"""Shared pytest wiring: the acceptance verdict summary block.

Acceptance tests append one preformatted line per claim; printing them
from a terminal_summary hook keeps them visible under default capture.
"""

ACCEPTANCE_VERDICTS = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_VERDICTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in ACCEPTANCE_VERDICTS:
        terminalreporter.write_line(line)
