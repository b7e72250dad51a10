import os
import sys

sys.path.insert(0, os.path.dirname(__file__))

# (number, description, verdict, seconds) appended by test_acceptance
ACCEPTANCE_RESULTS = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number, text, verdict, seconds in sorted(ACCEPTANCE_RESULTS):
        terminalreporter.write_line(f"[{verdict}] criterion {number:2d}: {text} ({seconds:.2f}s)")
