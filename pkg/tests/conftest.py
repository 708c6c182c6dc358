"""Shared reporting for the acceptance gate.

The acceptance tests record one verdict per criterion; printing happens here
in the terminal summary, where pytest's output capture cannot swallow it.
"""

ACCEPTANCE_VERDICTS = {}


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not ACCEPTANCE_VERDICTS:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(ACCEPTANCE_VERDICTS):
        ok = ACCEPTANCE_VERDICTS[num]
        terminalreporter.write_line(f"ACCEPTANCE {num}: {'PASS' if ok else 'FAIL'}")
