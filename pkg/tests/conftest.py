# Collects the one-line verdicts printed by the acceptance suite and repeats
# them at the end of the run, so they survive output capturing.

VERDICTS = []


def pytest_terminal_summary(terminalreporter):
    if VERDICTS:
        terminalreporter.section("acceptance criteria")
        for line in VERDICTS:
            terminalreporter.write_line(line)
