import os
import tempfile

# keep test runs away from the user's cache
os.environ.setdefault("SPRINGERKIT_CACHE", tempfile.mkdtemp(prefix="springerkit-test-"))

ACCEPTANCE = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n, line in sorted(ACCEPTANCE):
        terminalreporter.write_line(line)
