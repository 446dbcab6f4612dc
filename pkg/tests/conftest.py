import pytest

from trieprofile.numerics import Bias
from trieprofile.profile_exact import second_moment_profile


@pytest.fixture(scope="session")
def b07():
    return Bias.of("0.7")


@pytest.fixture(scope="session")
def table07(b07):
    return second_moment_profile(40, b07)


ACCEPTANCE_LINES = []


@pytest.fixture
def acceptance_report(capsys):
    def report(number, passed, detail):
        line = f"CRITERION {number:>2}: {'PASS' if passed else 'FAIL'} | {detail}"
        ACCEPTANCE_LINES.append(line)
        with capsys.disabled():
            print("\n" + line)
    return report


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
