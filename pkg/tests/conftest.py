import sys
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

sys.path.insert(0, str(Path(__file__).parent))

from hullcodes import LinearCode, dual, field_make  # noqa: E402

settings.register_profile(
    "repo", max_examples=60, deadline=None, derandomize=True,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("repo")

G1 = [[1, 0, 2, 0, 1, 2], [0, 1, 0, 3, 0, 2]]
G2 = [[1, 0, 1, 0, 2, 2], [0, 1, 0, 1, 2, 2]]

# lines reported by the acceptance suite, printed in the terminal summary
ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def gf4():
    return field_make(2, 2)


@pytest.fixture
def example(gf4):
    C = LinearCode(gf4, G1)
    D = LinearCode(gf4, G2)
    return {"C": C, "Ch": dual(C, "hermitian"), "D": D, "Dh": dual(D, "hermitian")}


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
