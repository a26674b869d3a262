from math import gcd

import pytest
from hypothesis import HealthCheck, settings

settings.register_profile("ci", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("ci")

GRID = (5, 13, 17, 29, 37, 41, 53, 61)

#: ordered pairs (p, q), p != q, from GRID with gcd(p-1, q-1) = 4
GRID_PAIRS = tuple((p, q) for p in GRID for q in GRID if p != q and gcd(p - 1, q - 1) == 4)

#: (p, q, g1, g2) with 2 in D_2, one per p = q (mod 8) pair with p < q
TWO_IN_D2 = (
    (5, 13, 2, 7),
    (5, 29, 2, 8),
    (5, 37, 2, 5),
    (5, 53, 2, 5),
    (5, 61, 2, 6),
    (13, 29, 2, 8),
    (13, 53, 2, 5),
    (29, 37, 2, 5),
    (29, 53, 2, 5),
    (29, 61, 2, 6),
    (37, 53, 2, 5),
    (53, 61, 2, 6),
)

VERDICTS: list[str] = []


@pytest.fixture(scope="session")
def verdicts():
    return VERDICTS


def pytest_terminal_summary(terminalreporter):
    if VERDICTS:
        terminalreporter.section("acceptance criteria")
        for line in sorted(VERDICTS):
            terminalreporter.write_line(line)
