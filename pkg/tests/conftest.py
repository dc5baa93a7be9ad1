import math
import sys
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from bresinski.semigroup import make_semigroup  # noqa: E402

settings.register_profile("default", max_examples=200, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


def semigroups(min_dim=1, max_dim=5, max_value=40):
    """Random numerical semigroups with min_dim <= e <= max_dim."""
    return (
        st.lists(st.integers(2, max_value), min_size=max(min_dim, 1), max_size=max_dim, unique=True)
        .filter(lambda g: math.gcd(*g) == 1)
        .map(make_semigroup)
        .filter(lambda H: H.embedding_dim >= min_dim)
    )


@pytest.fixture
def h5678():
    return make_semigroup([5, 6, 7, 8])


@pytest.fixture
def h_ci():
    return make_semigroup([10, 14, 15, 21])


@pytest.fixture
def h4567():
    return make_semigroup([4, 5, 6, 7])


ACCEPTANCE_LINES: list[str] = []


def record_criterion(number, ok, detail):
    ACCEPTANCE_LINES.append(f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {detail}")


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
