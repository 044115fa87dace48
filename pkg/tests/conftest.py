import numpy as np
import pytest

from pqharmonic.family import preset

ACCEPTANCE_LINES = []


def all_presets(alpha=0.0, trunc=64):
    return [
        preset("yalcin", alpha, m=3, n=1, trunc=trunc),
        preset("starlike", alpha, trunc=trunc),
        preset("convex", alpha, trunc=trunc),
        preset("starlike_q", alpha, q=0.5, trunc=trunc),
        preset("convex_q", alpha, q=0.5, trunc=trunc),
        preset("convolution", alpha, trunc=trunc),
    ]


@pytest.fixture
def rng():
    return np.random.default_rng(20261016)


@pytest.fixture
def starlike():
    return preset("starlike", 0.0)


@pytest.fixture
def convex():
    return preset("convex", 0.0)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
