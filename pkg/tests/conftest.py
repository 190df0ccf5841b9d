import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

from relayjam.channel import AverageGainView, FadingRealization  # noqa: E402
from relayjam.topology import NetworkTopology  # noqa: E402

ACCEPTANCE_LINES = []


def record(criterion: str, ok: bool, detail: str) -> None:
    line = f"[{'PASS' if ok else 'FAIL'}] {criterion}: {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def unit_topology(K=2):
    """S1, S2, E and K intermediates all at unit distance from each other is impossible
    in 2D for K > 1; callers only rely on the gains they set by hand."""
    pts = [(0.2 + 0.1 * k, 0.5) for k in range(K)]
    return NetworkTopology((0, 1), (1, 1), (0.5, 0), pts, 3.0)


def unit_realization(K=2, value=1.0):
    n = 3 + K
    g = np.full((n, n), value)
    np.fill_diagonal(g, 0.0)
    return FadingRealization.from_power_gains(g)


def random_realization(rng, K, low=-3.0, high=3.0):
    """Symmetric log-uniform power gains over 10**low .. 10**high."""
    n = 3 + K
    g = 10.0 ** rng.uniform(low, high, size=(n, n))
    g = np.triu(g, 1)
    g = g + g.T
    return FadingRealization.from_power_gains(g)


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


@pytest.fixture
def unit_avg():
    """Average view with every mean eavesdropper gain equal to 1."""
    return AverageGainView(np.ones(3 + 8))
