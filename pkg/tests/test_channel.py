import numpy as np
import pytest

from relayjam.channel import (
    FadingRealization,
    average_gain_view,
    draw_power_gains,
    draw_realization,
    mean_power_gain,
    trial_rng,
)
from relayjam.topology import EVE, S1, S2, NetworkTopology, intermediate_node, preset_scenario


def unit_link_topology():
    # S1-S2 at unit distance; everything else far away
    return NetworkTopology((0, 0), (1, 0), (0, 3), [(3, 0), (3, 3)], 3.0)


def test_unit_link_moments():
    topo = unit_link_topology()
    g = draw_power_gains(topo, 2024, range(100_000))
    x = g[:, S1, S2]
    # |h|^2 ~ Exp(1): mean 1, variance 1
    assert x.mean() == pytest.approx(1.0, abs=0.02)
    assert x.var() == pytest.approx(1.0, abs=0.05)


def test_determinism_and_reciprocity():
    topo = preset_scenario("sparse-random", 5, 3)
    a = draw_realization(topo, trial_rng(9, 4))
    b = draw_realization(topo, trial_rng(9, 4))
    assert np.array_equal(a.gains, b.gains)
    assert a.reciprocal
    assert np.all(np.diag(a.power_gains) == 0)
    c = draw_realization(topo, trial_rng(9, 5))
    assert not np.array_equal(a.gains, c.gains)


def test_non_reciprocal_draws_differ_by_direction():
    topo = preset_scenario("sparse-random", 5, 3)
    r = draw_realization(topo, trial_rng(1, 0), reciprocal=False)
    assert not r.reciprocal
    assert r.gain(S1, intermediate_node(0)) != r.gain(intermediate_node(0), S1)


def test_batch_matches_single_draws():
    topo = preset_scenario("sparse-random", 4, 1)
    stack = draw_power_gains(topo, 77, [3, 10, 11])
    for row, t in zip(stack, [3, 10, 11]):
        assert np.array_equal(row, draw_realization(topo, trial_rng(77, t)).power_gains)


def test_average_gain_view():
    topo = NetworkTopology((0, 1), (1, 1), (0, 0), [(0.5, 0.0), (0.9, 0.6)], 3.0)
    avg = average_gain_view(topo)
    assert mean_power_gain(avg, topo, "S1", "E") == 1.0
    assert mean_power_gain(avg, topo, "E", "I0") == pytest.approx(8.0, rel=1e-15)
    assert avg.mean_power_gain(EVE, S2) == pytest.approx(2 ** -1.5, rel=1e-15)
    with pytest.raises(KeyError):
        mean_power_gain(avg, topo, "S1", "S2")


def test_from_power_gains_roundtrip():
    g = np.array([[0, 2.0, 3.0], [2.0, 0, 0.5], [3.0, 0.5, 0]])
    r = FadingRealization.from_power_gains(g)
    assert np.allclose(r.power_gains, g, rtol=1e-15)
    with pytest.raises(ValueError):
        FadingRealization.from_power_gains(-g)
