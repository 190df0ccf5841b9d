"""Joint relay and jammer selection for secure two-way amplify-and-forward relaying.

Typical use::

    from relayjam import preset_scenario, sweep, power_grid

    topo = preset_scenario("sparse-random", K=8, placement_seed=1)
    curves = sweep(["OS", "OS-MSISR", "OSW"], topo, power_grid(0, 50, 2), trials=2000, master_seed=0)
"""

__version__ = "0.1.0"

from .channel import AverageGainView, FadingRealization, average_gain_view, draw_realization, trial_rng
from .montecarlo import (
    SweepResult,
    ergodic_curve,
    find_crossover,
    fit_high_power_slope,
    outage_curve,
    power_grid,
    sweep,
)
from .secrecy import SecrecyRates, secrecy_rate, sum_secrecy_rate
from .selection import (
    SchemeId,
    SelectionOutcome,
    candidate_triples,
    scheme_metric,
    select,
    select_switching,
)
from .sinr import CandidateTriple, JammingMode, PowerConfig
from .topology import NetworkTopology, NodePosition, distance, link_variance, preset_scenario, validate

__all__ = [
    "AverageGainView", "CandidateTriple", "FadingRealization", "JammingMode", "NetworkTopology",
    "NodePosition", "PowerConfig", "SchemeId", "SecrecyRates", "SelectionOutcome", "SweepResult",
    "average_gain_view", "candidate_triples", "distance", "draw_realization", "ergodic_curve",
    "find_crossover", "fit_high_power_slope", "link_variance", "outage_curve", "power_grid",
    "preset_scenario", "scheme_metric", "secrecy_rate", "select", "select_switching",
    "sum_secrecy_rate", "sweep", "trial_rng", "validate",
]
