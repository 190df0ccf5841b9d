"""Block Rayleigh fading draws and the averaged eavesdropper-link view.

A realization stores one complex gain per ordered node pair, ``h[a, b]`` being
the gain of the link a -> b. With reciprocal channels (the default) the
matrix is symmetric, so one draw serves both directions of a link within a
coherence interval.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

import numpy as np

from .topology import EVE, NetworkTopology, NodeId, resolve_node


def trial_rng(master_seed: int, trial: int) -> np.random.Generator:
    """Independent stream for one Monte-Carlo trial.

    Equivalent to ``SeedSequence(master_seed).spawn(...)[trial]`` without
    materialising the earlier children.
    """
    ss = np.random.SeedSequence(entropy=int(master_seed), spawn_key=(int(trial),))
    return np.random.Generator(np.random.PCG64(ss))


@dataclass(frozen=True)
class FadingRealization:
    """Complex link gains for one coherence interval (global instantaneous knowledge)."""

    gains: np.ndarray
    _power: np.ndarray = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        h = np.asarray(self.gains, dtype=complex)
        h.setflags(write=False)
        object.__setattr__(self, "gains", h)
        p = h.real**2 + h.imag**2
        p.setflags(write=False)
        object.__setattr__(self, "_power", p)

    @property
    def n_nodes(self) -> int:
        return self.gains.shape[0]

    @property
    def power_gains(self) -> np.ndarray:
        """``|h[a, b]|**2`` for every ordered pair."""
        return self._power

    @property
    def reciprocal(self) -> bool:
        return bool(np.array_equal(self.gains, self.gains.T))

    def gain(self, a: int, b: int) -> complex:
        if a == b:
            raise ValueError("no self link")
        return complex(self.gains[a, b])

    def power_gain(self, a: int, b: int) -> float:
        if a == b:
            raise ValueError("no self link")
        return float(self._power[a, b])

    @classmethod
    def from_power_gains(cls, power: np.ndarray) -> "FadingRealization":
        """Build a realization with real, nonnegative amplitudes ``sqrt(power)``.

        Only power gains enter the SINR expressions, so this is handy for
        hand-constructed test cases.
        """
        power = np.asarray(power, dtype=float)
        if np.any(power < 0):
            raise ValueError("power gains must be nonnegative")
        h = np.sqrt(power).astype(complex)
        np.fill_diagonal(h, 0.0)
        return cls(h)


def draw_realization(
    topology: NetworkTopology, rng: np.random.Generator, reciprocal: bool = True
) -> FadingRealization:
    """Draw every link as CN(0, d**-beta), independently across links."""
    return FadingRealization(_draw_gains(topology.variance_matrix(), rng, reciprocal))


def _draw_gains(var: np.ndarray, rng: np.random.Generator, reciprocal: bool) -> np.ndarray:
    n = var.shape[0]
    if reciprocal:
        iu = np.triu_indices(n, k=1)
        z = rng.standard_normal((iu[0].size, 2))
        vals = np.sqrt(var[iu] / 2.0) * (z[:, 0] + 1j * z[:, 1])
        h = np.zeros((n, n), dtype=complex)
        h[iu] = vals
        h[(iu[1], iu[0])] = vals
    else:
        off = ~np.eye(n, dtype=bool)
        z = rng.standard_normal((int(off.sum()), 2))
        h = np.zeros((n, n), dtype=complex)
        h[off] = np.sqrt(var[off] / 2.0) * (z[:, 0] + 1j * z[:, 1])
    return h


def draw_power_gains(
    topology: NetworkTopology,
    master_seed: int,
    trials: Iterable[int],
    reciprocal: bool = True,
) -> np.ndarray:
    """Stack ``|h|**2`` matrices for the given trial indices, shape (T, n, n).

    Trial ``t`` always uses the stream ``trial_rng(master_seed, t)``, so the
    result for a given trial does not depend on which batch it was drawn in.
    """
    var = topology.variance_matrix()
    trials = list(trials)
    out = np.empty((len(trials), var.shape[0], var.shape[0]))
    for k, t in enumerate(trials):
        h = _draw_gains(var, trial_rng(master_seed, t), reciprocal)
        out[k] = h.real**2 + h.imag**2
    return out


@dataclass(frozen=True)
class AverageGainView:
    """Mean power gains ``E|h|**2 = d**-beta`` of the links touching the eavesdropper."""

    to_eve: np.ndarray

    def __post_init__(self):
        v = np.array(self.to_eve, dtype=float)
        v.setflags(write=False)
        object.__setattr__(self, "to_eve", v)

    def mean_power_gain(self, a: int, b: int) -> float:
        if a == b:
            raise ValueError("no self link")
        if a == EVE:
            return float(self.to_eve[b])
        if b == EVE:
            return float(self.to_eve[a])
        raise KeyError(f"link ({a}, {b}) does not touch the eavesdropper")


def average_gain_view(topology: NetworkTopology) -> AverageGainView:
    v = topology.variance_matrix()[EVE].copy()
    v[EVE] = np.nan
    return AverageGainView(v)


def mean_power_gain(view: AverageGainView, topology: NetworkTopology, a: NodeId, b: NodeId) -> float:
    """Lookup by node id (``"S1"``, ``"I3"``, ...); raises KeyError for non-eavesdropper links."""
    return view.mean_power_gain(resolve_node(topology, a), resolve_node(topology, b))
