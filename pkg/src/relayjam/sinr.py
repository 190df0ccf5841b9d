"""AF amplification gain, per-link SNR components and the combined SINRs.

Every closed form here is written against :class:`LinkGains`, a bundle of the
power gains ``|h|**2`` one candidate (relay, jammer1, jammer2) needs. Fields
may be Python floats or numpy arrays of any mutually broadcastable shape, so
the same code evaluates one candidate or a (trials x candidates) block.

Noise power is 1; all powers are linear SNR-normalised values.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, fields, replace
from typing import Optional

import numpy as np

from .channel import AverageGainView, FadingRealization
from .topology import EVE, FIRST_INTERMEDIATE, S1, S2


class JammingMode(str, enum.Enum):
    CONTINUOUS = "continuous-jamming"
    NONE = "no-jamming"
    KNOWN = "known-jamming"

    @property
    def uses_jammers(self) -> bool:
        return self is not JammingMode.NONE


@dataclass(frozen=True)
class PowerConfig:
    p_source: float
    p_relay: float
    power_ratio: float = 10.0

    def __post_init__(self):
        if not self.p_source > 0 or not self.p_relay > 0:
            raise ValueError("source and relay powers must be positive")
        if not self.power_ratio >= 1:
            raise ValueError(f"power ratio L must be >= 1, got {self.power_ratio}")

    @property
    def p_jammer(self) -> float:
        return self.p_relay / self.power_ratio

    @classmethod
    def from_db(cls, ps_db: float, power_ratio: float = 10.0) -> "PowerConfig":
        """Equal source and relay power ``10**(ps_db/10)``."""
        p = 10.0 ** (ps_db / 10.0)
        return cls(p, p, power_ratio)


@dataclass(frozen=True)
class CandidateTriple:
    """Relay and optional phase-1/phase-2 jammers, as intermediate-node indices (0-based)."""

    relay: int
    jammer1: Optional[int] = None
    jammer2: Optional[int] = None

    def __post_init__(self):
        if (self.jammer1 is None) != (self.jammer2 is None):
            raise ValueError("jammers must be both present or both absent")
        if self.jammer1 is not None and self.relay in (self.jammer1, self.jammer2):
            raise ValueError("relay cannot double as a jammer")

    @property
    def has_jammers(self) -> bool:
        return self.jammer1 is not None

    def check_mode(self, mode: JammingMode) -> None:
        if mode.uses_jammers and not self.has_jammers:
            raise ValueError(f"{mode.value} needs two jammers")
        if not mode.uses_jammers and self.has_jammers:
            raise ValueError("no-jamming mode takes a relay-only candidate")


@dataclass(frozen=True)
class LinkGains:
    """Power gains for one candidate. ``x_y`` is the link x -> y."""

    s1_r: object
    s2_r: object
    r_s1: object
    r_s2: object
    j1_r: object
    j2_s1: object
    j2_s2: object
    s1_e: object
    s2_e: object
    j1_e: object
    j2_e: object
    r_e: object

    EVE_FIELDS = ("s1_e", "s2_e", "j1_e", "j2_e", "r_e")


@dataclass(frozen=True)
class GammaSet:
    """Instantaneous SNR components; ``s1_s2`` is S1's signal at S2 through the relay."""

    alpha: object
    s1_s2: object
    s2_s1: object
    j1_s1: object
    j1_s2: object
    j2_s1: object
    j2_s2: object
    r_s1: object
    r_s2: object
    s1_e: object
    s2_e: object
    j1_e: object
    j2_e: object
    s1_r_e: object
    s2_r_e: object
    j1_r_e: object
    r_e: object

    def as_dict(self) -> dict:
        return {f.name: getattr(self, f.name) for f in fields(self)}


def link_gains(power_gains: np.ndarray, relay, jammer1=None, jammer2=None) -> LinkGains:
    """Gather the gains a candidate needs from ``|h|**2`` matrices.

    ``power_gains`` has shape (..., n, n); ``relay``/``jammer*`` are
    intermediate-node indices (scalars or index arrays). Array indices are
    placed on the trailing axis, so a (T, n, n) stack with C candidates
    gives (T, C) fields. Missing jammers yield zero gains.
    """
    g = np.asarray(power_gains)
    r = np.asarray(relay) + FIRST_INTERMEDIATE

    def pick(a, b):
        out = g[..., a, b]
        if r.ndim and np.ndim(a) == 0 and np.ndim(b) == 0:
            out = out[..., None]  # keep a candidate axis for broadcasting
        return out

    if jammer1 is None:
        zero = np.zeros_like(pick(S1, r))
        j1_r = j2_s1 = j2_s2 = j1_e = j2_e = zero
    else:
        j1 = np.asarray(jammer1) + FIRST_INTERMEDIATE
        j2 = np.asarray(jammer2) + FIRST_INTERMEDIATE
        j1_r, j2_s1, j2_s2 = pick(j1, r), pick(j2, S1), pick(j2, S2)
        j1_e, j2_e = pick(j1, EVE), pick(j2, EVE)
    return LinkGains(
        s1_r=pick(S1, r),
        s2_r=pick(S2, r),
        r_s1=pick(r, S1),
        r_s2=pick(r, S2),
        j1_r=j1_r,
        j2_s1=j2_s1,
        j2_s2=j2_s2,
        s1_e=pick(S1, EVE),
        s2_e=pick(S2, EVE),
        j1_e=j1_e,
        j2_e=j2_e,
        r_e=pick(r, EVE),
    )


def with_average_eve(links: LinkGains, avg: AverageGainView, relay, jammer1=None, jammer2=None) -> LinkGains:
    """Swap every eavesdropper-link gain for its long-term mean; other links stay instantaneous."""
    m = avg.to_eve
    r = np.asarray(relay) + FIRST_INTERMEDIATE
    j1_e = j2_e = 0.0
    if jammer1 is not None:
        j1_e = m[np.asarray(jammer1) + FIRST_INTERMEDIATE]
        j2_e = m[np.asarray(jammer2) + FIRST_INTERMEDIATE]
    return replace(links, s1_e=m[S1], s2_e=m[S2], j1_e=j1_e, j2_e=j2_e, r_e=m[r])


def alpha_squared(links: LinkGains, power: PowerConfig, mode: JammingMode):
    ps, pj = power.p_source, power.p_jammer
    denom = 1.0 + links.s1_r * ps + links.s2_r * ps
    if mode.uses_jammers:
        denom = denom + links.j1_r * pj
    return 1.0 / denom


def gammas_from_links(links: LinkGains, power: PowerConfig, mode: JammingMode) -> GammaSet:
    a2 = alpha_squared(links, power, mode)
    ps, pr = power.p_source, power.p_relay
    # zero jammer power makes every jammer term vanish in no-jamming mode
    pj = power.p_jammer if mode.uses_jammers else 0.0
    a2pr = a2 * pr
    return GammaSet(
        alpha=np.sqrt(a2),
        s1_s2=a2pr * ps * links.s1_r * links.r_s2,
        s2_s1=a2pr * ps * links.s2_r * links.r_s1,
        j1_s1=a2pr * pj * links.j1_r * links.r_s1,
        j1_s2=a2pr * pj * links.j1_r * links.r_s2,
        j2_s1=pj * links.j2_s1,
        j2_s2=pj * links.j2_s2,
        r_s1=a2pr * links.r_s1,
        r_s2=a2pr * links.r_s2,
        s1_e=ps * links.s1_e,
        s2_e=ps * links.s2_e,
        j1_e=pj * links.j1_e,
        j2_e=pj * links.j2_e,
        s1_r_e=a2pr * ps * links.s1_r * links.r_e,
        s2_r_e=a2pr * ps * links.s2_r * links.r_e,
        j1_r_e=a2pr * pj * links.j1_r * links.r_e,
        r_e=a2pr * links.r_e,
    )


def destination_sinr(gammas: GammaSet, dest: int, mode: JammingMode):
    """SINR at source ``dest`` (1 or 2) for the message of the other source."""
    if dest == 1:
        sig, j1, j2, r = gammas.s2_s1, gammas.j1_s1, gammas.j2_s1, gammas.r_s1
    elif dest == 2:
        sig, j1, j2, r = gammas.s1_s2, gammas.j1_s2, gammas.j2_s2, gammas.r_s2
    else:
        raise ValueError("dest must be 1 or 2")
    if mode is JammingMode.CONTINUOUS:
        return sig / (j1 + j2 + r + 1.0)
    return sig / (r + 1.0)


def eavesdropper_sinr(gammas: GammaSet, victim: int):
    """MRC-combined SINR at E for the message of source ``victim`` (1 or 2).

    Jammer terms are zero in no-jamming gammas, so one expression covers
    every mode.
    """
    if victim == 1:
        own_d, other_d, own_r, other_r = gammas.s1_e, gammas.s2_e, gammas.s1_r_e, gammas.s2_r_e
    elif victim == 2:
        own_d, other_d, own_r, other_r = gammas.s2_e, gammas.s1_e, gammas.s2_r_e, gammas.s1_r_e
    else:
        raise ValueError("victim must be 1 or 2")
    phase1 = own_d / (other_d + gammas.j1_e + 1.0)
    phase2 = own_r / (other_r + gammas.j1_r_e + gammas.j2_e + gammas.r_e + 1.0)
    return phase1 + phase2


# -- single-candidate convenience API ---------------------------------------


def _links(realization: FadingRealization, triple: CandidateTriple, mode: JammingMode) -> LinkGains:
    triple.check_mode(mode)
    K = realization.n_nodes - FIRST_INTERMEDIATE
    for k in (triple.relay, triple.jammer1, triple.jammer2):
        if k is not None and not 0 <= k < K:
            raise ValueError(f"intermediate index {k} out of range for K={K}")
    return link_gains(realization.power_gains, triple.relay, triple.jammer1, triple.jammer2)


def amplification_gain(realization, power: PowerConfig, triple: CandidateTriple, mode: JammingMode) -> float:
    links = _links(realization, triple, mode)
    return float(np.sqrt(alpha_squared(links, power, mode)))


def component_snrs(realization, power: PowerConfig, triple: CandidateTriple, mode: JammingMode) -> GammaSet:
    return gammas_from_links(_links(realization, triple, mode), power, mode)


def eavesdropper_sinr_instant(realization, power, triple, victim: int, mode: JammingMode) -> float:
    return float(eavesdropper_sinr(component_snrs(realization, power, triple, mode), victim))


def eavesdropper_sinr_average(
    realization, avg: AverageGainView, power, triple, victim: int, mode: JammingMode
) -> float:
    """Eavesdropper SINR with every E-link gain replaced by its mean.

    Uses the victim's own relayed term in the second-branch numerator,
    matching the instantaneous expression.
    """
    links = with_average_eve(_links(realization, triple, mode), avg, triple.relay, triple.jammer1, triple.jammer2)
    return float(eavesdropper_sinr(gammas_from_links(links, power, mode), victim))
