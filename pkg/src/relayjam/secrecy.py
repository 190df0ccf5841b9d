"""Instantaneous secrecy rates from SINR pairs (bits per channel use)."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class SecrecyRates:
    rate_s1: float
    rate_s2: float

    @property
    def sum(self) -> float:
        return self.rate_s1 + self.rate_s2


def _check_nonneg(*values):
    for v in values:
        if np.any(np.asarray(v) < 0):
            raise ValueError("SINR values must be nonnegative")


def secrecy_rate(gamma_dest, gamma_eve):
    """``max(0, log2(1 + gamma_dest)/2 - log2(1 + gamma_eve)/2)``; works elementwise on arrays."""
    _check_nonneg(gamma_dest, gamma_eve)
    # log1p keeps tiny SINRs from rounding to a zero rate
    raw = (np.log1p(np.asarray(gamma_dest, dtype=float)) - np.log1p(np.asarray(gamma_eve, dtype=float))) / (
        2.0 * np.log(2.0)
    )
    out = np.maximum(raw, 0.0)
    return float(out) if out.ndim == 0 else out


def sum_secrecy_rate(gamma1, gamma2, gamma_e1, gamma_e2) -> SecrecyRates:
    """Pair each destination SINR with the eavesdropper SINR of the same message.

    ``gamma1`` is S2's message at S1, so it is weighed against ``gamma_e2``
    (E intercepting S2), and vice versa.
    """
    return SecrecyRates(secrecy_rate(gamma1, gamma_e2), secrecy_rate(gamma2, gamma_e1))
