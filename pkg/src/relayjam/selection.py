"""Relay/jammer selection schemes by exhaustive search over candidates.

Every scheme scores all candidates with the product form of its objective,
``((1+G1)/(1+GE2)) * ((1+G2)/(1+GE1))`` for sum-rate schemes, the smaller of
the two factors for max-min schemes and ``(1+G1)(1+G2)`` for CS, and keeps the
first maximiser in candidate order (relay, then jammer1, then jammer2).
Reported rates are always the true clipped rates under instantaneous
knowledge with the scheme's physical jamming mode.

:class:`BatchEvaluator` does the work for a (trials x candidates) block and
shares SINR arrays between schemes; the scalar functions wrap it.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import NamedTuple, Optional, Sequence

import numpy as np

from .channel import AverageGainView, FadingRealization
from .secrecy import SecrecyRates, secrecy_rate
from .sinr import (
    CandidateTriple,
    JammingMode,
    PowerConfig,
    destination_sinr,
    eavesdropper_sinr,
    gammas_from_links,
    link_gains,
    with_average_eve,
)
from .topology import FIRST_INTERMEDIATE


class SchemeId(str, enum.Enum):
    CS = "CS"
    OS = "OS"
    SS = "SS"
    OS_MSISR = "OS-MSISR"
    OS_MMISR = "OS-MMISR"
    OSW = "OSW"
    SS_MSISR = "SS-MSISR"
    SS_MMISR = "SS-MMISR"
    SSW = "SSW"
    OSKJ = "OSKJ"

    @classmethod
    def parse(cls, name) -> "SchemeId":
        if isinstance(name, cls):
            return name
        try:
            return cls(str(name).strip().upper())
        except ValueError:
            raise ValueError(f"unknown scheme {name!r}") from None


class SchemeSpec(NamedTuple):
    average_eve: bool  # eavesdropper links known only on average
    mode: JammingMode
    objective: str  # "cs", "sum", "maxmin" or "switch"


SCHEMES = {
    SchemeId.CS: SchemeSpec(False, JammingMode.NONE, "cs"),
    SchemeId.OS: SchemeSpec(False, JammingMode.NONE, "sum"),
    SchemeId.SS: SchemeSpec(True, JammingMode.NONE, "sum"),
    SchemeId.OS_MSISR: SchemeSpec(False, JammingMode.CONTINUOUS, "sum"),
    SchemeId.OS_MMISR: SchemeSpec(False, JammingMode.CONTINUOUS, "maxmin"),
    SchemeId.SS_MSISR: SchemeSpec(True, JammingMode.CONTINUOUS, "sum"),
    SchemeId.SS_MMISR: SchemeSpec(True, JammingMode.CONTINUOUS, "maxmin"),
    SchemeId.OSKJ: SchemeSpec(False, JammingMode.KNOWN, "sum"),
    SchemeId.OSW: SchemeSpec(False, JammingMode.CONTINUOUS, "switch"),
    SchemeId.SSW: SchemeSpec(True, JammingMode.CONTINUOUS, "switch"),
}

SWITCH_BRANCHES = {
    SchemeId.OSW: (SchemeId.OS_MSISR, SchemeId.OS),
    SchemeId.SSW: (SchemeId.SS_MSISR, SchemeId.SS),
}


class InsufficientNodesError(ValueError):
    pass


def min_nodes(scheme) -> int:
    spec = SCHEMES[SchemeId.parse(scheme)]
    return 2 if spec.mode.uses_jammers else 1


def candidate_arrays(K: int, jamming: bool, allow_equal_jammers: bool = True):
    """Index arrays ``(relay, jammer1, jammer2)`` in lexicographic order; jammers None without jamming."""
    need = 2 if jamming else 1
    if K < need:
        raise InsufficientNodesError(f"need K >= {need}, got K={K}")
    if not jamming:
        return np.arange(K), None, None
    if not allow_equal_jammers and K < 3:
        raise InsufficientNodesError(f"distinct jammers need K >= 3, got K={K}")
    rows = [
        (r, a, b)
        for r in range(K)
        for a in range(K)
        for b in range(K)
        if a != r and b != r and (allow_equal_jammers or a != b)
    ]
    arr = np.array(rows, dtype=np.intp)
    return arr[:, 0], arr[:, 1], arr[:, 2]


def candidate_triples(K: int, jamming: bool, allow_equal_jammers: bool = True) -> list[CandidateTriple]:
    r, j1, j2 = candidate_arrays(K, jamming, allow_equal_jammers)
    if j1 is None:
        return [CandidateTriple(int(k)) for k in r]
    return [CandidateTriple(int(a), int(b), int(c)) for a, b, c in zip(r, j1, j2)]


def product_factors(g1, g2, ge1, ge2):
    """Per-message factors ``(1+G1)/(1+GE2)`` and ``(1+G2)/(1+GE1)``."""
    return (1.0 + g1) / (1.0 + ge2), (1.0 + g2) / (1.0 + ge1)


@dataclass
class BatchOutcome:
    """Per-trial selection results; jammer indices are -1 when no jammer is used."""

    relay: np.ndarray
    jammer1: np.ndarray
    jammer2: np.ndarray
    rate_s1: np.ndarray
    rate_s2: np.ndarray
    objective: np.ndarray
    jamming_active: np.ndarray

    @property
    def sum_rate(self) -> np.ndarray:
        return self.rate_s1 + self.rate_s2


class BatchEvaluator:
    """Score every candidate of every trial in a stack of realizations at one power point.

    ``power_gains`` is a (T, n, n) stack of ``|h|**2`` matrices.
    """

    def __init__(
        self,
        power_gains: np.ndarray,
        avg: AverageGainView,
        power: PowerConfig,
        allow_equal_jammers: bool = True,
        only: Optional[CandidateTriple] = None,
    ):
        g = np.asarray(power_gains, dtype=float)
        if g.ndim != 3:
            raise ValueError("power_gains must have shape (T, n, n)")
        self.g = g
        self.avg = avg
        self.power = power
        self.K = g.shape[1] - FIRST_INTERMEDIATE
        self.allow_equal_jammers = allow_equal_jammers
        self.only = only
        self._sinr_cache: dict = {}
        self._outcomes: dict = {}

    # candidates and link gains

    def candidates(self, jamming: bool):
        key = ("cand", jamming)
        if key not in self._sinr_cache:
            if self.only is not None:
                c = self.only
                self._sinr_cache[key] = (
                    np.array([c.relay]),
                    None if c.jammer1 is None else np.array([c.jammer1]),
                    None if c.jammer2 is None else np.array([c.jammer2]),
                )
            else:
                self._sinr_cache[key] = candidate_arrays(self.K, jamming, self.allow_equal_jammers)
        return self._sinr_cache[key]

    def _links(self, jamming: bool, average_eve: bool):
        key = ("links", jamming, average_eve)
        if key not in self._sinr_cache:
            r, j1, j2 = self.candidates(jamming)
            links = link_gains(self.g, r, j1, j2)
            if average_eve:
                links = with_average_eve(links, self.avg, r, j1, j2)
            self._sinr_cache[key] = links
        return self._sinr_cache[key]

    def sinrs(self, mode: JammingMode, average_eve: bool = False):
        """``(G1, G2, GE1, GE2)`` arrays of shape (T, C) for a mode and knowledge set."""
        key = ("sinr", mode, average_eve)
        if key in self._sinr_cache:
            return self._sinr_cache[key]
        jamming = mode.uses_jammers
        gam = gammas_from_links(self._links(jamming, False), self.power, mode)
        g1 = destination_sinr(gam, 1, mode)
        g2 = destination_sinr(gam, 2, mode)
        if average_eve:
            gam = gammas_from_links(self._links(jamming, True), self.power, mode)
        out = (g1, g2, eavesdropper_sinr(gam, 1), eavesdropper_sinr(gam, 2))
        self._sinr_cache[key] = out
        return out

    def true_rates(self, mode: JammingMode):
        key = ("rates", mode)
        if key not in self._sinr_cache:
            g1, g2, ge1, ge2 = self.sinrs(mode, False)
            self._sinr_cache[key] = (secrecy_rate(g1, ge2), secrecy_rate(g2, ge1))
        return self._sinr_cache[key]

    def metric(self, scheme) -> np.ndarray:
        scheme = SchemeId.parse(scheme)
        spec = SCHEMES[scheme]
        if spec.objective == "switch":
            raise ValueError(f"{scheme.value} is a switching scheme with no per-candidate metric")
        key = ("metric", scheme)
        if key in self._sinr_cache:
            return self._sinr_cache[key]
        g1, g2, ge1, ge2 = self.sinrs(spec.mode, spec.average_eve)
        if spec.objective == "cs":
            m = (1.0 + g1) * (1.0 + g2)
        else:
            f1, f2 = product_factors(g1, g2, ge1, ge2)
            m = f1 * f2 if spec.objective == "sum" else np.minimum(f1, f2)
        self._sinr_cache[key] = m
        return m

    # selection

    def select(self, scheme) -> BatchOutcome:
        scheme = SchemeId.parse(scheme)
        if scheme in self._outcomes:
            return self._outcomes[scheme]
        spec = SCHEMES[scheme]
        if spec.objective == "switch":
            out = self._switch(scheme)
        else:
            m = self.metric(scheme)
            best = np.argmax(m, axis=1)  # first maximiser wins ties
            rows = np.arange(m.shape[0])
            r, j1, j2 = self.candidates(spec.mode.uses_jammers)
            rs1, rs2 = self.true_rates(spec.mode)
            none = np.full(best.shape, -1, dtype=np.intp)
            out = BatchOutcome(
                relay=r[best],
                jammer1=none if j1 is None else j1[best],
                jammer2=none if j2 is None else j2[best],
                rate_s1=rs1[rows, best],
                rate_s2=rs2[rows, best],
                objective=m[rows, best],
                jamming_active=np.full(best.shape, spec.mode.uses_jammers),
            )
        self._outcomes[scheme] = out
        return out

    def _switch(self, scheme: SchemeId) -> BatchOutcome:
        jam_id, plain_id = SWITCH_BRANCHES[scheme]
        jam, plain = self.select(jam_id), self.select(plain_id)
        if scheme is SchemeId.OSW:
            jam_score, plain_score = jam.sum_rate, plain.sum_rate
        else:
            jam_score, plain_score = jam.objective, plain.objective
        use_jam = jam_score > plain_score

        def pick(a, b):
            return np.where(use_jam, a, b)

        return BatchOutcome(
            relay=pick(jam.relay, plain.relay),
            jammer1=pick(jam.jammer1, plain.jammer1),
            jammer2=pick(jam.jammer2, plain.jammer2),
            rate_s1=pick(jam.rate_s1, plain.rate_s1),
            rate_s2=pick(jam.rate_s2, plain.rate_s2),
            objective=pick(jam_score, plain_score),
            jamming_active=use_jam,
        )


# -- single-realization API --------------------------------------------------


@dataclass(frozen=True)
class SelectionOutcome:
    triple: CandidateTriple
    rates: SecrecyRates
    objective_value: float
    jamming_active: bool


def _evaluator(realization: FadingRealization, avg, power, allow_equal_jammers=True) -> BatchEvaluator:
    return BatchEvaluator(realization.power_gains[None], avg, power, allow_equal_jammers)


def _require_k(scheme: SchemeId, K: int):
    need = min_nodes(scheme)
    if K < need:
        raise InsufficientNodesError(f"{scheme.value} needs K >= {need}, got K={K}")


def scheme_metric(
    scheme, realization: FadingRealization, avg: AverageGainView, power: PowerConfig, candidate: CandidateTriple
) -> float:
    """Value of a scheme's selection objective for one candidate."""
    scheme = SchemeId.parse(scheme)
    spec = SCHEMES[scheme]
    if spec.objective == "switch":
        raise ValueError(f"{scheme.value} has no per-candidate metric")
    candidate.check_mode(spec.mode)
    ev = BatchEvaluator(realization.power_gains[None], avg, power, only=candidate)
    return float(ev.metric(scheme)[0, 0])


def metric_from_sinrs(scheme, g1: float, g2: float, ge1: float = 0.0, ge2: float = 0.0) -> float:
    """Score a candidate directly from its four SINRs (the eavesdropper ones are ignored by CS)."""
    spec = SCHEMES[SchemeId.parse(scheme)]
    if spec.objective == "cs":
        return (1.0 + g1) * (1.0 + g2)
    f1, f2 = product_factors(g1, g2, ge1, ge2)
    if spec.objective == "sum":
        return f1 * f2
    if spec.objective == "maxmin":
        return min(f1, f2)
    raise ValueError("switching schemes have no per-candidate metric")


def _outcome(out: BatchOutcome) -> SelectionOutcome:
    j1, j2 = int(out.jammer1[0]), int(out.jammer2[0])
    triple = CandidateTriple(int(out.relay[0]), None if j1 < 0 else j1, None if j2 < 0 else j2)
    return SelectionOutcome(
        triple=triple,
        rates=SecrecyRates(float(out.rate_s1[0]), float(out.rate_s2[0])),
        objective_value=float(out.objective[0]),
        jamming_active=bool(out.jamming_active[0]),
    )


def select(
    scheme,
    realization: FadingRealization,
    avg: AverageGainView,
    power: PowerConfig,
    allow_equal_jammers: bool = True,
) -> SelectionOutcome:
    scheme = SchemeId.parse(scheme)
    _require_k(scheme, realization.n_nodes - FIRST_INTERMEDIATE)
    return _outcome(_evaluator(realization, avg, power, allow_equal_jammers).select(scheme))


def select_switching(
    variant,
    realization: FadingRealization,
    avg: AverageGainView,
    power: PowerConfig,
    allow_equal_jammers: bool = True,
) -> SelectionOutcome:
    """Hybrid scheme: pick the jamming or non-jamming selection per realization.

    OSW compares the true clipped sum rates of the OS-MSISR and OS choices and
    keeps OS on ties; SSW compares the average-knowledge product metrics of the
    SS-MSISR and SS choices.
    """
    variant = SchemeId.parse(variant)
    if variant not in SWITCH_BRANCHES:
        raise ValueError(f"{variant.value} is not a switching scheme")
    return select(variant, realization, avg, power, allow_equal_jammers)


def select_many(
    schemes: Sequence, realization: FadingRealization, avg, power, allow_equal_jammers: bool = True
) -> dict:
    """Run several schemes on one realization, sharing SINR evaluation."""
    ev = _evaluator(realization, avg, power, allow_equal_jammers)
    out = {}
    for s in schemes:
        s = SchemeId.parse(s)
        _require_k(s, ev.K)
        out[s] = _outcome(ev.select(s))
    return out


def outcome_triple(out: BatchOutcome, t: int) -> Optional[CandidateTriple]:
    j1, j2 = int(out.jammer1[t]), int(out.jammer2[t])
    return CandidateTriple(int(out.relay[t]), None if j1 < 0 else j1, None if j2 < 0 else j2)
