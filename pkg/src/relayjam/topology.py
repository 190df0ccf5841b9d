"""Node geometry, path-loss link variances and the canonical scenarios.

Nodes are addressed by a global integer index: ``S1`` (0), ``S2`` (1),
``EVE`` (2), followed by the ``K`` intermediate nodes at ``3 .. K+2``.
The string aliases ``"S1"``, ``"S2"``, ``"E"`` and ``"I<k>"`` (k-th
intermediate, zero based) are accepted wherever a node id is expected.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence, Union

import numpy as np

S1, S2, EVE = 0, 1, 2
FIRST_INTERMEDIATE = 3

SCENARIOS = ("sparse-random", "cluster-near-s1", "cluster-near-eve", "eve-near-s1", "custom")

CLUSTER_RADIUS = 0.03
CLUSTER_CENTERS = {
    "cluster-near-s1": (0.1, 0.9),
    "cluster-near-eve": (0.5, 0.1),
}

NodeId = Union[int, str]


class TopologyError(ValueError):
    """Invalid node id or degenerate geometry."""


@dataclass(frozen=True)
class NodePosition:
    x: float
    y: float

    def __post_init__(self):
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise TopologyError(f"non-finite coordinates ({self.x}, {self.y})")

    def as_tuple(self) -> tuple[float, float]:
        return (self.x, self.y)


def _pos(p) -> NodePosition:
    if isinstance(p, NodePosition):
        return p
    x, y = p
    return NodePosition(float(x), float(y))


@dataclass(frozen=True)
class NetworkTopology:
    """Positions of both sources, the eavesdropper and ``K`` intermediate nodes.

    Construction does not reject degenerate layouts; call :func:`validate`
    (or any operation that needs a link variance) to find out.
    """

    s1: NodePosition
    s2: NodePosition
    eve: NodePosition
    intermediates: tuple[NodePosition, ...]
    path_loss_exponent: float = 3.0
    _coords: np.ndarray = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "s1", _pos(self.s1))
        object.__setattr__(self, "s2", _pos(self.s2))
        object.__setattr__(self, "eve", _pos(self.eve))
        object.__setattr__(self, "intermediates", tuple(_pos(p) for p in self.intermediates))
        object.__setattr__(self, "path_loss_exponent", float(self.path_loss_exponent))
        coords = np.array([p.as_tuple() for p in self.nodes], dtype=float).reshape(-1, 2)
        coords.setflags(write=False)
        object.__setattr__(self, "_coords", coords)

    @property
    def K(self) -> int:
        return len(self.intermediates)

    @property
    def n_nodes(self) -> int:
        return FIRST_INTERMEDIATE + self.K

    @property
    def nodes(self) -> tuple[NodePosition, ...]:
        return (self.s1, self.s2, self.eve) + self.intermediates

    @property
    def coords(self) -> np.ndarray:
        """(n_nodes, 2) read-only coordinate array in global index order."""
        return self._coords

    def node_index(self, node: NodeId) -> int:
        return resolve_node(self, node)

    def variance_matrix(self) -> np.ndarray:
        """Symmetric matrix of ``d**-beta`` with a zero diagonal."""
        problems = validate(self)
        if problems:
            raise TopologyError("; ".join(problems))
        diff = self._coords[:, None, :] - self._coords[None, :, :]
        d = np.hypot(diff[..., 0], diff[..., 1])
        np.fill_diagonal(d, np.inf)
        with np.errstate(over="ignore"):
            var = d ** (-self.path_loss_exponent)
        if not np.all(np.isfinite(var)):
            raise TopologyError("nodes too close: link variance overflows")
        return var


def intermediate_node(k: int) -> int:
    """Global index of the k-th intermediate node (zero based)."""
    return FIRST_INTERMEDIATE + k


def resolve_node(topology: NetworkTopology, node: NodeId) -> int:
    if isinstance(node, str):
        name = node.strip().upper()
        if name == "S1":
            idx = S1
        elif name == "S2":
            idx = S2
        elif name in ("E", "EVE"):
            idx = EVE
        elif name.startswith("I") and name[1:].isdigit():
            idx = intermediate_node(int(name[1:]))
        else:
            raise TopologyError(f"unknown node id {node!r}")
    elif isinstance(node, (int, np.integer)) and not isinstance(node, bool):
        idx = int(node)
    else:
        raise TopologyError(f"unknown node id {node!r}")
    if not 0 <= idx < topology.n_nodes:
        raise TopologyError(f"node id {node!r} out of range for K={topology.K}")
    return idx


def distance(topology: NetworkTopology, a: NodeId, b: NodeId) -> float:
    ia, ib = resolve_node(topology, a), resolve_node(topology, b)
    if ia == ib:
        raise TopologyError("distance requires two distinct nodes")
    pa, pb = topology.nodes[ia], topology.nodes[ib]
    return math.hypot(pa.x - pb.x, pa.y - pb.y)


def link_variance(topology: NetworkTopology, a: NodeId, b: NodeId) -> float:
    """Mean power gain ``d(a, b) ** -beta`` of the Rayleigh link between a and b."""
    d = distance(topology, a, b)
    if d == 0.0:
        raise TopologyError(f"nodes {a!r} and {b!r} coincide")
    try:
        return d ** (-topology.path_loss_exponent)
    except OverflowError:
        raise TopologyError(f"nodes {a!r} and {b!r} are too close: variance overflows") from None


def validate(topology: NetworkTopology) -> list[str]:
    """Return a list of human-readable violations; empty means the topology is usable."""
    problems = []
    if topology.K < 1:
        problems.append("empty intermediate set")
    if not topology.path_loss_exponent > 0:
        problems.append("non-positive path-loss exponent")
    seen: dict[tuple[float, float], int] = {}
    for i, p in enumerate(topology.nodes):
        key = p.as_tuple()
        if key in seen:
            problems.append(f"coincident nodes {seen[key]} and {i} at {key}")
        else:
            seen[key] = i
    return problems


def preset_scenario(
    name: str,
    K: int = 8,
    placement_seed: int = 0,
    beta: float = 3.0,
    cluster_radius: float = CLUSTER_RADIUS,
) -> NetworkTopology:
    """Build one of the canonical layouts in the unit square.

    ``sparse-random`` and ``eve-near-s1`` scatter the intermediates uniformly over
    the square; the two cluster scenarios place them uniformly in a disc of
    radius ``cluster_radius`` next to S1 or E. Placement depends only on
    ``(name, K, placement_seed)``.
    """
    if K < 1:
        raise TopologyError("K must be at least 1")
    if name == "custom":
        raise TopologyError("custom scenarios need explicit coordinates")
    if name not in SCENARIOS:
        raise TopologyError(f"unknown scenario {name!r}")
    if not cluster_radius > 0:
        raise TopologyError("cluster radius must be positive")
    rng = np.random.default_rng(placement_seed)
    s1, s2 = (0.0, 1.0), (1.0, 1.0)
    eve = (0.0, 0.5) if name == "eve-near-s1" else (0.5, 0.0)
    if name in CLUSTER_CENTERS:
        cx, cy = CLUSTER_CENTERS[name]
        # sqrt for uniform density over the disc area
        r = cluster_radius * np.sqrt(rng.random(K))
        theta = 2.0 * np.pi * rng.random(K)
        pts = np.column_stack([cx + r * np.cos(theta), cy + r * np.sin(theta)])
    else:
        pts = rng.random((K, 2))
    return NetworkTopology(s1, s2, eve, tuple(map(tuple, pts)), beta)


def custom_topology(
    s1: Sequence[float],
    s2: Sequence[float],
    eve: Sequence[float],
    intermediates: Sequence[Sequence[float]],
    beta: float = 3.0,
) -> NetworkTopology:
    topo = NetworkTopology(s1, s2, eve, tuple(tuple(p) for p in intermediates), beta)
    problems = validate(topo)
    if problems:
        raise TopologyError("; ".join(problems))
    return topo
