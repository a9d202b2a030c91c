"""Center, median, tree centroid and security center."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graph import Graph
from .metric import DistanceMatrix, apsp


def _argmin(values: np.ndarray) -> frozenset[int]:
    return frozenset(np.flatnonzero(values == values.min()).tolist())


def _argmax(values: np.ndarray) -> frozenset[int]:
    return frozenset(np.flatnonzero(values == values.max()).tolist())


def _connected_apsp(g: Graph, dm: DistanceMatrix | None) -> DistanceMatrix:
    if dm is None:
        dm = apsp(g)
    if g.n == 0:
        raise ValueError("empty graph")
    dm.require_connected()
    return dm


def eccentricities(g: Graph, dm: DistanceMatrix | None = None) -> np.ndarray:
    return _connected_apsp(g, dm).dist.max(axis=1)


def distance_sums(g: Graph, dm: DistanceMatrix | None = None) -> np.ndarray:
    return _connected_apsp(g, dm).dist.sum(axis=1)


def center(g: Graph, dm: DistanceMatrix | None = None) -> frozenset[int]:
    """Vertices of minimum eccentricity."""
    return _argmin(eccentricities(g, dm))


def median(g: Graph, dm: DistanceMatrix | None = None) -> frozenset[int]:
    """Vertices of minimum total distance."""
    return _argmin(distance_sums(g, dm))


def branch_weights(t: Graph) -> list[int]:
    """Largest branch (in edges) at every vertex of the tree ``t``."""
    t.require_tree()
    n = t.n
    parent = [-1] * n
    order = [0]
    seen = [False] * n
    seen[0] = True
    for v in order:
        for u in t.adj[v]:
            if not seen[u]:
                seen[u] = True
                parent[u] = v
                order.append(u)
    size = [1] * n
    for v in reversed(order[1:]):
        size[parent[v]] += size[v]
    weights = []
    for v in range(n):
        # a branch through neighbour u has as many edges as u's side has vertices
        parts = [size[u] for u in t.adj[v] if parent[u] == v]
        if parent[v] != -1:
            parts.append(n - size[v])
        weights.append(max(parts, default=0))
    return weights


def branch_weight(t: Graph, v: int) -> int:
    return branch_weights(t)[v]


def centroid_tree(t: Graph) -> frozenset[int]:
    return _argmin(np.array(branch_weights(t)))


@dataclass(frozen=True)
class SecurityTable:
    """``g[u, v] = |V_uv| - |V_vu|`` and per-vertex security numbers ``s``."""

    g: np.ndarray
    s: np.ndarray


def security_table(g: Graph, dm: DistanceMatrix | None = None) -> SecurityTable:
    dm = _connected_apsp(g, dm)
    d = dm.dist
    # gain[u, v] = sum over x of sign(d(x, v) - d(x, u))
    gain = np.sign(d[:, None, :] - d[:, :, None]).sum(axis=0)
    if g.n == 1:
        return SecurityTable(gain, np.zeros(1, dtype=gain.dtype))
    masked = gain + np.diag(np.full(g.n, np.iinfo(gain.dtype).max // 2))
    return SecurityTable(gain, masked.min(axis=1))


def security_center(g: Graph, dm: DistanceMatrix | None = None) -> frozenset[int]:
    """Vertices of maximum security number; the lone vertex when ``n == 1``."""
    return _argmax(security_table(g, dm).s)
