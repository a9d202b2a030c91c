"""Supergraph whose characteristic center is a prescribed vertex set."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .graph import Graph, GraphError

NEW_LABELS = ("u1", "u2", "u3", "u4")


@dataclass(frozen=True)
class GchResult:
    """The supergraph plus its known algebraic connectivity and Fiedler vector.

    ``expected_fiedler`` is unnormalised, ordered like ``graph``:
    ``u1, u2, v_1..v_n, u3, u4``.
    """

    graph: Graph
    expected_mu: float
    expected_fiedler: np.ndarray

    @property
    def original(self) -> range:
        """Indices of the input graph's vertices inside ``graph``."""
        return range(2, self.graph.n - 2)


def gch_mu(n: int) -> float:
    return (n + 2 - math.sqrt(n * n + 4)) / 2


def build_gch(g: Graph) -> GchResult:
    """Hang the path ``u1-u2`` and ``u3-u4`` off every vertex of ``g``.

    ``u2`` and ``u3`` are joined to all of ``g``; ``g`` may be disconnected.
    The result is connected, its Fiedler value is simple and every Fiedler
    vector vanishes exactly on ``g``.
    """
    n = g.n
    if n < 1:
        raise GraphError("G_ch needs at least one vertex")
    clash = set(NEW_LABELS) & set(g.labels)
    if clash:
        raise GraphError(f"labels {sorted(clash)} are reserved for G_ch")
    u1, u2, u3, u4 = NEW_LABELS
    labels = [u1, u2, *g.labels, u3, u4]
    edges = [(g.labels[i], g.labels[j]) for i, j in g.edges()]
    edges += [(u1, u2), (u3, u4)]
    edges += [(u2, v) for v in g.labels] + [(u3, v) for v in g.labels]
    lam = gch_mu(n)
    fiedler = np.array([1.0, 1.0 - lam, *([0.0] * n), lam - 1.0, -1.0])
    return GchResult(Graph.from_edges(labels, edges), lam, fiedler)
