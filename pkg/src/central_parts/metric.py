"""Hop distances, eccentricity, distance sums and block decomposition."""

from __future__ import annotations

from collections import deque
from collections.abc import Iterable
from dataclasses import dataclass

import numpy as np

from .graph import Graph, NotConnectedError

UNREACHABLE = -1


def bfs_distances(g: Graph, s: int) -> list[int]:
    """Hop distance from ``s``; :data:`UNREACHABLE` for other components."""
    if not 0 <= s < g.n:
        raise IndexError(f"vertex index {s} out of range for n={g.n}")
    dist = [UNREACHABLE] * g.n
    dist[s] = 0
    queue = deque([s])
    while queue:
        v = queue.popleft()
        for u in g.adj[v]:
            if dist[u] == UNREACHABLE:
                dist[u] = dist[v] + 1
                queue.append(u)
    return dist


@dataclass(frozen=True)
class DistanceMatrix:
    dist: np.ndarray  # int64, UNREACHABLE marks infinite entries

    @property
    def n(self) -> int:
        return self.dist.shape[0]

    @property
    def connected(self) -> bool:
        return bool((self.dist != UNREACHABLE).all())

    def __getitem__(self, key: tuple[int, int]) -> int:
        return int(self.dist[key])

    def require_connected(self) -> None:
        if not self.connected:
            raise NotConnectedError("graph not connected")


def apsp(g: Graph) -> DistanceMatrix:
    dist = np.array([bfs_distances(g, s) for s in range(g.n)], dtype=np.int64)
    dist = dist.reshape(g.n, g.n)
    dist.setflags(write=False)
    return DistanceMatrix(dist)


def eccentricity(dm: DistanceMatrix, v: int) -> int:
    dm.require_connected()
    return int(dm.dist[v].max())


def distance_sum(dm: DistanceMatrix, v: int) -> int:
    dm.require_connected()
    return int(dm.dist[v].sum())


@dataclass(frozen=True)
class BlockDecomposition:
    """Vertex sets of the blocks (bridges included as K2) and the cut vertices."""

    blocks: tuple[frozenset[int], ...]
    cut_vertices: frozenset[int]

    def block_of(self, vertices: Iterable[int]) -> int | None:
        """Index of the first block containing all of ``vertices``, if any."""
        s = set(vertices)
        for k, b in enumerate(self.blocks):
            if s <= b:
                return k
        return None


def blocks(g: Graph) -> BlockDecomposition:
    """Biconnected decomposition by the DFS low-point method.

    Iterative to stay clear of the recursion limit.  Raises
    :class:`NotConnectedError` on disconnected input.
    """
    g.require_connected()
    n = g.n
    if n == 1:
        return BlockDecomposition((frozenset({0}),), frozenset())

    disc = [-1] * n
    low = [0] * n
    found: list[frozenset[int]] = []
    cuts: set[int] = set()
    edge_stack: list[tuple[int, int]] = []
    clock = 0

    root = 0
    disc[root] = low[root] = clock
    clock += 1
    root_children = 0
    # frames: (vertex, parent, iterator position)
    stack = [(root, -1, 0)]
    while stack:
        v, parent, pos = stack[-1]
        nbrs = g.adj[v]
        if pos < len(nbrs):
            stack[-1] = (v, parent, pos + 1)
            u = nbrs[pos]
            if disc[u] == -1:
                disc[u] = low[u] = clock
                clock += 1
                edge_stack.append((v, u))
                if v == root:
                    root_children += 1
                stack.append((u, v, 0))
            elif u != parent and disc[u] < disc[v]:
                edge_stack.append((v, u))
                low[v] = min(low[v], disc[u])
            continue
        stack.pop()
        if parent == -1:
            continue
        low[parent] = min(low[parent], low[v])
        if low[v] >= disc[parent]:
            if parent != root:
                cuts.add(parent)
            comp: set[int] = set()
            while True:
                a, b = edge_stack.pop()
                comp.update((a, b))
                if (a, b) == (parent, v):
                    break
            found.append(frozenset(comp))
    if root_children > 1:
        cuts.add(root)
    order = sorted(found, key=lambda b: sorted(b))
    return BlockDecomposition(tuple(order), frozenset(cuts))


def contained_in_some_block(bd: BlockDecomposition, s: Iterable[int]) -> bool:
    return bd.block_of(s) is not None
