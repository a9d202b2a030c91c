"""Connected-subgraph counts, subgraph core and core vertices.

Counts are exact Python integers.  Two readings of "connected subgraph"
are supported: vertex subsets inducing a connected subgraph
(:attr:`CountMode.INDUCED`), and connected (vertex set, edge subset)
pairs (:attr:`CountMode.EDGE`).  They agree on trees.
"""

from __future__ import annotations

import enum
import os
from collections.abc import Iterable, Iterator

import numpy as np

from .graph import Graph

INDUCED_CAP = 24
EDGE_CAP = 14
CAP_ENV = "CENTRAL_PARTS_CAP"


class CountMode(enum.Enum):
    INDUCED = "induced"
    EDGE = "edge"


class CapExceededError(RuntimeError):
    """Graph too large for exhaustive counting in the requested mode."""


def caps() -> dict[CountMode, int]:
    """Vertex caps per mode.

    ``CENTRAL_PARTS_CAP=N`` raises both caps to ``N``; ``N,M`` sets the
    induced and edge caps separately.  Counting is exponential, so large
    overrides can run for a very long time.
    """
    out = {CountMode.INDUCED: INDUCED_CAP, CountMode.EDGE: EDGE_CAP}
    raw = os.environ.get(CAP_ENV, "").strip()
    if raw:
        try:
            vals = [int(x) for x in raw.split(",")]
        except ValueError:
            raise ValueError(f"{CAP_ENV} must be N or N,M, got {raw!r}") from None
        if len(vals) == 1:
            vals = vals * 2
        if len(vals) != 2:
            raise ValueError(f"{CAP_ENV} must be N or N,M, got {raw!r}")
        out = {CountMode.INDUCED: vals[0], CountMode.EDGE: vals[1]}
    return out


def check_cap(g: Graph, mode: CountMode) -> None:
    cap = caps()[mode]
    if g.n > cap:
        raise CapExceededError(
            f"{mode.value} counting is capped at n <= {cap} (graph has n = {g.n}); "
            f"override with {CAP_ENV}"
        )


def _mask(vertices: Iterable[int]) -> int:
    out = 0
    for v in vertices:
        out |= 1 << v
    return out


def _members(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def _grow(nbr: list[int], root: int, excluded: int, required: int = 0) -> Iterator[int]:
    """Connected vertex sets containing ``root``, avoiding ``excluded``.

    Each frontier vertex is decided exactly once (taken or banned), so
    every connected superset of ``{root}`` comes out exactly once.  Sets
    missing a ``required`` vertex are pruned as soon as it is banned.
    """
    start = 1 << root
    stack = [(start, nbr[root] & ~excluded & ~start, excluded)]
    while stack:
        taken, frontier, banned = stack.pop()
        if not frontier:
            if taken & required == required:
                yield taken
            continue
        w = frontier & -frontier
        rest = frontier ^ w
        if not w & required:
            stack.append((taken, rest, banned | w))
        grown = taken | w
        fresh = nbr[w.bit_length() - 1] & ~grown & ~banned & ~rest
        stack.append((grown, rest | fresh, banned))


def connected_sets(g: Graph) -> Iterator[int]:
    """Every vertex subset inducing a connected subgraph, as a bitmask."""
    nbr = g.neighbor_masks()
    for root in range(g.n):
        yield from _grow(nbr, root, (1 << root) - 1)


def connected_spanning_count(g: Graph, vertices: Iterable[int], memo: dict | None = None) -> int:
    """Number of edge subsets of ``g[vertices]`` that connect all of ``vertices``.

    Deletion-contraction over edge bundles of the contracted multigraph:
    a bundle of ``k`` parallel edges is either absent or contributes
    ``2**k - 1`` non-empty choices and is contracted.
    """
    vs = frozenset(vertices)
    bundles: dict[tuple[int, int], int] = {}
    for v in vs:
        for u in g.adj[v]:
            if u in vs and v < u:
                bundles[(v, u)] = 1
    return _css(vs, bundles, {} if memo is None else memo)


def _spans(vs: frozenset[int], bundles: dict[tuple[int, int], int]) -> bool:
    adj: dict[int, list[int]] = {v: [] for v in vs}
    for a, b in bundles:
        adj[a].append(b)
        adj[b].append(a)
    start = next(iter(vs))
    seen = {start}
    stack = [start]
    while stack:
        for u in adj[stack.pop()]:
            if u not in seen:
                seen.add(u)
                stack.append(u)
    return len(seen) == len(vs)


def _css(vs: frozenset[int], bundles: dict[tuple[int, int], int], memo: dict) -> int:
    if len(vs) == 1:
        return 1
    key = (vs, frozenset(bundles.items()))
    hit = memo.get(key)
    if hit is not None:
        return hit
    if not _spans(vs, bundles):
        memo[key] = 0
        return 0
    (a, b), k = min(bundles.items())
    rest = {e: c for e, c in bundles.items() if e != (a, b)}
    total = _css(vs, rest, memo)
    merged: dict[tuple[int, int], int] = {}
    for (x, y), c in rest.items():
        x, y = (a if x == b else x), (a if y == b else y)
        e = (min(x, y), max(x, y))
        merged[e] = merged.get(e, 0) + c
    total += (2**k - 1) * _css(vs - {b}, merged, memo)
    memo[key] = total
    return total


def count_connected(
    g: Graph,
    required: Iterable[int],
    forbidden: Iterable[int] = (),
    mode: CountMode = CountMode.INDUCED,
) -> int:
    """Connected subgraphs containing every ``required`` vertex and no ``forbidden`` one."""
    req, forb = frozenset(required), frozenset(forbidden)
    if not req:
        raise ValueError("required set must be non-empty")
    if req & forb:
        raise ValueError("required and forbidden sets overlap")
    if any(not 0 <= v < g.n for v in req | forb):
        raise ValueError("vertex index out of range")
    check_cap(g, mode)
    nbr = g.neighbor_masks()
    sets = _grow(nbr, min(req), _mask(forb), _mask(req))
    if mode is CountMode.INDUCED:
        return sum(1 for _ in sets)
    memo: dict = {}
    return sum(connected_spanning_count(g, _members(s), memo) for s in sets)


def subgraph_number(g: Graph, v: int, mode: CountMode = CountMode.INDUCED) -> int:
    return count_connected(g, [v], (), mode)


def pair_counts(g: Graph, mode: CountMode = CountMode.INDUCED) -> list[list[int]]:
    """``F[v][u]`` = connected subgraphs containing both ``v`` and ``u``.

    One pass over all connected vertex sets; the diagonal holds the
    subgraph numbers.
    """
    check_cap(g, mode)
    n = g.n
    if mode is CountMode.INDUCED:
        total = np.zeros((n, n), dtype=np.int64)
        shifts = np.arange(n, dtype=np.int64)
        batch: list[int] = []

        def flush() -> None:
            bits = (np.array(batch, dtype=np.int64)[:, None] >> shifts) & 1
            total[:] += bits.T @ bits
            batch.clear()

        for s in connected_sets(g):
            batch.append(s)
            if len(batch) >= 1 << 16:
                flush()
        if batch:
            flush()
        return total.tolist()

    out = [[0] * n for _ in range(n)]
    memo: dict = {}
    for s in connected_sets(g):
        members = _members(s)
        w = connected_spanning_count(g, members, memo)
        for a in members:
            row = out[a]
            for b in members:
                row[b] += w
    return out


def subgraph_numbers(g: Graph, mode: CountMode = CountMode.INDUCED) -> list[int]:
    pc = pair_counts(g, mode)
    return [pc[v][v] for v in range(g.n)]


def eccentric_subgraph_numbers(
    g: Graph, mode: CountMode = CountMode.INDUCED, pc: list[list[int]] | None = None
) -> list[int]:
    if pc is None:
        pc = pair_counts(g, mode)
    return [min(row) for row in pc]


def eccentric_subgraph_number(g: Graph, v: int, mode: CountMode = CountMode.INDUCED) -> int:
    return min(count_connected(g, {v, u}, (), mode) for u in range(g.n))


def _argmax(values: list[int]) -> frozenset[int]:
    best = max(values)
    return frozenset(v for v, x in enumerate(values) if x == best)


def subgraph_core(
    g: Graph, mode: CountMode = CountMode.INDUCED, pc: list[list[int]] | None = None
) -> frozenset[int]:
    g.require_connected()
    if pc is None:
        pc = pair_counts(g, mode)
    return _argmax([pc[v][v] for v in range(g.n)])


def core_vertices(
    g: Graph, mode: CountMode = CountMode.INDUCED, pc: list[list[int]] | None = None
) -> frozenset[int]:
    g.require_connected()
    return _argmax(eccentric_subgraph_numbers(g, mode, pc))


def _branch_products(t: Graph, root: int) -> tuple[list[int], list[int]]:
    """Parents and rooted subtree counts ``h(x) = prod over children (1 + h(c))``."""
    parent = [-1] * t.n
    parent[root] = root
    order = [root]
    for v in order:
        for u in t.adj[v]:
            if parent[u] == -1:
                parent[u] = v
                order.append(u)
    h = [1] * t.n
    for v in reversed(order[1:]):
        h[parent[v]] *= 1 + h[v]
    return parent, h


def tree_subtree_count(t: Graph, v: int) -> int:
    """Subtrees of ``t`` containing ``v``."""
    t.require_tree()
    return _branch_products(t, v)[1][v]


def tree_pair_count(t: Graph, u: int, v: int) -> int:
    """Subtrees containing both ``u`` and ``v``: the ``u``-``v`` path times
    every way of extending it through off-path branches."""
    t.require_tree()
    parent, h = _branch_products(t, v)
    on_path = [u]
    while on_path[-1] != v:
        on_path.append(parent[on_path[-1]])
    path_set = set(on_path)
    total = 1
    for x in on_path:
        for c in t.adj[x]:
            if c not in path_set and parent[c] == x:
                total *= 1 + h[c]
    return total
