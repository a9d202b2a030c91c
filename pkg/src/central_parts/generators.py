"""Standard graph families, the two figure fixtures, and random samplers."""

from __future__ import annotations

import heapq
from collections.abc import Sequence

import numpy as np

from .graph import Graph

GSTAR_EDGES = [
    (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (7, 9), (7, 10),
    (7, 11), (11, 12), (12, 13), (13, 14), (14, 15), (15, 1), (1, 4), (1, 13),
]


def path(n: int) -> Graph:
    _need(n >= 1, "path needs n >= 1")
    return Graph.from_edges(range(1, n + 1), [(i, i + 1) for i in range(1, n)])


def star(n: int) -> Graph:
    """K_{1,n-1}: centre labelled ``v``, leaves ``1``..``n-1``."""
    _need(n >= 2, "star needs n >= 2")
    leaves = [str(i) for i in range(1, n)]
    return Graph.from_edges(["v", *leaves], [("v", x) for x in leaves])


def cycle(n: int) -> Graph:
    _need(n >= 3, "cycle needs n >= 3")
    return Graph.from_edges(range(1, n + 1), [(i, i % n + 1) for i in range(1, n + 1)])


def complete(n: int) -> Graph:
    _need(n >= 1, "complete graph needs n >= 1")
    return Graph.from_edges(
        range(1, n + 1), [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    )


def empty(n: int) -> Graph:
    """Complement of K_n: ``n`` isolated vertices."""
    _need(n >= 1, "empty graph needs n >= 1")
    return Graph.from_edges(range(1, n + 1), [])


def complete_bipartite(m: int, n: int) -> Graph:
    _need(m >= 1 and n >= 1, "bipartite needs m, n >= 1")
    left = [f"a{i}" for i in range(1, m + 1)]
    right = [f"b{j}" for j in range(1, n + 1)]
    return Graph.from_edges(left + right, [(a, b) for a in left for b in right])


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(range(10), outer + spokes + inner)


def hypercube(d: int) -> Graph:
    """Q_d with vertices labelled by their ``d``-bit binary strings."""
    _need(d >= 1, "hypercube needs d >= 1")
    labels = [format(i, f"0{d}b") for i in range(2**d)]
    edges = [
        (labels[i], labels[i ^ (1 << b)])
        for i in range(2**d)
        for b in range(d)
        if i < i ^ (1 << b)
    ]
    return Graph.from_edges(labels, edges)


def circulant(n: int, connections: Sequence[int]) -> Graph:
    _need(n >= 3, "circulant needs n >= 3")
    conn = sorted(set(connections))
    _need(bool(conn), "circulant needs a non-empty connection set")
    _need(
        all(1 <= s <= n // 2 for s in conn) and len(conn) == len(connections),
        f"circulant connection set must be distinct values in 1..{n // 2}",
    )
    edges = set()
    for i in range(n):
        for s in conn:
            j = (i + s) % n
            edges.add((min(i, j), max(i, j)))
    return Graph.from_edges(range(n), sorted(edges))


_FAMILIES = {
    "path": (path, 1),
    "star": (star, 1),
    "cycle": (cycle, 1),
    "complete": (complete, 1),
    "empty": (empty, 1),
    "bipartite": (complete_bipartite, 2),
    "petersen": (petersen, 0),
    "hypercube": (hypercube, 1),
}

FAMILY_NAMES = sorted([*_FAMILIES, "circulant", "gstar", "broom"])


def generate(kind: str, params: Sequence[int] = ()) -> Graph:
    """Build a named family member, e.g. ``generate("path", [4])``.

    ``circulant`` takes ``[n, s1, s2, ...]``.  ``gstar`` and ``broom``
    return the two fixtures.  Bad names or parameters raise ``ValueError``.
    """
    params = [int(p) for p in params]
    if kind == "circulant":
        _need(len(params) >= 2, "circulant takes n followed by connection set")
        return circulant(params[0], params[1:])
    if kind in ("gstar", "broom"):
        _need(not params, f"{kind} takes no parameters")
        return fixture_gstar() if kind == "gstar" else fixture_broom()
    if kind not in _FAMILIES:
        raise ValueError(f"unknown family {kind!r}; choose from {', '.join(FAMILY_NAMES)}")
    fn, arity = _FAMILIES[kind]
    _need(len(params) == arity, f"{kind} takes {arity} parameter(s), got {len(params)}")
    return fn(*params)


def parse_generator_spec(spec: str) -> Graph:
    """``"circulant:8,1,3"`` -> ``generate("circulant", [8, 1, 3])``."""
    kind, _, args = spec.partition(":")
    try:
        params = [int(x) for x in args.split(",") if x.strip()]
    except ValueError:
        raise ValueError(f"bad generator parameters in {spec!r}") from None
    return generate(kind.strip(), params)


def fixture_gstar() -> Graph:
    """15-vertex graph whose center, median, security and characteristic centers differ."""
    return Graph.from_edges(range(1, 16), GSTAR_EDGES)


def fixture_broom() -> Graph:
    """Path 1..10 with seven extra leaves 11..17 hanging off vertex 10."""
    edges = [(i, i + 1) for i in range(1, 10)] + [(10, j) for j in range(11, 18)]
    return Graph.from_edges(range(1, 18), edges)


def prufer_decode(seq: Sequence[int], n: int) -> list[tuple[int, int]]:
    """Edges (0-based) of the labelled tree with Prüfer sequence ``seq``."""
    _need(n >= 2 and len(seq) == n - 2, "Prüfer sequence must have length n - 2")
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
    return edges


def random_tree(n: int, rng: np.random.Generator) -> Graph:
    """Uniform random labelled tree on vertices ``1``..``n``."""
    _need(n >= 1, "tree needs n >= 1")
    if n == 1:
        return path(1)
    seq = rng.integers(0, n, size=n - 2).tolist()
    edges = [(a + 1, b + 1) for a, b in prufer_decode(seq, n)]
    return Graph.from_edges(range(1, n + 1), edges)


def random_gnp(n: int, p: float, rng: np.random.Generator) -> Graph:
    pairs = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    keep = rng.random(len(pairs)) < p
    return Graph.from_edges(range(1, n + 1), [e for e, k in zip(pairs, keep) if k])


def random_connected_gnp(
    n: int, p: float, rng: np.random.Generator, max_tries: int = 10_000
) -> Graph:
    """G(n, p) conditioned on connectivity by rejection."""
    _need(n >= 1 and 0.0 <= p <= 1.0, "need n >= 1 and 0 <= p <= 1")
    for _ in range(max_tries):
        g = random_gnp(n, p, rng)
        if g.is_connected():
            return g
    raise RuntimeError(f"no connected G({n}, {p}) sample in {max_tries} tries")


def _need(cond: bool, message: str) -> None:
    if not cond:
        raise ValueError(message)
