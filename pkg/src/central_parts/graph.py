"""Immutable simple undirected graphs with string labels.

Vertices are addressed by 0-based index internally; every text interface
(edge lists, CLI output) speaks in labels.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field


class GraphError(ValueError):
    """Raised for graphs that violate the simple-graph invariants."""


class ParseError(GraphError):
    """Malformed edge-list text.  ``line`` is 1-based."""

    def __init__(self, message: str, line: int) -> None:
        super().__init__(f"line {line}: {message}")
        self.line = line


class NotConnectedError(GraphError):
    """An operation defined only for connected graphs got a disconnected one."""


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph.

    ``adj[i]`` is the sorted tuple of neighbours of vertex ``i``.  Build
    instances with :meth:`from_edges` or :func:`parse_edge_list` rather than
    the raw constructor, which trusts its input.
    """

    labels: tuple[str, ...]
    adj: tuple[tuple[int, ...], ...]
    _index: dict[str, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "_index", {lab: i for i, lab in enumerate(self.labels)})

    @classmethod
    def from_edges(
        cls,
        labels: Iterable[object],
        edges: Iterable[tuple[object, object]],
    ) -> Graph:
        """Build a graph from vertex labels and label pairs.

        Labels are converted with ``str``.  Self-loops, duplicate edges,
        duplicate labels and unknown endpoints raise :class:`GraphError`.
        """
        labs = tuple(str(x) for x in labels)
        index = {lab: i for i, lab in enumerate(labs)}
        if len(index) != len(labs):
            raise GraphError("vertex labels must be distinct")
        nbrs: list[set[int]] = [set() for _ in labs]
        for a, b in edges:
            sa, sb = str(a), str(b)
            if sa not in index or sb not in index:
                raise GraphError(f"edge {sa}-{sb} has an unknown endpoint")
            i, j = index[sa], index[sb]
            if i == j:
                raise GraphError(f"self-loop at {sa}")
            if j in nbrs[i]:
                raise GraphError(f"duplicate edge {sa}-{sb}")
            nbrs[i].add(j)
            nbrs[j].add(i)
        return cls(labs, tuple(tuple(sorted(s)) for s in nbrs))

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def m(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def index(self, label: object) -> int:
        try:
            return self._index[str(label)]
        except KeyError:
            raise KeyError(f"no vertex labelled {label!r}") from None

    def indices(self, labels: Iterable[object]) -> frozenset[int]:
        return frozenset(self.index(x) for x in labels)

    def label_set(self, vertices: Iterable[int]) -> set[str]:
        return {self.labels[v] for v in vertices}

    def sorted_labels(self, vertices: Iterable[int]) -> list[str]:
        return sorted(self.labels[v] for v in vertices)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def edges(self) -> list[tuple[int, int]]:
        """Edges as ``(i, j)`` index pairs with ``i < j``, sorted."""
        return [(i, j) for i, nb in enumerate(self.adj) for j in nb if i < j]

    def pendant_vertices(self) -> frozenset[int]:
        return frozenset(v for v in range(self.n) if len(self.adj[v]) == 1)

    def neighbor_masks(self) -> list[int]:
        """Adjacency as integer bitmasks, ``masks[v] >> u & 1`` iff ``u ~ v``."""
        masks = []
        for nb in self.adj:
            mask = 0
            for u in nb:
                mask |= 1 << u
            masks.append(mask)
        return masks

    def components(self) -> list[list[int]]:
        seen = [False] * self.n
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            comp, stack = [], [s]
            while stack:
                v = stack.pop()
                comp.append(v)
                for u in self.adj[v]:
                    if not seen[u]:
                        seen[u] = True
                        stack.append(u)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return self.n > 0 and len(self.components()) == 1

    def is_tree(self) -> bool:
        return self.is_connected() and self.m == self.n - 1

    def require_connected(self) -> None:
        if not self.is_connected():
            raise NotConnectedError("graph not connected")

    def require_tree(self) -> None:
        if not self.is_tree():
            raise GraphError("graph is not a tree")

    def remove_vertices(self, removed: Iterable[int]) -> Graph:
        """Subgraph induced by the remaining vertices (labels kept)."""
        gone = set(removed)
        keep = [v for v in range(self.n) if v not in gone]
        return self.induced(keep)

    def induced(self, vertices: Sequence[int]) -> Graph:
        keep = list(vertices)
        pos = {v: k for k, v in enumerate(keep)}
        adj = tuple(tuple(sorted(pos[u] for u in self.adj[v] if u in pos)) for v in keep)
        return Graph(tuple(self.labels[v] for v in keep), adj)


def parse_edge_list(text: str) -> Graph:
    """Parse whitespace-separated edge lines.

    Blank lines and lines starting with ``#`` are skipped.  Vertices are
    numbered in order of first appearance.
    """
    labels: list[str] = []
    index: dict[str, int] = {}
    seen: set[frozenset[int]] = set()
    nbrs: list[set[int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise ParseError(f"expected 2 tokens, got {len(tokens)}", lineno)
        a, b = tokens
        if a == b:
            raise ParseError(f"self-loop at {a}", lineno)
        for tok in tokens:
            if tok not in index:
                index[tok] = len(labels)
                labels.append(tok)
                nbrs.append(set())
        i, j = index[a], index[b]
        key = frozenset((i, j))
        if key in seen:
            raise ParseError(f"duplicate edge {a}-{b}", lineno)
        seen.add(key)
        nbrs[i].add(j)
        nbrs[j].add(i)
    return Graph(tuple(labels), tuple(tuple(sorted(s)) for s in nbrs))


def serialize(g: Graph) -> str:
    """Edge list with endpoints in label order and lines sorted.

    Isolated vertices cannot be expressed in the format and are dropped.
    """
    lines = []
    for i, j in g.edges():
        a, b = sorted((g.labels[i], g.labels[j]))
        lines.append(f"{a} {b}")
    return "".join(line + "\n" for line in sorted(lines))
