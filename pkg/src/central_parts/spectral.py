"""Laplacian spectra, Fiedler eigenspaces and the characteristic center.

Zero tests on vector coordinates are relative to the vector's max-norm,
so scaling a Fiedler vector never changes its characteristic set.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass

import numpy as np

from .eigen import EigenDecomposition, NumericError, eig_sym
from .graph import Graph, GraphError, NotConnectedError
from .metric import BlockDecomposition, blocks

GROUP_TOL = 1e-6
ZERO_TOL = 1e-7
PARALLEL_TOL = 1e-9
PERRON_TOL = 1e-10
PERRON_TIE_TOL = 1e-8


def laplacian(g: Graph) -> np.ndarray:
    lap = np.zeros((g.n, g.n))
    for v, nb in enumerate(g.adj):
        lap[v, v] = len(nb)
        lap[v, list(nb)] = -1.0
    return lap


@dataclass(frozen=True)
class FiedlerSpace:
    """Algebraic connectivity ``mu`` and an orthonormal basis of its eigenspace."""

    mu: float
    basis: np.ndarray  # n x d
    group_tol: float
    decomposition: EigenDecomposition

    @property
    def multiplicity(self) -> int:
        return self.basis.shape[1]

    @property
    def residual_bound(self) -> float:
        return self.decomposition.residual_bound


def fiedler_space(g: Graph, group_tol: float = GROUP_TOL) -> FiedlerSpace:
    if g.n < 2:
        raise GraphError("Fiedler vectors need at least two vertices")
    dec = eig_sym(laplacian(g))
    vals = dec.eigenvalues
    scale = max(1.0, float(vals[-1]))
    if not g.is_connected() or vals[1] <= group_tol * scale:
        raise NotConnectedError("graph not connected (algebraic connectivity is 0)")
    mu = float(vals[1])
    cols = [k for k in range(1, g.n) if abs(vals[k] - mu) <= group_tol * scale]
    basis = dec.eigenvectors[:, cols]
    basis = basis - basis.mean(axis=0)
    basis, _ = np.linalg.qr(basis)
    return FiedlerSpace(mu, basis, group_tol, dec)


def _signs(y: np.ndarray, zero_tol: float) -> np.ndarray:
    y = np.asarray(y, dtype=np.float64)
    top = float(np.abs(y).max()) if y.size else 0.0
    if top == 0.0:
        raise ValueError("zero vector has no characteristic set")
    s = np.sign(y).astype(int)
    s[np.abs(y) <= zero_tol * top] = 0
    return s


def characteristic_set_of_vector(
    g: Graph, y: Sequence[float] | np.ndarray, zero_tol: float = ZERO_TOL
) -> frozenset[int]:
    """Characteristic vertices of ``g`` with respect to the valuation ``y``.

    ``v`` qualifies if it is zero with a non-zero neighbour, or if some
    neighbour carries the opposite sign.
    """
    if len(y) != g.n:
        raise ValueError(f"vector has length {len(y)}, graph has {g.n} vertices")
    s = _signs(np.asarray(y), zero_tol)
    out = set()
    for v, nb in enumerate(g.adj):
        if s[v] == 0:
            if any(s[u] != 0 for u in nb):
                out.add(v)
        elif any(s[u] == -s[v] for u in nb):
            out.add(v)
    return frozenset(out)


def characteristic_center(
    g: Graph,
    space: FiedlerSpace | None = None,
    tau: float = ZERO_TOL,
    tau_par: float = PARALLEL_TOL,
) -> frozenset[int]:
    """Union of the characteristic sets over every Fiedler vector.

    Decided from the eigenspace geometry instead of by sampling: with
    ``r_v`` the row of the basis at ``v``, every Fiedler vector has
    ``y(v) = r_v . c``.  For an edge ``vu``, ``v`` is characteristic under
    some ``c`` iff ``r_v`` is zero and ``r_u`` is not, the two rows are
    linearly independent, or they are antiparallel.  ``tau`` is relative
    to the largest row norm, which makes the rank-one case agree with
    :func:`characteristic_set_of_vector` exactly.
    """
    if space is None:
        space = fiedler_space(g)
    rows = space.basis
    norms = np.linalg.norm(rows, axis=1)
    thr = tau * float(norms.max())
    nonzero = norms > thr
    out = set()
    for v, nb in enumerate(g.adj):
        for u in nb:
            if not nonzero[u]:
                continue
            if not nonzero[v]:
                out.add(v)
                break
            dot = float(rows[v] @ rows[u])
            if abs(dot) < (1.0 - tau_par) * norms[v] * norms[u] or dot < 0:
                out.add(v)
                break
    return frozenset(out)


@dataclass(frozen=True)
class CaseA:
    """One block carries both positive and negative valuations."""

    block: frozenset[int]


@dataclass(frozen=True)
class CaseB:
    """No block mixes signs; ``z`` is the zero vertex next to a non-zero one."""

    z: int


def classify_fiedler_vector(
    g: Graph,
    y: Sequence[float] | np.ndarray,
    zero_tol: float = ZERO_TOL,
    bd: BlockDecomposition | None = None,
) -> CaseA | CaseB:
    """Sort a Fiedler vector into the two sign patterns of a connected graph.

    Anything other than exactly one mixed block, or exactly one zero vertex
    bordering the support, raises :class:`NumericError`: it means the zero
    threshold is wrong for this input.
    """
    s = _signs(np.asarray(y), zero_tol)
    if bd is None:
        bd = blocks(g)
    mixed = [b for b in bd.blocks if any(s[v] > 0 for v in b) and any(s[v] < 0 for v in b)]
    if len(mixed) == 1:
        return CaseA(mixed[0])
    if mixed:
        raise NumericError(f"{len(mixed)} blocks mix signs; expected one")
    border = [v for v in range(g.n) if s[v] == 0 and any(s[u] != 0 for u in g.adj[v])]
    if len(border) != 1:
        raise NumericError(f"{len(border)} zero vertices border the support; expected one")
    return CaseB(border[0])


def _rooted_parents(t: Graph, root: int) -> list[int]:
    parent = [-1] * t.n
    parent[root] = root
    stack = [root]
    while stack:
        v = stack.pop()
        for u in t.adj[v]:
            if parent[u] == -1:
                parent[u] = v
                stack.append(u)
    return parent


def bottleneck_matrix(t: Graph, v: int, component: Iterable[int]) -> np.ndarray:
    """Inverse of the Laplacian block of ``component``, built combinatorially.

    Entry ``(i, j)`` counts the edges shared by the tree paths from ``i``
    and ``j`` to ``v``.  Rows follow the sorted order of ``component``.
    """
    t.require_tree()
    comp = sorted(set(component))
    parts = t.remove_vertices([v])
    valid = {frozenset(t.index(parts.labels[k]) for k in c) for c in parts.components()}
    if frozenset(comp) not in valid:
        raise GraphError("vertex set is not a component of T - v")
    parent = _rooted_parents(t, v)
    ancestors = []
    for i in comp:
        path = set()
        while i != v:
            path.add(i)
            i = parent[i]
        ancestors.append(path)
    k = len(comp)
    out = np.zeros((k, k), dtype=np.int64)
    for a in range(k):
        for b in range(a, k):
            out[a, b] = out[b, a] = len(ancestors[a] & ancestors[b])
    return out


def perron_value(m: np.ndarray, tol: float = PERRON_TOL, max_iter: int = 100_000) -> float:
    """Dominant eigenvalue of a symmetric positive matrix by power iteration."""
    m = np.asarray(m, dtype=np.float64)
    x = np.ones(m.shape[0]) / np.sqrt(m.shape[0])
    for _ in range(max_iter):
        w = m @ x
        lam = float(x @ w)
        if np.abs(w - lam * x).max() <= tol * lam:
            return lam
        x = w / np.linalg.norm(w)
    raise NumericError("power iteration did not converge")


def perron_components(t: Graph, v: int) -> list[tuple[frozenset[int], float]]:
    """Components of ``T - v`` with their Perron values."""
    parts = t.remove_vertices([v])
    out = []
    for c in parts.components():
        comp = frozenset(t.index(parts.labels[k]) for k in c)
        out.append((comp, perron_value(bottleneck_matrix(t, v, comp))))
    return out


def characteristic_set_tree_perron(t: Graph) -> frozenset[int]:
    """Characteristic set of a tree from Perron components alone.

    A vertex with two or more Perron components is the whole set;
    otherwise it is the edge whose endpoints are each in the other's
    unique Perron component.
    """
    t.require_tree()
    if t.n < 2:
        raise GraphError("characteristic set needs at least two vertices")
    unique_perron: dict[int, frozenset[int]] = {}
    for v in range(t.n):
        comps = perron_components(t, v)
        best = max(val for _, val in comps)
        top = [c for c, val in comps if val >= best * (1.0 - PERRON_TIE_TOL)]
        if len(top) >= 2:
            return frozenset({v})
        unique_perron[v] = top[0]
    for i, j in t.edges():
        if j in unique_perron[i] and i in unique_perron[j]:
            return frozenset({i, j})
    raise NumericError("no characteristic vertex or edge found")
