"""Golden fixture checks run by ``central-parts verify``.

Each check returns a list of mismatch descriptions; an empty list passes.
"""

from __future__ import annotations

from collections.abc import Callable, Iterable

import numpy as np

from . import centers, counting, generators, spectral
from .constructions import build_gch
from .graph import Graph
from .report import PART_NAMES, compute_parts

GSTAR_FIEDLER = [
    -0.2485, -0.2837, -0.2623, -0.1883, -0.0166, 0.1584, 0.3018, 0.3772,
    0.3772, 0.3772, 0.1584, -0.0166, -0.1883, -0.2623, -0.2837,
]


def _expect_set(name: str, g: Graph, got: Iterable[int], want: Iterable[object]) -> list[str]:
    got_l = g.label_set(got)
    want_l = {str(x) for x in want}
    if got_l == want_l:
        return []
    return [f"{name}: expected {sorted(want_l)}, got {sorted(got_l)}"]


def _expect_eq(name: str, got: object, want: object) -> list[str]:
    return [] if got == want else [f"{name}: expected {want!r}, got {got!r}"]


def check_gstar_metric() -> list[str]:
    g = generators.fixture_gstar()
    return (
        _expect_eq("n", g.n, 15)
        + _expect_eq("m", g.m, 17)
        + _expect_set("center", g, centers.center(g), [4, 5, 12, 13])
        + _expect_set("median", g, centers.median(g), [4, 13])
        + _expect_set(
            "security_center", g, centers.security_center(g), [1, 4, 5, 6, 7, 11, 12, 13]
        )
    )


def check_gstar_spectral() -> list[str]:
    g = generators.fixture_gstar()
    space = spectral.fiedler_space(g)
    out = _expect_set("characteristic_center", g, spectral.characteristic_center(g, space), [5, 6, 11, 12])
    if abs(space.mu - 0.2) > 1e-4:
        out.append(f"mu: expected 0.2 +- 1e-4, got {space.mu:.6f}")
    out += _expect_eq("fiedler multiplicity", space.multiplicity, 1)
    if space.multiplicity == 1:
        y = gstar_unit_fiedler(g, space)
        err = float(np.abs(y - np.array(GSTAR_FIEDLER)).max())
        if err > 5e-4:
            out.append(f"fiedler vector: max coordinate error {err:.2e} > 5e-4")
    return out


def gstar_unit_fiedler(g: Graph, space: spectral.FiedlerSpace) -> np.ndarray:
    """The unit Fiedler vector of G* in label order 1..15, vertex 8 positive."""
    y = space.basis[:, 0] / np.linalg.norm(space.basis[:, 0])
    y = y * np.sign(y[g.index(8)])
    return np.array([y[g.index(k)] for k in range(1, 16)])


def check_broom() -> list[str]:
    t = generators.fixture_broom()
    i = t.index
    out = (
        _expect_set("center", t, centers.center(t), [6])
        + _expect_set("median", t, centers.median(t), [9])
        + _expect_set("centroid", t, centers.centroid_tree(t), [9])
        + _expect_set("characteristic_center", t, spectral.characteristic_center(t), [7, 8])
        + _expect_set("characteristic_perron", t, spectral.characteristic_set_tree_perron(t), [7, 8])
    )
    pc = counting.pair_counts(t)
    out += _expect_set("subgraph_core", t, counting.subgraph_core(t, pc=pc), [10])
    out += _expect_set("core_vertices", t, counting.core_vertices(t, pc=pc), [3])
    ecc = counting.eccentric_subgraph_numbers(t, pc=pc)
    for v, want in ((2, 128), (3, 135), (4, 134)):
        out += _expect_eq(f"eps({v})", ecc[i(v)], want)
    out += _expect_eq("f(3,1)", pc[i(3)][i(1)], 135)
    out += _expect_eq("f(3,11)", pc[i(3)][i(11)], 192)
    out += _expect_eq("f(3,1,not 10)", counting.count_connected(t, [i(3), i(1)], [i(10)]), 7)
    return out


def _middle(n: int) -> list[int]:
    return [n // 2, n // 2 + 1] if n % 2 == 0 else [(n + 1) // 2]


def check_path_star_closed_forms() -> list[str]:
    out = []
    for n in range(2, 13):
        p = generators.path(n)
        rep = compute_parts(p)
        for part in PART_NAMES:
            out += _expect_eq(f"P{n} {part}", sorted(rep.parts[part]), sorted(map(str, _middle(n))))
        ecc = counting.eccentric_subgraph_numbers(p)
        for k in range(1, -(-n // 2) + 1):
            out += _expect_eq(f"P{n} eps({k})", ecc[p.index(k)], k)
        s = generators.star(n)
        rep = compute_parts(s)
        # K1,1 = K2 has two vertices of degree n - 1
        hubs = s.sorted_labels(v for v in range(n) if s.degree(v) == n - 1)
        for part in PART_NAMES:
            out += _expect_eq(f"K1,{n - 1} {part}", rep.parts[part], hubs)
        if n >= 3:
            ecc = counting.eccentric_subgraph_numbers(s)
            out += _expect_eq(f"K1,{n - 1} eps(center)", ecc[s.index("v")], 2 ** (n - 2))
            out += _expect_eq(f"K1,{n - 1} eps(leaf)", ecc[s.index("1")], 2 ** (n - 3))
    return out


def transitive_family() -> list[tuple[str, Graph]]:
    fam = [(f"C{n}", generators.cycle(n)) for n in range(3, 11)]
    fam += [(f"K{n}", generators.complete(n)) for n in range(2, 8)]
    fam += [
        ("Petersen", generators.petersen()),
        ("Q3", generators.hypercube(3)),
        ("circulant(8;1,3)", generators.circulant(8, [1, 3])),
    ]
    return fam


def check_vertex_transitive() -> list[str]:
    out = []
    for name, g in transitive_family():
        rep = compute_parts(g)
        everything = sorted(g.labels)
        for part in PART_NAMES:
            if rep.parts[part] != everything:
                out.append(f"{name} {part}: expected all vertices, got {rep.parts[part]}")
    return out


def check_c4_eigenspace() -> list[str]:
    g = generators.cycle(4)
    space = spectral.fiedler_space(g)
    out = []
    if abs(space.mu - 2.0) > 1e-9:
        out.append(f"mu: expected 2, got {space.mu!r}")
    out += _expect_eq("multiplicity", space.multiplicity, 2)
    out += _expect_set("chi(C4, Y1)", g, spectral.characteristic_set_of_vector(g, [1, 0, -1, 0]), [2, 4])
    out += _expect_set("chi(C4, Y2)", g, spectral.characteristic_set_of_vector(g, [0, 1, 0, -1]), [1, 3])
    out += _expect_set("chi(C4)", g, spectral.characteristic_center(g, space), [1, 2, 3, 4])
    return out


def check_gch(g: Graph, name: str) -> list[str]:
    res = build_gch(g)
    h = res.graph
    space = spectral.fiedler_space(h)
    out = []
    if abs(space.mu - res.expected_mu) > 1e-9:
        out.append(f"{name} mu: expected {res.expected_mu!r}, got {space.mu!r}")
    out += _expect_eq(f"{name} multiplicity", space.multiplicity, 1)
    out += _expect_set(
        f"{name} chi(G_ch)", h, spectral.characteristic_center(h, space), g.labels
    )
    lap = spectral.laplacian(h)
    resid = float(np.abs(lap @ res.expected_fiedler - res.expected_mu * res.expected_fiedler).max())
    if resid > 1e-9:
        out.append(f"{name} eigenvector residual {resid:.2e} > 1e-9")
    return out


def check_gch_examples() -> list[str]:
    out = []
    for name, g in (
        ("K1", generators.path(1)),
        ("complement of K3", generators.empty(3)),
        ("P3", generators.path(3)),
        ("K3", generators.complete(3)),
    ):
        out += check_gch(g, name)
    return out


CHECKS: dict[str, Callable[[], list[str]]] = {
    "gstar.metric": check_gstar_metric,
    "gstar.spectral": check_gstar_spectral,
    "broom": check_broom,
    "closed_forms.path_star": check_path_star_closed_forms,
    "vertex_transitive": check_vertex_transitive,
    "c4.eigenspace": check_c4_eigenspace,
    "gch": check_gch_examples,
}


def run_checks(names: Iterable[str] | None = None) -> dict[str, list[str]]:
    selected = list(CHECKS) if names is None else list(names)
    results = {}
    for name in selected:
        try:
            results[name] = CHECKS[name]()
        except Exception as exc:  # a crash is a failed check, reported by name
            results[name] = [f"raised {type(exc).__name__}: {exc}"]
    return results
