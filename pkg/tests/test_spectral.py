import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from central_parts.checks import GSTAR_FIEDLER, transitive_family
from central_parts.eigen import NumericError
from central_parts.generators import (
    complete,
    cycle,
    fixture_broom,
    fixture_gstar,
    path,
    petersen,
    star,
    hypercube,
)
from central_parts.graph import Graph, GraphError, NotConnectedError
from central_parts.metric import blocks, contained_in_some_block
from central_parts.spectral import (
    CaseA,
    CaseB,
    bottleneck_matrix,
    characteristic_center,
    characteristic_set_of_vector,
    characteristic_set_tree_perron,
    classify_fiedler_vector,
    fiedler_space,
    laplacian,
    perron_components,
    perron_value,
)

from _util import random_connected, random_trees

TREES = random_trees(50, 14, seed=41)
GRAPHS = random_connected(200, 12, seed=42)


def middle(n):
    return {str(n // 2), str(n // 2 + 1)} if n % 2 == 0 else {str((n + 1) // 2)}


def test_laplacian_examples():
    assert laplacian(complete(2)).tolist() == [[1, -1], [-1, 1]]
    assert laplacian(path(3)).tolist() == [[1, -1, 0], [-1, 2, -1], [0, -1, 1]]
    lap = laplacian(fixture_gstar())
    assert (lap.sum(axis=1) == 0).all()
    assert (lap == lap.T).all()


def test_fiedler_gstar():
    space = fiedler_space(fixture_gstar())
    assert space.mu == pytest.approx(0.2, abs=1e-4)
    assert space.multiplicity == 1


def test_fiedler_c4_and_p4():
    space = fiedler_space(cycle(4))
    assert space.mu == pytest.approx(2.0, abs=1e-9)
    assert space.multiplicity == 2
    assert fiedler_space(path(4)).multiplicity == 1


def test_fiedler_errors():
    with pytest.raises(NotConnectedError):
        fiedler_space(Graph.from_edges([1, 2, 3], [(1, 2)]))
    with pytest.raises(GraphError):
        fiedler_space(path(1))


@pytest.mark.parametrize("g", GRAPHS[:80])
def test_fiedler_space_invariants(g):
    space = fiedler_space(g)
    b = space.basis
    lap = laplacian(g)
    assert np.abs(b.T @ np.ones(g.n)).max() <= 1e-8
    assert np.abs(b.T @ b - np.eye(b.shape[1])).max() <= 1e-10
    assert np.abs(lap @ b - space.mu * b).max() <= space.residual_bound
    ref = np.linalg.eigvalsh(lap)
    assert space.mu == pytest.approx(ref[1], abs=1e-9)
    assert space.multiplicity == int(np.sum(np.abs(ref - ref[1]) <= 1e-6 * max(1, ref[-1])))


def test_c4_characteristic_sets():
    g = cycle(4)
    assert g.label_set(characteristic_set_of_vector(g, [1, 0, -1, 0])) == {"2", "4"}
    assert g.label_set(characteristic_set_of_vector(g, [0, 1, 0, -1])) == {"1", "3"}
    assert characteristic_center(g) == set(range(4))


def test_gstar_reference_vector():
    g = fixture_gstar()
    y = [GSTAR_FIEDLER[int(lab) - 1] for lab in g.labels]
    assert g.label_set(characteristic_set_of_vector(g, y)) == {"5", "6", "11", "12"}
    assert g.label_set(characteristic_center(g)) == {"5", "6", "11", "12"}


def test_zero_vector_rejected():
    with pytest.raises(ValueError):
        characteristic_set_of_vector(path(3), [0, 0, 0])


@pytest.mark.parametrize("n", range(2, 13))
def test_path_characteristic_center(n):
    p = path(n)
    assert p.label_set(characteristic_center(p)) == middle(n)
    assert p.label_set(characteristic_set_tree_perron(p)) == middle(n)


@settings(max_examples=100, deadline=None)
@given(
    st.sampled_from(GRAPHS[:20]),
    st.integers(0, 2**32 - 1),
    st.sampled_from([1e-6, -1e-6, 1e6, -1e6, 3.7, -0.25]),
)
def test_scale_invariance(g, seed, scale):
    space = fiedler_space(g)
    rng = np.random.default_rng(seed)
    y = space.basis @ rng.normal(size=space.multiplicity)
    assert characteristic_set_of_vector(g, y) == characteristic_set_of_vector(g, scale * y)


@pytest.mark.parametrize("g", GRAPHS)
def test_characteristic_center_in_one_block(g):
    assert contained_in_some_block(blocks(g), characteristic_center(g))


@pytest.mark.parametrize("g", GRAPHS[:100])
def test_rank_one_reduces_to_vector_rule(g):
    space = fiedler_space(g)
    if space.multiplicity == 1:
        assert characteristic_center(g, space) == characteristic_set_of_vector(g, space.basis[:, 0])


def witness(space, v, u):
    """A coefficient vector putting v in chi(G, Y) through neighbour u."""
    rv, ru = space.basis[v], space.basis[u]
    if np.linalg.norm(rv) <= 1e-7 * np.linalg.norm(space.basis, axis=1).max():
        return ru
    if rv @ ru < 0 and abs(rv @ ru) >= (1 - 1e-9) * np.linalg.norm(rv) * np.linalg.norm(ru):
        return rv
    return ru - (ru @ rv) / (rv @ rv) * rv


SPECIAL = [cycle(4), cycle(6), petersen(), hypercube(3), star(5), complete(4)]


@pytest.mark.parametrize("g", GRAPHS[:60] + SPECIAL)
def test_characteristic_center_has_witnesses(g):
    """Every member has an explicit Fiedler vector; sampled vectors never add members."""
    space = fiedler_space(g)
    lap = laplacian(g)
    chi = characteristic_center(g, space)
    for v in chi:
        ok = False
        for u in g.adj[v]:
            y = space.basis @ witness(space, v, u)
            if np.abs(y).max() == 0:
                continue
            assert np.abs(lap @ y - space.mu * y).max() <= 1e-8 * np.abs(y).max()
            if v in characteristic_set_of_vector(g, y):
                ok = True
                break
        assert ok, f"no witness for {g.labels[v]}"
    rng = np.random.default_rng(7)
    for _ in range(50):
        y = space.basis @ rng.normal(size=space.multiplicity)
        assert characteristic_set_of_vector(g, y) <= chi


@pytest.mark.parametrize("name, g", transitive_family(), ids=lambda x: x if isinstance(x, str) else "")
def test_vertex_transitive_characteristic_center(name, g):
    assert characteristic_center(g) == set(range(g.n))


def is_vertex_or_edge(t, part):
    part = sorted(part)
    return len(part) == 1 or (len(part) == 2 and t.has_edge(*part))


@pytest.mark.parametrize("t", [tr for tr in TREES if tr.n >= 2])
def test_tree_spectral_equals_perron(t):
    chi = characteristic_center(t)
    assert chi == characteristic_set_tree_perron(t)
    assert is_vertex_or_edge(t, chi)


def test_perron_examples():
    t = fixture_broom()
    assert t.label_set(characteristic_set_tree_perron(t)) == {"7", "8"}
    assert t.label_set(characteristic_center(t)) == {"7", "8"}
    p4 = path(4)
    assert p4.label_set(characteristic_set_tree_perron(p4)) == {"2", "3"}
    s = star(5)
    assert s.label_set(characteristic_set_tree_perron(s)) == {"v"}
    assert s.label_set(characteristic_center(s)) == {"v"}


def test_bottleneck_small():
    p3 = path(3)
    m = bottleneck_matrix(p3, 1, [0])
    assert m.tolist() == [[1]]
    assert perron_value(m) == pytest.approx(1.0)
    assert bottleneck_matrix(p3, 2, [0, 1]).tolist() == [[2, 1], [1, 1]]


def test_bottleneck_rejects_non_component():
    p3 = path(3)
    with pytest.raises(GraphError):
        bottleneck_matrix(p3, 2, [0])
    with pytest.raises(GraphError):
        bottleneck_matrix(cycle(4), 0, [1, 2, 3])


@pytest.mark.parametrize("t", [tr for tr in TREES if tr.n >= 3][:25])
def test_bottleneck_is_inverse_of_laplacian_block(t):
    lap = laplacian(t)
    for v in range(t.n):
        for comp, value in perron_components(t, v):
            idx = sorted(comp)
            m = bottleneck_matrix(t, v, comp)
            assert np.allclose(m @ lap[np.ix_(idx, idx)], np.eye(len(idx)), atol=1e-12)
            assert value == pytest.approx(np.linalg.eigvalsh(m.astype(float))[-1], rel=1e-9)


def test_broom_perron_component_at_9():
    t = fixture_broom()
    comps = perron_components(t, t.index(9))
    assert len(comps) == 2
    best = max(comps, key=lambda cv: cv[1])[0]
    assert t.indices([7, 8]) <= best
    assert t.index(10) not in best


def test_classify_examples():
    g = fixture_gstar()
    case = classify_fiedler_vector(g, fiedler_space(g).basis[:, 0])
    assert isinstance(case, CaseA)
    assert case.block == g.indices([1, 2, 3, 4, 5, 6, 7, 11, 12, 13, 14, 15])
    s = star(5)
    assert classify_fiedler_vector(s, fiedler_space(s).basis[:, 0]) == CaseB(s.index("v"))
    p5 = path(5)
    assert classify_fiedler_vector(p5, fiedler_space(p5).basis[:, 0]) == CaseB(p5.index(3))


def test_classify_rejects_non_fiedler_pattern():
    # two separate sign changes on a path cannot come from a Fiedler vector
    with pytest.raises(NumericError):
        classify_fiedler_vector(path(5), [1, -1, 0, -1, 1])
    with pytest.raises(NumericError):
        classify_fiedler_vector(path(5), [1, 0, 1, 0, 1])


@pytest.mark.parametrize("g", SPECIAL + [fixture_gstar(), fixture_broom()] + GRAPHS[:30])
def test_classification_consistent_across_fiedler_vectors(g):
    space = fiedler_space(g)
    bd = blocks(g)
    rng = np.random.default_rng(99)
    cases = set()
    for _ in range(20):
        c = rng.normal(size=space.multiplicity)
        y = space.basis @ (c / np.linalg.norm(c))
        cases.add(classify_fiedler_vector(g, y, bd=bd))
    assert len(cases) == 1
