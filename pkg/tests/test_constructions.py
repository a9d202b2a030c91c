import math

import numpy as np
import pytest

from central_parts.constructions import NEW_LABELS, build_gch, gch_mu
from central_parts.generators import complete, empty, path, random_gnp
from central_parts.graph import Graph, GraphError
from central_parts.spectral import characteristic_center, fiedler_space, laplacian


def random_small(count, seed):
    rng = np.random.default_rng(seed)
    out = []
    for _ in range(count):
        n = int(rng.integers(1, 8))
        out.append(random_gnp(n, float(rng.uniform(0.0, 0.8)), rng))
    return out


RANDOM = random_small(40, seed=61)


def test_k1_gives_p5():
    res = build_gch(path(1))
    h = res.graph
    assert h.labels == ("u1", "u2", "1", "u3", "u4")
    assert {frozenset(h.labels[i] for i in e) for e in h.edges()} == {
        frozenset(p) for p in [("u1", "u2"), ("u2", "1"), ("1", "u3"), ("u3", "u4")]
    }
    assert res.expected_mu == pytest.approx((3 - math.sqrt(5)) / 2, abs=1e-15)
    assert fiedler_space(h).mu == pytest.approx(2 - 2 * math.cos(math.pi / 5), abs=1e-12)


def test_empty_three():
    res = build_gch(empty(3))
    h = res.graph
    assert (h.n, h.m) == (7, 8)
    assert h.is_connected()
    assert fiedler_space(h).mu == pytest.approx((5 - math.sqrt(13)) / 2, abs=1e-9)


def test_p3_characteristic_center():
    res = build_gch(path(3))
    assert res.graph.label_set(characteristic_center(res.graph)) == {"1", "2", "3"}
    assert set(res.original) == set(res.graph.indices([1, 2, 3]))


@pytest.mark.parametrize("g", RANDOM + [path(1), empty(3), path(3), complete(3)])
def test_gch_theorem(g):
    res = build_gch(g)
    h = res.graph
    assert h.m == g.m + 2 * g.n + 2
    assert h.is_connected()
    assert h.labels[:2] == NEW_LABELS[:2] and h.labels[-2:] == NEW_LABELS[2:]
    assert h.labels[2:-2] == g.labels
    assert 0 < res.expected_mu < 1
    assert res.expected_mu == pytest.approx(gch_mu(g.n))
    space = fiedler_space(h)
    assert abs(space.mu - res.expected_mu) <= 1e-9
    assert space.multiplicity == 1
    assert characteristic_center(h, space) == set(res.original)
    y = res.expected_fiedler
    assert np.abs(laplacian(h) @ y - res.expected_mu * y).max() <= 1e-9
    # computed and stated Fiedler vectors agree up to sign after normalising
    a = space.basis[:, 0]
    b = y / np.linalg.norm(y)
    assert min(np.abs(a - b).max(), np.abs(a + b).max()) <= 1e-8


def test_mu_formula_below_one():
    for n in range(1, 200):
        assert 0 < gch_mu(n) < 1


def test_reserved_labels_rejected():
    with pytest.raises(GraphError, match="reserved"):
        build_gch(Graph.from_edges(["u1", "x"], [("u1", "x")]))
