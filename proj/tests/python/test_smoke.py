import pytest

import mindeg


def test_threshold_and_wheel():
    assert mindeg.t_threshold(3, 6) == 10
    w = mindeg.gen_wheel(3, 6)
    assert w.vertex_count == 6
    assert w.edge_count == 10
    assert w.min_degree() == 3


def test_extract_wheel_plus_one():
    g = mindeg.gen_extremal_plus_one(3, 20, 4)
    r = mindeg.extract(g, 3)
    assert r["verified"]
    assert 0 < len(r["subgraph"]) < 20
    assert mindeg.induces_min_degree(g, r["subgraph"], 3)


def test_hypothesis_error():
    with pytest.raises(mindeg.HypothesisError):
        mindeg.extract(mindeg.gen_wheel(3, 8), 3)


def test_graph_from_edges_and_core():
    g = mindeg.Graph(6, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5)])
    assert mindeg.k_core(g, 2) == [0, 1, 2]
    c5 = mindeg.Graph(5, [(i, (i + 1) % 5) for i in range(5)])
    assert mindeg.maximal_good_sets(c5, 2) == [[0, 1, 2, 3, 4]]
    assert mindeg.Graph.parse(g.to_edge_list()) == g


def test_size_bound():
    assert mindeg.size_bound(2, 1 << 20) == pytest.approx((1 << 20) / (4 * 243 * 20))
    assert mindeg.size_bound(2, 48, "sqrt") == 1.0
