import math

import numpy as np
import pytest

from fasthamilton import StoredGraph, bipartition, generate_graph, side_of
from fasthamilton.errors import InvalidArgumentError


def test_p_zero_empty():
    g = generate_graph(5, 0.0, 3)
    assert g.m == 0
    assert all(g.degree(v) == 0 for v in range(5))


def test_p_one_complete():
    g = generate_graph(4, 1.0, 3)
    assert g.m == 6
    assert all(g.degree(v) == 3 for v in range(4))


def test_invalid_arguments():
    with pytest.raises(InvalidArgumentError):
        generate_graph(1, 0.5, 0)
    with pytest.raises(InvalidArgumentError):
        generate_graph(10, -0.1, 0)
    with pytest.raises(InvalidArgumentError):
        generate_graph(10, 1.5, 0)


def test_determinism():
    g1 = generate_graph(300, 0.05, 77)
    g2 = generate_graph(300, 0.05, 77)
    assert np.array_equal(g1.edges(), g2.edges())
    g3 = generate_graph(300, 0.05, 78)
    assert not np.array_equal(g1.edges(), g3.edges())


def test_edge_count_binomial():
    # n=2000: mean edge count over seeds within 3 sigma of the binomial mean
    n, p, reps = 2000, 0.01, 100
    npairs = n * (n - 1) // 2
    counts = [generate_graph(n, p, s).m for s in range(reps)]
    mean = npairs * p
    sigma_mean = math.sqrt(npairs * p * (1 - p) / reps)
    assert abs(np.mean(counts) - mean) <= 3 * sigma_mean


def test_has_edge_symmetric():
    g = generate_graph(200, 0.1, 5)
    for u, v in g.edges()[:50]:
        assert g.has_edge(int(u), int(v))
        assert g.has_edge(int(v), int(u))
    assert not g.has_edge(0, 0)


def test_neighbors_consistent_with_edges():
    g = generate_graph(100, 0.2, 9)
    for v in range(0, 100, 17):
        for w in g.neighbors(v):
            assert g.has_edge(v, w)
        assert len(g.neighbors(v)) == g.degree(v)


def test_save_load_roundtrip(tmp_path):
    g = generate_graph(50, 0.3, 11)
    path = tmp_path / "g.txt"
    g.save(str(path))
    h = StoredGraph.load(str(path))
    assert h.n == g.n and h.p == g.p and h.graph_seed == g.graph_seed
    assert np.array_equal(h.edges(), g.edges())
    path2 = tmp_path / "g2.txt"
    h.save(str(path2))
    assert path.read_bytes() == path2.read_bytes()


def test_load_rejects_bad_edges(tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text("4 0.5 0\n3 1\n")
    with pytest.raises(InvalidArgumentError):
        StoredGraph.load(str(path))


def test_bipartition_even_odd():
    A, B, aside = bipartition(10)
    assert list(A) == list(range(5)) and list(B) == list(range(5, 10))
    assert aside is None
    A, B, aside = bipartition(11)
    assert len(A) == len(B) == 5 and aside == 10
    assert side_of(10, 11) is None
    assert side_of(0, 11) == "A" and side_of(7, 11) == "B"
