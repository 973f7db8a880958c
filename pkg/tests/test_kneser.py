"""Kneser graph construction and the hypergraph generators."""

import pytest

from altermatic import (
    Hypergraph,
    complete_uniform,
    kneser_graph,
    random_hypergraph,
    schrijver_hypergraph,
)


def test_pairs_of_four_is_perfect_matching():
    g = kneser_graph(complete_uniform(4, 2))
    assert g.vcount == 6
    assert g.edge_count == 3
    assert all(g.degree(v) == 1 for v in range(6))
    # each pair is adjacent exactly to its complement
    h = complete_uniform(4, 2)
    for i, j in g.edge_list():
        assert h.edges[i] ^ h.edges[j] == 0b1111


def test_single_edge_is_isolated_vertex():
    g = kneser_graph(Hypergraph.from_edge_sets(3, [[1, 2]]))
    assert g.vcount == 1
    assert g.edge_count == 0


def test_petersen_shape():
    g = kneser_graph(complete_uniform(5, 2))
    assert g.vcount == 10
    assert g.edge_count == 15
    assert all(g.degree(v) == 3 for v in range(10))


def test_kneser_graph_has_no_loops():
    for h in (complete_uniform(5, 2), schrijver_hypergraph(6, 2)):
        g = kneser_graph(h)
        assert g.vcount == len(h.edges)
        for v in range(g.vcount):
            assert not g.adjacent(v, v)


def test_complete_uniform_counts_and_order():
    assert len(complete_uniform(4, 2).edges) == 6
    assert len(complete_uniform(5, 2).edges) == 10
    assert complete_uniform(3, 3).edge_sets() == ((1, 2, 3),)
    # lexicographic order of sorted tuples
    assert complete_uniform(4, 2).edge_sets() == (
        (1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4),
    )


def test_complete_uniform_rejects_bad_range():
    with pytest.raises(ValueError):
        complete_uniform(3, 4)
    with pytest.raises(ValueError):
        complete_uniform(3, 0)


def test_schrijver_small_cases():
    assert schrijver_hypergraph(4, 2).edge_sets() == ((1, 3), (2, 4))
    sg52 = schrijver_hypergraph(5, 2)
    assert len(sg52.edges) == 5
    g = kneser_graph(sg52)  # the 5-cycle
    assert g.vcount == 5 and g.edge_count == 5
    assert all(g.degree(v) == 2 for v in range(5))


def test_schrijver_tight_cases():
    assert schrijver_hypergraph(4, 2).edge_sets() == ((1, 3), (2, 4))
    assert schrijver_hypergraph(6, 3).edge_sets() == ((1, 3, 5), (2, 4, 6))


def test_schrijver_rejects_small_ground_set():
    with pytest.raises(ValueError):
        schrijver_hypergraph(3, 2)


def test_schrijver_subset_of_complete():
    for m, r in ((5, 2), (6, 2), (7, 3)):
        stable = set(schrijver_hypergraph(m, r).edges)
        full = set(complete_uniform(m, r).edges)
        assert stable < full


def test_random_hypergraph_deterministic():
    a = random_hypergraph(5, 3, (2, 2), seed=7)
    b = random_hypergraph(5, 3, (2, 2), seed=7)
    assert a == b
    assert len(a.edges) == 3
    assert all(len(e) == 2 for e in a.edge_sets())
    assert random_hypergraph(5, 3, (2, 2), seed=8) != a


def test_random_hypergraph_infeasible():
    with pytest.raises(ValueError):
        random_hypergraph(4, 7, (2, 2), seed=0)  # only C(4,2)=6 exist


def test_random_hypergraph_forced():
    assert random_hypergraph(1, 1, (1, 1), seed=123).edge_sets() == ((1,),)


def test_random_hypergraph_size_range():
    h = random_hypergraph(8, 12, (1, 3), seed=3)
    assert len(h.edges) == 12
    assert all(1 <= len(e) <= 3 for e in h.edge_sets())


def test_random_hypergraph_large_space_path():
    # forces the unranking branch: C(16,1..8) is far above the pool cutoff
    h = random_hypergraph(16, 10, (1, 8), seed=5)
    assert len(h.edges) == 10
    assert h == random_hypergraph(16, 10, (1, 8), seed=5)
