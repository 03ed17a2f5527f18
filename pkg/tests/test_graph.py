import random

import pytest

from streamrank.graph import DynamicGraph

from oracles import naive_bfs_out, random_graph


def graph_of(*edges):
    g = DynamicGraph()
    for u, v in edges:
        g.add_edge(u, v)
    return g


class TestAddEdge:
    def test_add_to_empty(self):
        g = DynamicGraph()
        assert g.add_edge(1, 2) is True
        assert g.out_degree(1) == 1
        assert g.out_degree(2) == 0
        assert g.edge_count == 1

    def test_duplicate_add_is_noop(self):
        g = graph_of((1, 2))
        assert g.add_edge(1, 2) is False
        assert g.edge_count == 1

    def test_directedness(self):
        g = graph_of((1, 2))
        assert g.add_edge(2, 1) is True
        assert g.edge_count == 2

    def test_negative_id_rejected(self):
        g = DynamicGraph()
        with pytest.raises(ValueError):
            g.add_edge(-1, 2)


class TestRemoveEdge:
    def test_remove_existing(self):
        g = graph_of((1, 2))
        assert g.remove_edge(1, 2) is True
        assert g.edge_count == 0

    def test_remove_missing(self):
        g = graph_of((1, 2))
        assert g.remove_edge(5, 6) is False

    def test_remove_keeps_other_edges(self):
        g = graph_of((1, 2), (1, 3))
        assert g.remove_edge(1, 3) is True
        assert g.out_degree(1) == 1

    def test_vertices_retained_at_degree_zero(self):
        g = graph_of((1, 2))
        g.remove_edge(1, 2)
        assert g.has_vertex(1) and g.has_vertex(2)
        assert set(g.vertices) == {1, 2}


class TestSnapshot:
    def test_simple(self):
        g = graph_of((1, 2), (1, 3))
        snap = g.snapshot_degrees(0)
        assert snap.degrees == {1: 2, 2: 0, 3: 0}
        assert snap.taken_at == 0

    def test_empty(self):
        assert DynamicGraph().snapshot_degrees(3).degrees == {}

    def test_snapshot_is_frozen(self):
        g = graph_of((1, 2))
        snap = g.snapshot_degrees(0)
        g.add_edge(4, 1)
        assert snap.degrees == {1: 1, 2: 0}
        assert g.snapshot_degrees(1).degrees == {1: 1, 2: 0, 4: 1}


class TestBfsOut:
    def test_chain_one_hop(self):
        g = graph_of((1, 2), (2, 3))
        assert g.bfs_out({1}, 1) == {1: 0, 2: 1}

    def test_chain_two_hops(self):
        g = graph_of((1, 2), (2, 3))
        assert g.bfs_out({1}, 2) == {1: 0, 2: 1, 3: 2}

    def test_unknown_source(self):
        with pytest.raises(KeyError):
            graph_of((1, 2)).bfs_out({9}, 1)

    @pytest.mark.parametrize("seed", range(5))
    def test_matches_naive_oracle(self, seed):
        rng = random.Random(seed)
        g = random_graph(rng, 50, 150)
        sources = {rng.randrange(50) for _ in range(3)}
        for hops in (0, 1, 3, 50):
            assert g.bfs_out(sources, hops) == naive_bfs_out(g, sources, hops)

    @pytest.mark.parametrize("seed", range(5))
    def test_triangle_property(self, seed):
        rng = random.Random(100 + seed)
        g = random_graph(rng, 40, 120)
        dist = g.bfs_out({0}, 40)
        for u, v in g.edges():
            if u in dist and v in dist:
                assert dist[v] <= dist[u] + 1


class TestConsistency:
    @pytest.mark.parametrize("seed", range(5))
    def test_adjacency_rebuild(self, seed):
        rng = random.Random(200 + seed)
        g = random_graph(rng, 30, 80)
        # random deletions interleaved with re-adds
        edges = list(g.edges())
        for u, v in rng.sample(edges, 20):
            g.remove_edge(u, v)
        for u, v in rng.sample(edges, 10):
            g.add_edge(u, v)
        rebuilt = DynamicGraph()
        for v in g.vertices:
            rebuilt._ensure_vertex(v)
        for u, v in g.edges():
            rebuilt.add_edge(u, v)
        assert rebuilt._out == g._out
        assert rebuilt._in == g._in
        assert rebuilt.edge_count == g.edge_count
        assert g.edge_count == sum(g.out_degree(u) for u in g.vertices)

    def test_add_remove_roundtrip(self):
        rng = random.Random(7)
        g = random_graph(rng, 20, 50)
        pair = next((u, v) for u in range(20) for v in range(20)
                    if u != v and not g.has_edge(u, v))
        before_out = {u: list(g.out_neighbors(u)) for u in g.vertices}
        before_in = {u: list(g.in_neighbors(u)) for u in g.vertices}
        count = g.edge_count
        assert g.add_edge(*pair)
        assert g.remove_edge(*pair)
        assert g.edge_count == count
        assert {u: list(g.out_neighbors(u)) for u in g.vertices} == before_out
        assert {u: list(g.in_neighbors(u)) for u in g.vertices} == before_in
