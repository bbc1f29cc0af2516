import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from acyclic_coloring import (
    EmptyGraph,
    Graph,
    GraphError,
    NotKDegenerate,
    degeneracy,
    find_low_degree_edge,
    find_special_edge,
    format_edge_list,
    is_k_degenerate,
    parse_edge_list,
    random_k_degenerate,
)

from conftest import complete_graph, cycle_graph, path_graph, star_graph


class TestConstruction:
    def test_rejects_self_loop(self):
        with pytest.raises(GraphError):
            Graph(3, [(0, 0)])

    def test_rejects_parallel_edge(self):
        with pytest.raises(GraphError):
            Graph(3, [(0, 1), (1, 0)])

    def test_rejects_out_of_range(self):
        with pytest.raises(GraphError):
            Graph(2, [(0, 5)])

    def test_edge_ids_follow_insertion_order(self):
        g = Graph(4, [(0, 1), (1, 2), (2, 3)])
        assert [g.endpoints(e) for e in range(3)] == [(0, 1), (1, 2), (2, 3)]
        assert g.edge_between(2, 1) == 1

    def test_isolated_vertices_allowed(self):
        g = Graph(5, [(0, 1)])
        assert g.n == 5 and g.m == 1 and g.degree(4) == 0


class TestDegeneracy:
    def test_tree_is_one_degenerate(self):
        g = Graph(5, [(0, 1), (0, 2), (1, 3), (1, 4)])
        assert degeneracy(g)[0] == 1

    def test_cycle_is_two_degenerate(self):
        assert degeneracy(cycle_graph(4))[0] == 2

    def test_k5_is_four_degenerate(self):
        assert degeneracy(complete_graph(5))[0] == 4

    def test_empty_graph(self):
        assert degeneracy(Graph(0))[0] == 0
        assert degeneracy(Graph(3))[0] == 0

    def test_decomposition_invariants(self):
        g = random_k_degenerate(40, 3, 5)
        k, decomp = degeneracy(g)
        assert sorted(decomp.order) == list(range(40))
        assert decomp.degeneracy == k
        position = {v: i for i, v in enumerate(decomp.order)}
        back = [
            sum(1 for w in g.neighbors(v) if position[w] > position[v])
            for v in g.vertices()
        ]
        assert max(back) == k  # bounded by k and attained (minimality)

    def test_degeneracy_at_most_max_degree(self):
        for seed in range(20):
            g = random_k_degenerate(25, 4, seed)
            assert degeneracy(g)[0] <= max(g.max_degree(), 0)


class TestLowDegreeEdge:
    def test_star(self):
        x, y = find_low_degree_edge(star_graph(5), 3)
        assert (x, y) == (1, 0) and star_graph(5).degree(x) == 1

    def test_k4_any_edge(self):
        g = complete_graph(4)
        x, y = find_low_degree_edge(g, 3)
        assert g.degree(x) == 3

    def test_path_low_endpoint(self):
        assert find_low_degree_edge(path_graph(3), 1) == (0, 1)

    def test_empty_graph_raises(self):
        with pytest.raises(EmptyGraph):
            find_low_degree_edge(Graph(3), 1)

    def test_not_degenerate_raises(self):
        with pytest.raises(NotKDegenerate):
            find_low_degree_edge(complete_graph(5), 3)


def special_edge_postcondition(g: Graph, k: int, x: int, y: int) -> bool:
    """Independent recheck of the special-edge contract."""
    if g.edge_between(x, y) is None or g.degree(x) > k:
        return False
    high = sum(1 for z in g.neighbors(y) if g.degree(z) > k)
    if high > k:
        return False
    return g.degree(x) == min(g.degree(z) for z in g.neighbors(y))


class TestSpecialEdge:
    def test_star(self):
        g = star_graph(5)
        x, y = find_special_edge(g, 3)
        assert special_edge_postcondition(g, 3, x, y)
        assert g.degree(x) == 1

    def test_k4(self):
        g = complete_graph(4)
        x, y = find_special_edge(g, 3)
        assert special_edge_postcondition(g, 3, x, y)

    def test_random_postcondition(self):
        g = random_k_degenerate(20, 3, 7)
        x, y = find_special_edge(g, 3)
        assert special_edge_postcondition(g, 3, x, y)

    def test_peel_to_empty_with_special_edges(self):
        g = random_k_degenerate(30, 3, 11)
        m = g.m
        for _ in range(m):
            x, y = find_special_edge(g, 3)
            g.remove_edge(g.edge_between(x, y))
        assert g.m == 0


class TestRemoveRestore:
    def test_round_trip_identity(self):
        g = cycle_graph(4)
        snapshot = g.copy()
        g.remove_edge(2)
        g.restore_edge(2)
        assert g == snapshot

    def test_remove_updates_counts(self):
        g = complete_graph(4)
        eid = g.edge_between(0, 1)
        g.remove_edge(eid)
        assert g.m == 5 and g.degree(0) == 2
        with pytest.raises(KeyError):
            g.remove_edge(eid)

    def test_peel_with_low_degree_edges_terminates(self):
        # No dead end: exactly m removals, across 1000 seeded graphs.
        for k in range(1, 9):
            for seed in range(125):
                g = random_k_degenerate(4 + seed % 15, k, seed * 7 + k)
                m = g.m
                for _ in range(m):
                    x, y = find_low_degree_edge(g, k)
                    g.remove_edge(g.edge_between(x, y))
                assert g.m == 0


class TestEdgeListFormat:
    def test_parse_with_comments_and_blanks(self):
        text = "# header\n0 1\n\n1 2\n# trailing\n\n"
        g = parse_edge_list(text)
        assert g.n == 3 and g.m == 2

    def test_parse_crlf(self):
        g = parse_edge_list("0 1\r\n1 2\r\n")
        assert g.m == 2

    def test_parse_errors(self):
        for text in ("0\n", "0 1 2\n", "a b\n", "-1 2\n", "0 0\n", "0 1\n0 1\n"):
            with pytest.raises(GraphError):
                parse_edge_list(text)

    def test_round_trip(self):
        # The text format cannot carry trailing isolated vertices, so
        # compare the edge lists (ids, endpoints and order all survive).
        g = random_k_degenerate(15, 3, 3)
        g2 = parse_edge_list(format_edge_list(g))
        assert list(g2.edges()) == list(g.edges())

    def test_empty(self):
        assert parse_edge_list("# nothing\n").n == 0
        assert format_edge_list(Graph(3)) == ""


@settings(max_examples=60, deadline=None)
@given(
    n=st.integers(min_value=2, max_value=30),
    k=st.integers(min_value=1, max_value=6),
    seed=st.integers(min_value=0, max_value=10_000),
)
def test_random_graphs_parse_format_round_trip(n, k, seed):
    g = random_k_degenerate(n, k, seed)
    g2 = parse_edge_list(format_edge_list(g))
    assert list(g2.edges()) == list(g.edges())


@settings(max_examples=60, deadline=None)
@given(
    n=st.integers(min_value=1, max_value=40),
    seed=st.integers(min_value=0, max_value=10_000),
)
def test_random_trees_are_one_degenerate(n, seed):
    rng = random.Random(seed)
    edges = [(rng.randrange(i), i) for i in range(1, n)]
    g = Graph(n, edges)
    assert degeneracy(g)[0] == (1 if n > 1 else 0)
    assert is_k_degenerate(g, 1) or n == 1
