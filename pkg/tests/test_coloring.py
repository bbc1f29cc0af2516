import json
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from acyclic_coloring import (
    BichromaticCycle,
    BichromaticPath,
    EdgeAlreadyColored,
    Graph,
    NotACandidate,
    PartialEdgeColoring,
    PropernessViolation,
    UncoloredEdge,
    coloring_from_dict,
    coloring_to_dict,
    is_acyclic,
    random_k_degenerate,
)

from conftest import (
    brute_force_candidates,
    colored,
    cycle_graph,
    enumerate_critical_path,
    path_graph,
    random_proper_acyclic,
    star_graph,
)


class TestAssign:
    def test_properness_enforced_on_shared_vertex(self):
        g = path_graph(3)
        c = PartialEdgeColoring(g, 3)
        c.assign(0, 1)
        with pytest.raises(PropernessViolation):
            c.assign(1, 1)

    def test_proper_assignment_updates_f_sets(self):
        g = path_graph(3)
        c = colored(g, {0: 1, 1: 2}, 3)
        assert c.incident_colors(1) == {1, 2}
        assert c.incident_colors_minus_edge(1, 0) == {2}

    def test_unassign_inverse(self):
        g = path_graph(3)
        c = colored(g, {0: 1}, 3)
        assert c.unassign(0) == 1
        assert c.incident_colors(0) == set()
        with pytest.raises(UncoloredEdge):
            c.unassign(0)

    def test_random_ops_keep_index_consistent(self):
        rng = random.Random(0)
        g = random_k_degenerate(12, 3, 1)
        c = PartialEdgeColoring(g, 6)
        for _ in range(100):
            eid = rng.choice([e for e, _, _ in g.edges()])
            if c.is_colored(eid):
                c.unassign(eid)
            else:
                cands = sorted(c.candidate_colors(eid))
                if cands:
                    c.assign(eid, rng.choice(cands))
            assert c._index == c.rebuild_index()


class TestCandidates:
    def test_path_example(self):
        g = path_graph(3)
        c = colored(g, {0: 1}, 3)
        assert c.candidate_colors(1) == {2, 3}

    def test_isolated_edge_full_palette(self):
        g = Graph(2, [(0, 1)])
        c = PartialEdgeColoring(g, 4)
        assert c.candidate_colors(0) == {1, 2, 3, 4}

    def test_colored_edge_rejected(self):
        g = path_graph(3)
        c = colored(g, {0: 1}, 3)
        with pytest.raises(EdgeAlreadyColored):
            c.candidate_colors(0)

    def test_matches_brute_force_filter(self):
        rng = random.Random(7)
        for trial in range(50):
            g = random_k_degenerate(rng.randint(3, 10), 3, trial)
            if g.m == 0:
                continue
            c = random_proper_acyclic(g, 5, rng)
            for eid, _, _ in g.edges():
                if not c.is_colored(eid):
                    assert c.candidate_colors(eid) == brute_force_candidates(g, c, eid)


class TestMaximalBichromaticPath:
    def test_p4_full_path(self):
        g = path_graph(4)
        c = colored(g, {0: 1, 1: 2, 2: 1}, 3)
        p = c.maximal_bichromatic_path(1, 1, 2)
        assert isinstance(p, BichromaticPath)
        assert p.vertices == [0, 1, 2, 3] and len(p.edges) == 3

    def test_p4_single_edge_pair(self):
        g = path_graph(4)
        c = colored(g, {0: 1, 1: 2, 2: 1}, 3)
        p = c.maximal_bichromatic_path(1, 1, 3)
        assert isinstance(p, BichromaticPath)
        assert set(p.vertices) == {0, 1} and p.edges == [0]

    def test_alternating_cycle_detected_at_every_vertex(self):
        g = cycle_graph(4)
        c = colored(g, {0: 1, 1: 2, 2: 1, 3: 2}, 3)
        for v in range(4):
            r = c.maximal_bichromatic_path(v, 1, 2)
            assert isinstance(r, BichromaticCycle)
            assert len(r.edges) == 4

    def test_no_incident_color_returns_none(self):
        g = path_graph(4)
        c = colored(g, {0: 1, 1: 2, 2: 1}, 4)
        assert c.maximal_bichromatic_path(0, 2, 3) is None

    def test_unique_path_from_every_vertex_on_it(self):
        # One maximal path per component: queries from interior vertices
        # reconstruct the same edge set.
        rng = random.Random(3)
        for trial in range(30):
            g = random_k_degenerate(rng.randint(4, 10), 2, trial + 500)
            c = random_proper_acyclic(g, 4, rng, fill=1.0)
            for alpha in range(1, 5):
                for beta in range(alpha + 1, 5):
                    for v in g.vertices():
                        r = c.maximal_bichromatic_path(v, alpha, beta)
                        if not isinstance(r, BichromaticPath):
                            continue
                        for w in r.vertices:
                            r2 = c.maximal_bichromatic_path(w, alpha, beta)
                            assert isinstance(r2, BichromaticPath)
                            assert set(r2.edges) == set(r.edges)


class TestCriticalPath:
    def test_c4_spec_example_true(self):
        g = cycle_graph(4)  # edges: 0:ab 1:bc 2:cd 3:da
        c = colored(g, {0: 1, 1: 2, 2: 1}, 3)
        assert c.exists_critical_path(1, 2, 3, 0) is True

    def test_c4_spec_example_false_with_other_color(self):
        g = cycle_graph(4)
        c = colored(g, {0: 1, 1: 2, 2: 3}, 3)
        assert c.exists_critical_path(1, 2, 3, 0) is False

    def test_direction_symmetry(self):
        g = cycle_graph(4)
        c = colored(g, {0: 1, 1: 2, 2: 1}, 3)
        assert c.exists_critical_path(1, 2, 0, 3) is True

    def test_matches_exhaustive_enumeration(self):
        rng = random.Random(11)
        checked = 0
        for trial in range(60):
            g = random_k_degenerate(rng.randint(3, 10), 3, trial + 900)
            if g.m == 0:
                continue
            c = random_proper_acyclic(g, 4, rng)
            for _ in range(10):
                u = rng.randrange(g.n)
                nbrs = g.neighbors(u)
                if not nbrs:
                    continue
                v = rng.choice(nbrs)
                alpha, beta = rng.sample(range(1, 5), 2)
                got = c.exists_critical_path(alpha, beta, u, v)
                want = enumerate_critical_path(g, c, alpha, beta, u, v)
                assert got == want, (trial, u, v, alpha, beta)
                checked += 1
        assert checked > 300


class TestIsValidColor:
    def test_triangle_disjoint_f_sets(self):
        g = Graph(3, [(0, 1), (1, 2), (0, 2)])
        c = colored(g, {0: 1, 1: 2}, 3)
        assert c.is_valid_color(2, 3) is True

    def test_c4_closing_cycle_invalid(self):
        g = cycle_graph(4)
        c = colored(g, {0: 1, 1: 2, 2: 1}, 3)
        assert c.is_valid_color(3, 2) is False
        assert c.is_valid_color(3, 3) is True

    def test_non_candidate_rejected(self):
        g = path_graph(3)
        c = colored(g, {0: 1}, 3)
        with pytest.raises(NotACandidate):
            c.is_valid_color(1, 1)

    def test_assign_valid_color_preserves_acyclicity(self):
        rng = random.Random(23)
        for trial in range(40):
            g = random_k_degenerate(rng.randint(3, 9), 3, trial + 100)
            if g.m == 0:
                continue
            c = random_proper_acyclic(g, 5, rng)
            for eid, _, _ in g.edges():
                if c.is_colored(eid):
                    continue
                for gamma in sorted(c.candidate_colors(eid)):
                    if c.is_valid_color(eid, gamma):
                        c.assign(eid, gamma)
                        assert is_acyclic(g, c).acyclic
                        c.unassign(eid)


class TestColorExchange:
    def test_involution(self):
        g = star_graph(3)
        c = colored(g, {0: 1, 1: 2, 2: 3}, 3)
        before = [c.color_of(e) for e, _, _ in g.edges()]
        c.color_exchange(0, 1, 2)
        c.color_exchange(0, 1, 2)
        assert [c.color_of(e) for e, _, _ in g.edges()] == before

    def test_star_exchange_proper_and_valid(self):
        g = star_graph(3)
        c = colored(g, {0: 1, 1: 2, 2: 3}, 3)
        proper, valid = c.color_exchange(0, 1, 2)
        assert proper and valid

    def test_improper_exchange_reported_and_revertible(self):
        # u=0 center; edge 0-1 gets color 2 after the swap, but vertex 1
        # already sees color 2 on edge 1-3.
        g = Graph(4, [(0, 1), (0, 2), (1, 3)])
        c = colored(g, {0: 1, 1: 2, 2: 2}, 3)
        proper, valid = c.color_exchange(0, 1, 2)
        assert not proper and not valid
        proper2, _ = c.color_exchange(0, 1, 2)
        assert proper2
        assert c.color_of(0) == 1 and c.color_of(1) == 2
        assert c._index == c.rebuild_index()

    def test_validity_flag_matches_full_recheck(self):
        rng = random.Random(31)
        for trial in range(60):
            g = random_k_degenerate(rng.randint(4, 9), 3, trial + 700)
            c = random_proper_acyclic(g, 4, rng, fill=1.0)
            u = rng.randrange(g.n)
            nbrs = [
                w for w in g.neighbors(u) if c.is_colored(g.edge_between(u, w))
            ]
            if len(nbrs) < 2:
                continue
            a, b = rng.sample(nbrs, 2)
            proper, valid = c.color_exchange(u, a, b)
            report = is_acyclic(g, c)
            assert proper == report.proper
            assert valid == (report.proper and report.acyclic)
            c.color_exchange(u, a, b)  # restore

    def test_uncolored_edge_rejected(self):
        g = star_graph(3)
        c = colored(g, {0: 1}, 3)
        with pytest.raises(UncoloredEdge):
            c.color_exchange(0, 1, 2)


class TestIsAcyclic:
    def test_path_acyclic(self):
        g = path_graph(4)
        c = colored(g, {0: 1, 1: 2, 2: 1}, 3)
        r = is_acyclic(g, c)
        assert r.proper and r.acyclic and r.colors_used == 2

    def test_alternating_c4_cycle_witness(self):
        g = cycle_graph(4)
        c = colored(g, {0: 1, 1: 2, 2: 1, 3: 2}, 3)
        r = is_acyclic(g, c)
        assert not r.acyclic
        assert len(r.cycle.edges) == 4
        assert set(r.cycle.colors) == {1, 2}

    def test_c4_with_three_colors_acyclic(self):
        g = cycle_graph(4)
        c = colored(g, {0: 1, 1: 2, 2: 1, 3: 3}, 3)
        assert is_acyclic(g, c).acyclic

    def test_partial_coloring_ignores_uncolored(self):
        g = cycle_graph(4)
        c = colored(g, {0: 1, 1: 2, 2: 1}, 3)
        assert is_acyclic(g, c).acyclic

    def test_improper_coloring_reported(self):
        g = path_graph(3)
        c = PartialEdgeColoring(g, 3)
        c._assignment[0] = 1
        c._assignment[1] = 1
        c._index = c.rebuild_index()
        r = is_acyclic(g, c)
        assert not r.proper and r.improper_vertex == 1


class TestSerialization:
    def test_round_trip(self):
        g = cycle_graph(4)
        c = colored(g, {0: 1, 1: 2, 2: 1}, 7)
        data = coloring_to_dict(g, c)
        assert data["schema"] == 1 and data["palette"] == 7
        assert data["edges"][3] == [3, 0, 0]  # uncolored -> 0
        g2, c2 = coloring_from_dict(json.loads(json.dumps(data)))
        assert g2 == g
        assert [c2.color_of(e) for e, _, _ in g2.edges()] == [1, 2, 1, None]

    def test_corrupted_coloring_loads_for_verification(self):
        data = {"palette": 2, "edges": [[0, 1, 1], [1, 2, 1]]}
        g, c = coloring_from_dict(data)
        r = is_acyclic(g, c)
        assert not r.proper


@settings(max_examples=40, deadline=None)
@given(
    seed=st.integers(min_value=0, max_value=10_000),
    palette=st.integers(min_value=2, max_value=6),
)
def test_bicolored_subgraphs_have_degree_at_most_two(seed, palette):
    rng = random.Random(seed)
    g = random_k_degenerate(rng.randint(2, 12), 3, seed)
    c = random_proper_acyclic(g, palette, rng, fill=1.0)
    for v in g.vertices():
        colors = [
            c.color_of(eid) for _, eid in g.incident(v) if c.is_colored(eid)
        ]
        assert len(colors) == len(set(colors))  # properness == degree bound
