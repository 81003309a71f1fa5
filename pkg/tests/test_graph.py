"""Graph construction, twin machinery, and structural queries."""

import pytest

from rlid import (
    BudgetExceeded,
    GraphError,
    are_twins,
    bipartition,
    build_graph,
    degeneracy,
    is_isomorphic,
    is_twin_free,
    join,
    max_clique_size,
    quotient,
    twin_partition,
)
from rlid.families import g_star, power_path, prop1_graph
from rlid.graph import bits
from rlid.solvers import Budget

from _helpers import complete, cycle, path, star_graph
from _oracles import closed_neighborhoods


class TestBuildGraph:
    def test_p4_closed_neighborhood(self):
        g = path(4)
        assert set(bits(g.closed[1])) == {0, 1, 2}

    def test_singleton(self):
        g = build_graph(1, [])
        assert g.n == 1
        assert set(bits(g.closed[0])) == {0}

    def test_duplicate_edges_collapse(self):
        g = build_graph(3, [(0, 1), (1, 0), (1, 2)])
        assert g.edge_count == 2

    def test_self_loop_rejected_naming_the_pair(self):
        with pytest.raises(GraphError, match="2"):
            build_graph(3, [(0, 1), (2, 2)])

    def test_out_of_range_vertex_rejected(self):
        with pytest.raises(GraphError):
            build_graph(3, [(0, 3)])


class TestTwins:
    def test_complete_graph_vertices_are_twins(self):
        assert are_twins(complete(4), 0, 1)

    def test_c4_opposite_vertices_are_not_twins(self):
        # 0 lies in N[0] but not in N[2]
        assert not are_twins(cycle(4), 0, 2)

    def test_p4_middle_vertices_are_not_twins(self):
        assert not are_twins(path(4), 1, 2)

    def test_k4_single_class(self):
        part = twin_partition(complete(4))
        assert part.classes == ((0, 1, 2, 3),)
        assert part.t == 1

    def test_p4_all_singletons(self):
        part = twin_partition(path(4))
        assert len(part.classes) == 4
        assert part.t == 0

    def test_k4_plus_pendant(self):
        g = build_graph(5, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (0, 4)])
        part = twin_partition(g)
        assert set(map(frozenset, part.classes)) == {
            frozenset({0}),
            frozenset({4}),
            frozenset({1, 2, 3}),
        }
        assert part.t == 1

    @pytest.mark.parametrize("n", range(2, 6))
    def test_quotient_of_complete_graph_is_k1(self, n):
        q, part = quotient(complete(n))
        assert q.n == 1
        assert part.t == 1

    def test_quotient_of_twin_free_graph_is_identity(self):
        q, part = quotient(path(4))
        assert part.t == 0
        assert is_isomorphic(q, path(4))

    def test_quotient_output_is_twin_free(self):
        g = build_graph(5, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (0, 4)])
        q, _ = quotient(g)
        assert is_twin_free(q)

    def test_twin_classes_match_closed_neighborhood_fibers(self):
        # brute-force cross-check of the class definition on one graph
        g = build_graph(6, [(0, 1), (0, 2), (1, 2), (2, 3), (3, 4), (3, 5), (4, 5)])
        closed = closed_neighborhoods(6, list(g.edges()))
        part = twin_partition(g)
        for u in range(6):
            for v in range(u + 1, 6):
                same = part.representative_map[u] == part.representative_map[v]
                assert same == (closed[u] == closed[v])


class TestCliqueAndBipartition:
    def test_k5(self):
        assert max_clique_size(complete(5)) == 5

    def test_c5_triangle_free(self):
        assert max_clique_size(cycle(5)) == 2

    def test_h2_clique_is_the_power_set_block(self):
        from rlid.families import h_p

        assert max_clique_size(h_p(2).graph) == 4

    def test_clique_budget_exhaustion_raises(self):
        with pytest.raises(BudgetExceeded):
            max_clique_size(complete(12), Budget(max_nodes=3))

    def test_c6_sides(self):
        assert bipartition(cycle(6)) == (frozenset({0, 2, 4}), frozenset({1, 3, 5}))

    def test_c5_has_no_bipartition(self):
        assert bipartition(cycle(5)) is None

    def test_star_sides(self):
        got = bipartition(star_graph(3))
        assert got == (frozenset({0}), frozenset({1, 2, 3}))


class TestDegeneracyJoinIso:
    @pytest.mark.parametrize("tree", [path(5), star_graph(4)])
    def test_tree_degeneracy_one(self, tree):
        k, order = degeneracy(tree)
        assert k == 1
        assert sorted(order) == list(range(tree.n))

    def test_gadget_degeneracy_two(self):
        assert degeneracy(g_star(complete(5)).graph)[0] == 2

    def test_k5_degeneracy(self):
        assert degeneracy(complete(5))[0] == 4

    def test_join_k1_with_two_isolated_vertices_is_p3(self):
        got = join(complete(1), build_graph(2, []))
        assert is_isomorphic(got, path(3))

    def test_join_k1_k1_is_k2(self):
        assert is_isomorphic(join(complete(1), complete(1)), complete(2))

    def test_join_adds_universal_vertex(self):
        fan = join(complete(1), power_path(2))
        assert fan.n == 5
        assert fan.degree(0) == 4

    def test_power_path_2_is_p4(self):
        assert is_isomorphic(path(4), power_path(2))

    def test_c4_p4_not_isomorphic(self):
        assert not is_isomorphic(cycle(4), path(4))

    @pytest.mark.parametrize("g", [path(4), cycle(5), complete(4), star_graph(3)])
    def test_identity(self, g):
        assert is_isomorphic(g, g)


def test_quotient_of_prop1_instance_matches_gadget_of_k7():
    inst = prop1_graph(4)
    q, part = quotient(inst.graph)
    assert part.t == 3
    assert is_isomorphic(q, g_star(complete(7)).graph)
