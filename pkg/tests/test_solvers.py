"""Exact decision and optimization procedures against the brute oracle."""

import pytest

from rlid import (
    Budget,
    BudgetExceeded,
    GraphError,
    build_graph,
    chi_exact,
    decide_k_proper,
    decide_k_rlid,
    enumerate_graphs,
    gamma_id_exact,
    is_identifying_code,
    is_rlid,
    random_split_graph,
)
from rlid.families import h_p

from _helpers import complete, cycle, path, star_graph
from _oracles import brute_bipartite, brute_chi, brute_connected, brute_is_rlid


class TestDecide:
    def test_triangle_with_one_color(self):
        c = decide_k_rlid(complete(3), 1)
        assert c is not None
        assert c.colors == (1, 1, 1)

    def test_p4_two_colors_absent(self):
        assert decide_k_rlid(path(4), 2) is None

    def test_c4_three_colors_witness_verifies(self):
        c = decide_k_rlid(cycle(4), 3)
        assert c is not None
        assert c.palette <= 3
        assert is_rlid(cycle(4), c)

    def test_budget_exhaustion_distinct_from_absent(self):
        with pytest.raises(BudgetExceeded):
            decide_k_rlid(cycle(7), 3, Budget(max_nodes=2))

    def test_deterministic_witness(self):
        a = decide_k_rlid(cycle(5), 3)
        b = decide_k_rlid(cycle(5), 3)
        assert a == b


class TestChiExact:
    def test_p3(self):
        res = chi_exact(path(3), "rlid")
        assert (res.parameter, res.value, res.status) == ("rlid", 3, "exact")
        assert is_rlid(path(3), res.witness)

    def test_h2(self):
        assert chi_exact(h_p(2).graph, "rlid").value == 3

    def test_k4_chromatic(self):
        assert chi_exact(complete(4), "chromatic").value == 4

    def test_unknown_parameter_rejected(self):
        with pytest.raises(GraphError):
            chi_exact(path(3), "nope")

    def test_empty_graph(self):
        assert chi_exact(build_graph(0, []), "rlid").value == 0

    @pytest.mark.parametrize("g", [path(4), cycle(5), star_graph(3)])
    def test_two_color_skip_agrees_with_slow_path(self, g):
        assert chi_exact(g, "rlid").value == chi_exact(g, "rlid", search_two=True).value

    def test_budget_exceeded_status(self):
        res = chi_exact(cycle(7), "rlid", Budget(max_nodes=2))
        assert res.status == "budget-exceeded"
        assert res.value is None

    @pytest.mark.parametrize(
        "g",
        [path(4), cycle(4), cycle(5), star_graph(4), complete(4)],
    )
    def test_rlid_matches_brute_force(self, g):
        want = brute_chi(g.n, list(g.edges()), brute_is_rlid)
        assert chi_exact(g, "rlid", search_two=True).value == want


class TestGammaId:
    def test_p4_value_and_witness(self):
        res = gamma_id_exact(path(4))
        assert res.value == 3
        assert res.parameter == "gamma-id"
        assert len(res.witness) == 3
        assert is_identifying_code(path(4), res.witness)

    def test_p4_alternative_code_is_also_optimal(self):
        # the inner triple is a valid optimum too; ties break by index
        assert is_identifying_code(path(4), frozenset({1, 2, 3}))

    def test_k2_twins_error(self):
        with pytest.raises(GraphError, match="twin"):
            gamma_id_exact(complete(2))

    def test_c4(self):
        assert gamma_id_exact(cycle(4)).value == 3


class TestEnumerate:
    def test_three_vertex_connected_count(self):
        assert sum(1 for _ in enumerate_graphs(3, lambda g: g.is_connected())) == 4

    def test_two_vertex_total(self):
        assert sum(1 for _ in enumerate_graphs(2)) == 2

    def test_connected_bipartite_count_matches_oracle(self):
        from rlid import bipartition

        from _oracles import all_labeled_graphs

        want = sum(
            1
            for edges in all_labeled_graphs(5)
            if brute_connected(5, edges) and brute_bipartite(5, edges)
        )
        got = sum(
            1
            for _ in enumerate_graphs(
                5, lambda g: g.is_connected() and bipartition(g) is not None
            )
        )
        assert got == want

    def test_order_cap(self):
        with pytest.raises(GraphError):
            next(enumerate_graphs(8))

    def test_up_to_iso_reduces_three_vertex_connected(self):
        reps = list(enumerate_graphs(3, lambda g: g.is_connected(), up_to_iso=True))
        assert len(reps) == 2  # the path and the triangle


class TestRandomSplit:
    def test_deterministic_for_fixed_seed(self):
        g1, p1 = random_split_graph(1, 3, 2, 0.5)
        g2, p2 = random_split_graph(1, 3, 2, 0.5)
        assert g1.adj == g2.adj
        assert (p1.clique, p1.stable) == (p2.clique, p2.stable)

    def test_isolated_stable_vertex_rewired(self):
        g, part = random_split_graph(9, 1, 1, 0)
        assert g.n == 2
        assert g.edge_count == 1

    def test_sides_validate(self):
        g, part = random_split_graph(5, 4, 3, 0.4)
        for u in part.clique:
            for v in part.clique:
                if u != v:
                    assert g.has_edge(u, v)
        for u in part.stable:
            for v in part.stable:
                if u != v:
                    assert not g.has_edge(u, v)

    def test_twin_free_flag(self):
        from rlid import is_twin_free

        g, _ = random_split_graph(3, 4, 4, 0.5, twin_free=True)
        assert is_twin_free(g)

    def test_size_preconditions(self):
        with pytest.raises(GraphError):
            random_split_graph(1, 0, 3, 0.5)
        with pytest.raises(GraphError):
            random_split_graph(1, 3, 0, 0.5)


def test_proper_decider_matches_known_chromatic_numbers():
    assert decide_k_proper(cycle(5), 2) is None
    assert decide_k_proper(cycle(5), 3) is not None
    assert decide_k_proper(complete(4), 3) is None
