"""Certified bounds and the full-palette characterization."""

import pytest

from rlid import (
    GraphError,
    bounds_report,
    build_graph,
    characterize_full_palette,
    chi_exact,
    join,
    lower_bound_log_omega,
    split_lower_bound,
)
from rlid.families import find_split_partition, h_p, power_path, q1, q2
from rlid.solvers import enumerate_graphs

from _helpers import complete, cycle, path


class TestLogOmegaLowerBound:
    def test_h2(self):
        assert lower_bound_log_omega(h_p(2).graph) == 3

    @pytest.mark.parametrize("n", range(1, 6))
    def test_complete_graphs_collapse_to_one(self, n):
        assert lower_bound_log_omega(complete(n)) == 1

    def test_quotient_clique_five(self):
        # K_5 with a pendant on every vertex is twin-free, quotient = itself
        edges = [(i, j) for i in range(5) for j in range(i + 1, 5)]
        edges += [(i, i + 5) for i in range(5)]
        g = build_graph(10, edges)
        assert lower_bound_log_omega(g) == 4


class TestBoundsReport:
    def test_p4_exact_three(self):
        r = bounds_report(path(4))
        assert (3, "no-two-rule") in r.lower_bounds
        assert (3, "bipartite-3") in r.upper_bounds
        assert r.exact == 3

    def test_q2_split_bounds_present(self):
        r = bounds_report(q2(3).graph)
        assert (4, "split-log-omega-plus-2") in r.lower_bounds
        assert (5, "split-omega-plus-2") in r.upper_bounds
        assert r.best_lower == 4
        assert chi_exact(q2(3).graph, "rlid").value == 4

    def test_k5_exact_one(self):
        r = bounds_report(complete(5))
        assert (1, "one-color-rule") in r.lower_bounds
        assert r.exact == 1

    def test_order_bound_always_present(self):
        r = bounds_report(cycle(5))
        assert (5, "order-n") in r.upper_bounds

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_soundness_on_all_small_connected_graphs(self, n):
        for g in enumerate_graphs(n, lambda g: g.is_connected()):
            r = bounds_report(g)
            truth = chi_exact(g, "rlid", search_two=True).value
            assert r.best_lower <= truth <= r.best_upper


class TestFullPaletteCharacterization:
    def test_p3_is_extremal(self):
        assert characterize_full_palette(path(3))
        assert chi_exact(path(3), "rlid").value == 3

    def test_fan_is_extremal(self):
        fan = join(complete(1), power_path(2))
        assert characterize_full_palette(fan)
        assert chi_exact(fan, "rlid").value == 5

    def test_c5_is_not(self):
        assert not characterize_full_palette(cycle(5))
        assert chi_exact(cycle(5), "rlid").value < 5

    def test_rejects_twins(self):
        with pytest.raises(GraphError):
            characterize_full_palette(complete(3))

    def test_rejects_disconnected(self):
        with pytest.raises(GraphError):
            characterize_full_palette(build_graph(4, [(0, 1), (2, 3)]))


class TestSplitLowerBound:
    @pytest.mark.parametrize(
        "inst,want",
        [(q1(3), 4), (q2(3), 4), (q2(4), 4)],
        ids=["q1-3", "q2-3", "q2-4"],
    )
    def test_values(self, inst, want):
        part = find_split_partition(inst.graph)
        assert part is not None
        assert split_lower_bound(inst.graph, part) == want

    def test_rejects_non_split_input(self):
        with pytest.raises(GraphError):
            split_lower_bound(cycle(4), None)
