"""List coloring, Gallai trees, SDRs, and Hall-style size bounds."""

import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from facet.choosability import (
    ListColoringError,
    SearchBudgetError,
    SimpleGraph,
    blocks,
    degree_feasible_colorable,
    is_gallai_tree,
    list_color,
    sdr,
    subset_hall_lower_bounds,
)


def cycle(n):
    return SimpleGraph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n):
    return SimpleGraph.from_edges(n, itertools.combinations(range(n), 2))


def path(n):
    return SimpleGraph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def bowtie():
    # two triangles glued at vertex 2
    return SimpleGraph.from_edges(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)])


class TestSimpleGraph:
    def test_from_edges_dedupes(self):
        g = SimpleGraph.from_edges(3, [(0, 1), (1, 0), (1, 2)])
        assert g.edges() == [(0, 1), (1, 2)]
        assert g.degree(1) == 2

    def test_loop_rejected(self):
        with pytest.raises(ListColoringError, match="loop"):
            SimpleGraph.from_edges(2, [(1, 1)])

    def test_out_of_range_rejected(self):
        with pytest.raises(ListColoringError, match="range"):
            SimpleGraph.from_edges(2, [(0, 2)])

    def test_connectivity(self):
        assert cycle(4).is_connected()
        assert not SimpleGraph.from_edges(3, [(0, 1)]).is_connected()
        assert SimpleGraph.from_edges(1, []).is_connected()


class TestBlocks:
    def test_bowtie(self):
        dec = blocks(bowtie())
        assert sorted(sorted(b) for b in dec.blocks) == [[0, 1, 2], [2, 3, 4]]
        assert dec.cut_vertices == {2}

    def test_path(self):
        dec = blocks(path(4))
        assert sorted(sorted(b) for b in dec.blocks) == [[0, 1], [1, 2], [2, 3]]
        assert dec.cut_vertices == {1, 2}

    def test_biconnected_graph_is_one_block(self):
        dec = blocks(cycle(5))
        assert dec.blocks == (frozenset(range(5)),)
        assert dec.cut_vertices == frozenset()

    def test_isolated_vertex_is_singleton_block(self):
        dec = blocks(SimpleGraph.from_edges(3, [(0, 1)]))
        assert frozenset({2}) in dec.blocks
        assert dec.cut_vertices == frozenset()


class TestGallaiTree:
    @pytest.mark.parametrize(
        "g, expect",
        [
            (complete(4), True),
            (cycle(5), True),
            (cycle(4), False),
            (bowtie(), True),
            (path(4), True),
            (SimpleGraph.from_edges(1, []), True),
        ],
    )
    def test_classification(self, g, expect):
        assert is_gallai_tree(g) is expect

    def test_needs_connected(self):
        with pytest.raises(ListColoringError, match="connected"):
            is_gallai_tree(SimpleGraph.from_edges(3, [(0, 1)]))


class TestListColor:
    def test_k3_with_pair_lists_refused(self):
        assert list_color(complete(3), [{1, 2}] * 3) is None

    def test_c4_with_pair_lists_colored(self):
        got = list_color(cycle(4), [{1, 2}] * 4)
        assert got is not None
        for v in range(4):
            assert got[v] in {1, 2}
            assert got[v] != got[(v + 1) % 4]

    def test_respects_lists(self):
        got = list_color(path(3), [{5}, {5, 6}, {6, 7}])
        assert got == {0: 5, 1: 6, 2: 7}

    def test_list_count_mismatch(self):
        with pytest.raises(ListColoringError, match="one list per vertex"):
            list_color(path(3), [{1}, {2}])

    def test_budget(self):
        with pytest.raises(SearchBudgetError):
            list_color(path(30), [{1, 2}] * 30)


class TestDegreeFeasible:
    def test_k3_tight_lists_not_guaranteed_not_colorable(self):
        guaranteed, colorable, coloring = degree_feasible_colorable(
            complete(3), [{1, 2}] * 3
        )
        assert (guaranteed, colorable, coloring) == (False, False, None)

    def test_c4_tight_lists_guaranteed_and_colored(self):
        guaranteed, colorable, coloring = degree_feasible_colorable(
            cycle(4), [{1, 2}] * 4
        )
        assert guaranteed and colorable
        assert all(coloring[v] != coloring[(v + 1) % 4] for v in range(4))

    def test_slack_forces_guarantee(self):
        # K3 again, one list strictly bigger than the degree
        guaranteed, colorable, coloring = degree_feasible_colorable(
            complete(3), [{1, 2, 3}, {1, 2}, {1, 2}]
        )
        assert guaranteed and colorable
        assert len(set(coloring.values())) == 3

    def test_list_below_degree_rejected(self):
        with pytest.raises(ListColoringError, match="smaller than its degree"):
            degree_feasible_colorable(complete(3), [{1}, {1, 2}, {1, 2}])

    def test_needs_connected(self):
        with pytest.raises(ListColoringError, match="connected"):
            degree_feasible_colorable(SimpleGraph.from_edges(2, []), [{1}, {1}])


class TestSdr:
    def test_success(self):
        picks, violator = sdr([{1, 2}, {2, 3}, {3, 1}])
        assert violator is None
        assert len(set(picks.values())) == 3
        for i, x in picks.items():
            assert x in [{1, 2}, {2, 3}, {3, 1}][i]

    def test_hall_violator(self):
        picks, violator = sdr([{1}, {1}])
        assert picks is None
        assert violator == {0, 1}

    def test_violator_is_a_real_violator(self):
        sets = [{1, 2}, {1}, {2}, {1, 2, 3}]
        picks, violator = sdr(sets)
        assert picks is None
        union = set().union(*(sets[i] for i in violator))
        assert len(union) < len(violator)

    def test_non_clique_refused(self):
        with pytest.raises(ListColoringError, match="list_color"):
            sdr([{1}, {2}], clique=False)


class TestHallBounds:
    def test_single_lists_fail_in_pairs(self):
        ok, s = subset_hall_lower_bounds([1, 1, 1])
        assert not ok
        assert len(s) == 2

    def test_disjoint_pair_rescues(self):
        assert subset_hall_lower_bounds([1, 1], [(0, 1)]) == (True, None)

    def test_three_lists_of_two(self):
        ok, s = subset_hall_lower_bounds([2, 2, 2])
        assert not ok and s == {0, 1, 2}
        ok, s = subset_hall_lower_bounds([2, 2, 2], [(0, 1)])
        assert ok and s is None

    def test_bad_pair(self):
        with pytest.raises(ValueError, match="bad disjoint pair"):
            subset_hall_lower_bounds([1, 1], [(0, 0)])
        with pytest.raises(ValueError, match="bad disjoint pair"):
            subset_hall_lower_bounds([1, 1], [(0, 9)])


def random_connected(rng, n):
    edges = [(i, rng.randrange(i)) for i in range(1, n)]
    for u, v in itertools.combinations(range(n), 2):
        if rng.random() < 0.4:
            edges.append((u, v))
    return SimpleGraph.from_edges(n, edges)


@settings(max_examples=60, deadline=None)
@given(seed=st.integers(0, 10**6), n=st.integers(2, 6))
def test_guarantee_implies_colorable(seed, n):
    rng = random.Random(seed)
    g = random_connected(rng, n)
    lists = [rng.sample(range(1, 7), g.degree(v)) for v in range(n)]
    guaranteed, colorable, coloring = degree_feasible_colorable(g, lists)
    if guaranteed:
        assert colorable
    if colorable:
        for u, v in g.edges():
            assert coloring[u] != coloring[v]
        for v in range(n):
            assert coloring[v] in set(lists[v])
