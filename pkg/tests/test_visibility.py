import json
from pathlib import Path

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import exact_visibility_edges
from published_values import EXAMPLE_DEGREES, EXAMPLE_SERIES
from vgagg import (
    ContractViolation,
    TimeSeries,
    VisibilityGraph,
    build_graph,
    build_graph_fast,
    build_graph_oracle,
    degree_distribution,
    visible,
)
from vgagg.serieslab import conway

FIXTURES = Path(__file__).parent / "fixtures"

int_series = st.lists(st.integers(-20, 20), min_size=0, max_size=40)


class TestTimeSeries:
    def test_default_abscissa_is_one_based(self):
        s = TimeSeries.from_values([3.0, 1.0, 2.0])
        assert s.t.tolist() == [1.0, 2.0, 3.0]
        assert len(s) == 3
        assert s.points[1].y == 1.0

    def test_arrays_are_read_only(self):
        s = TimeSeries.from_values([1.0, 2.0])
        with pytest.raises(ValueError):
            s.y[0] = 5.0

    @pytest.mark.parametrize("t", [[1, 1, 2], [1, 3, 2]])
    def test_rejects_non_increasing_t(self, t):
        with pytest.raises(ContractViolation):
            TimeSeries.from_values([1, 2, 3], t)

    @pytest.mark.parametrize("bad", [np.nan, np.inf, -np.inf])
    def test_rejects_non_finite(self, bad):
        with pytest.raises(ContractViolation):
            TimeSeries.from_values([1.0, bad])

    def test_length_mismatch(self):
        with pytest.raises(ContractViolation):
            TimeSeries.from_values([1, 2, 3], [1, 2])


class TestVisible:
    def test_neighbours_always_see_each_other(self):
        assert visible([1, 100, 1], 0, 1)
        assert visible([1, 100, 1], 1, 2)

    def test_blocked_by_tall_middle(self):
        assert not visible([1, 100, 1], 0, 2)

    def test_point_on_chord_blocks(self):
        assert not visible([1, 2, 3], 0, 2)

    def test_point_just_below_chord(self):
        assert visible([1, 1.999999, 3], 0, 2)

    def test_uses_abscissas(self):
        # at t=(1,2,10) the middle point lies well below the chord
        s = TimeSeries.from_values([0.0, 1.0, 9.0], [1.0, 2.0, 10.0])
        assert not visible(s, 0, 2)
        s = TimeSeries.from_values([0.0, 1.0, 9.0], [1.0, 9.0, 10.0])
        assert visible(s, 0, 2)

    @pytest.mark.parametrize("i,j", [(1, 1), (2, 1), (-1, 2), (0, 5)])
    def test_index_contract(self, i, j):
        with pytest.raises(ContractViolation):
            visible([1, 2, 3], i, j)


class TestBuildGraph:
    def test_worked_example(self):
        g = build_graph(EXAMPLE_SERIES)
        assert g.degrees == EXAMPLE_DEGREES
        assert len(g.edges) == 11

    def test_flat_series_is_a_path(self):
        g = build_graph([5, 5, 5, 5])
        assert g.edges == ((0, 1), (1, 2), (2, 3))
        assert g.degrees == (1, 2, 2, 1)

    def test_empty_and_single(self):
        assert build_graph([]).n == 0
        g = build_graph([7.0])
        assert g.edges == () and g.degrees == (0,)

    def test_convex_series_is_complete(self):
        g = build_graph([k * k for k in range(6)])
        assert len(g.edges) == 15

    def test_neighbors_sorted_and_symmetric(self):
        g = build_graph(EXAMPLE_SERIES)
        for v, nb in enumerate(g.neighbors):
            assert list(nb) == sorted(nb)
            for u in nb:
                assert v in g.neighbors[u]

    def test_edgelist_format(self):
        g = build_graph([3, 1, 2])
        assert g.to_edgelist() == "0 1\n0 2\n1 2\n"

    def test_unknown_engine(self):
        with pytest.raises(ContractViolation):
            build_graph([1, 2], engine="magic")

    def test_from_edges_canonicalises(self):
        g = VisibilityGraph.from_edges(3, [(2, 0), (1, 0)])
        assert g.edges == ((0, 1), (0, 2))
        assert g.degrees == (2, 1, 1)

    @given(int_series)
    def test_matches_exact_rational_oracle(self, values):
        expected = exact_visibility_edges(values)
        assert set(build_graph_oracle(values).edges) == expected
        assert set(build_graph_fast(values).edges) == expected

    @given(
        st.lists(st.tuples(st.integers(-10, 10), st.integers(1, 5)), min_size=0, max_size=25),
    )
    def test_irregular_abscissas_match_exact_oracle(self, pairs):
        values = [p[0] for p in pairs]
        times = list(np.cumsum([p[1] for p in pairs]))
        expected = exact_visibility_edges(values, [int(x) for x in times])
        s = TimeSeries.from_values(values, times)
        assert set(build_graph_fast(s).edges) == expected

    @given(int_series)
    def test_connected_with_adjacent_edges(self, values):
        g = build_graph(values)
        for i in range(len(values) - 1):
            assert (i, i + 1) in g.edge_set

    @given(
        int_series,
        st.integers(1, 7),
        st.integers(-9, 9),
        st.integers(1, 7),
        st.integers(-9, 9),
    )
    def test_affine_invariance(self, values, r, s, c, d):
        # integer data and coefficients keep every product exact in float64
        base = build_graph(values)
        s1 = TimeSeries.from_values([r * v + s for v in values], [c * k + d for k in range(1, len(values) + 1)])
        assert build_graph(s1).edges == base.edges


class TestDegreeDistribution:
    def test_example(self):
        assert degree_distribution(build_graph(EXAMPLE_SERIES)) == {2: 5, 3: 1, 4: 1, 5: 1}

    def test_counts_sum_to_n(self):
        g = build_graph(np.random.default_rng(3).random(100))
        assert sum(degree_distribution(g).values()) == 100

    def test_conway_regression(self):
        fixture = json.loads((FIXTURES / "conway512_degrees.json").read_text())
        g = build_graph(conway(fixture["length"]))
        assert len(g.edges) == fixture["edges"]
        assert degree_distribution(g) == {int(k): v for k, v in fixture["histogram"].items()}
