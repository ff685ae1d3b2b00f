import json
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from monocomp import (
    ColoringMismatch,
    DuplicateEdge,
    EmptyGraph,
    IndexOutOfRange,
    coloring_from_triples,
    complete,
    degree_profile,
    dumps_canonical,
    from_edge_list,
    graph_json,
    largest_double_star,
    largest_mono_component,
    meets_conjecture_degrees,
    mono_components,
    parse_graph_json,
    uncolored_largest_double_star,
)
from monocomp.bigraph import to_edge_list
from monocomp.constructions import (
    complete_minus_circulant,
    cyclic_one_factorization,
    double_star_gap_construction,
    lower_bound_construction,
)

import oracles


def single_color(g):
    return coloring_from_triples(g.m, g.n, 1, [(x, y, 0) for x, y in g.edges()])


@st.composite
def bipartite_graphs(draw, max_side=5):
    m = draw(st.integers(1, max_side))
    n = draw(st.integers(1, max_side))
    pairs = [(x, y) for x in range(m) for y in range(n)]
    picks = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    edges = [p for p, keep in zip(pairs, picks) if keep]
    return from_edge_list(m, n, edges)


@st.composite
def colored_graphs(draw, max_side=4, max_r=3):
    g = draw(bipartite_graphs(max_side))
    r = draw(st.integers(1, max_r))
    edges = g.edges()
    colors = draw(st.lists(st.integers(0, r - 1), min_size=len(edges), max_size=len(edges)))
    col = coloring_from_triples(g.m, g.n, r, [(x, y, c) for (x, y), c in zip(edges, colors)])
    return g, col


class TestConstruction:
    def test_complete_case(self):
        g = from_edge_list(2, 2, [(0, 0), (0, 1), (1, 0), (1, 1)])
        assert g.edge_count == 4
        assert g == complete(2, 2)

    def test_star(self):
        g = from_edge_list(1, 3, [(0, 0), (0, 1), (0, 2)])
        assert g.edge_count == 3
        assert g.degree(0) == 3

    def test_duplicate_rejected(self):
        with pytest.raises(DuplicateEdge):
            from_edge_list(2, 2, [(0, 0), (0, 0)])

    def test_out_of_range(self):
        with pytest.raises(IndexOutOfRange):
            from_edge_list(2, 2, [(0, 2)])
        with pytest.raises(IndexOutOfRange):
            from_edge_list(2, 2, [(2, 0)])

    def test_complete_examples(self):
        g = complete(3, 3)
        assert g.edge_count == 9
        prof = degree_profile(g)
        assert (prof.delta_xy, prof.delta_yx) == (3, 3)
        assert (prof.avg_xy, prof.avg_yx) == (3, 3)
        assert complete(1, 1).edge_count == 1
        prof25 = degree_profile(complete(2, 5))
        assert (prof25.delta_xy, prof25.delta_yx) == (5, 2)
        with pytest.raises(EmptyGraph):
            complete(0, 3)

    @given(bipartite_graphs())
    def test_round_trip_edge_list(self, g):
        assert from_edge_list(g.m, g.n, to_edge_list(g)) == g


class TestDegreeProfile:
    def test_k44_minus_matching(self):
        g = complete_minus_circulant(4, 4, 1)
        prof = degree_profile(g)
        assert (prof.delta_xy, prof.delta_yx, prof.avg_xy, prof.avg_yx) == (3, 3, 3, 3)

    def test_k25(self):
        prof = degree_profile(complete(2, 5))
        assert (prof.delta_xy, prof.delta_yx) == (5, 2)

    def test_isolated_x_vertex(self):
        g = from_edge_list(2, 2, [(0, 0), (0, 1)])
        assert degree_profile(g).delta_xy == 0

    @given(bipartite_graphs())
    def test_averages_consistent(self, g):
        prof = degree_profile(g)
        assert prof.avg_xy * g.m == prof.avg_yx * g.n == g.edge_count
        assert 0 <= prof.delta_xy <= prof.avg_xy <= g.n or g.edge_count == 0
        assert 0 <= prof.delta_yx <= prof.avg_yx <= g.m or g.edge_count == 0


class TestComponents:
    def test_cyclic_factorization_components(self):
        host, col = cyclic_one_factorization(3)
        comps = mono_components(host, col)
        assert len(comps) == 9
        assert all(c.order == 2 for c in comps)

    def test_single_color_k22(self):
        host = complete(2, 2)
        comps = mono_components(host, single_color(host))
        assert len(comps) == 1 and comps[0].order == 4

    def test_two_matchings_k22(self):
        host = complete(2, 2)
        col = coloring_from_triples(
            2, 2, 2, [(0, 0, 0), (1, 1, 0), (0, 1, 1), (1, 0, 1)]
        )
        comps = mono_components(host, col)
        assert len(comps) == 4
        assert all(c.order == 2 for c in comps)

    def test_coloring_mismatch(self):
        host = complete(2, 2)
        col = coloring_from_triples(2, 2, 2, [(0, 0, 0), (1, 1, 1)])
        with pytest.raises(ColoringMismatch):
            mono_components(host, col)

    @given(colored_graphs())
    @settings(max_examples=60, deadline=None)
    def test_against_bfs_oracle(self, host_col):
        host, col = host_col
        comps = mono_components(host, col)
        for c in range(col.r):
            mine = sorted(
                (frozenset(comp.xs), frozenset(comp.ys))
                for comp in comps
                if comp.color == c
            )
            ref = sorted(oracles.bfs_components(host.m, host.n, col.classes[c].edges()))
            assert mine == ref

    @given(colored_graphs())
    @settings(max_examples=40, deadline=None)
    def test_deterministic_order(self, host_col):
        host, col = host_col
        comps = mono_components(host, col)
        keys = [(c.color, c.min_x) for c in comps]
        assert keys == sorted(keys)

    @given(colored_graphs())
    @settings(max_examples=60, deadline=None)
    def test_edge_endpoints_share_component(self, host_col):
        host, col = host_col
        comps = mono_components(host, col)
        for x, y, c in col.edges():
            containing = [
                comp for comp in comps if comp.color == c and x in comp.xs
            ]
            assert len(containing) == 1
            assert y in containing[0].ys


class TestLargestComponent:
    def test_single_color_k33(self):
        host = complete(3, 3)
        assert largest_mono_component(host, single_color(host)).order == 6

    def test_lower_bound_construction(self):
        host, col = lower_bound_construction(2, 1, 1)
        assert largest_mono_component(host, col).order == 2

    def test_block_coloring_k44(self):
        host = complete(4, 4)
        col = coloring_from_triples(
            4, 4, 2, [(x, y, ((x // 2) + (y // 2)) % 2) for x, y in host.edges()]
        )
        best = largest_mono_component(host, col)
        assert best.order == 4
        assert best.color == 0 and best.min_x == 0

    def test_empty_host(self):
        host = from_edge_list(2, 2, [])
        with pytest.raises(EmptyGraph):
            largest_mono_component(host, coloring_from_triples(2, 2, 1, []))


class TestDoubleStars:
    def test_single_color_k44(self):
        host = complete(4, 4)
        assert largest_double_star(host, single_color(host)).order == 8

    def test_path(self):
        g = from_edge_list(2, 1, [(0, 0), (1, 0)])
        assert uncolored_largest_double_star(g).order == 3

    def test_gap_construction(self):
        host, col = double_star_gap_construction(2, 2, 3)
        assert largest_double_star(host, col).order == 4

    def test_k13(self):
        assert uncolored_largest_double_star(complete(1, 3)).order == 4

    def test_two_disjoint_k22(self):
        g = from_edge_list(
            4,
            4,
            [(x, y) for x in range(2) for y in range(2)]
            + [(x, y) for x in range(2, 4) for y in range(2, 4)],
        )
        assert uncolored_largest_double_star(g).order == 4

    @given(bipartite_graphs())
    @settings(max_examples=80, deadline=None)
    def test_scan_oracle(self, g):
        if g.edge_count == 0:
            with pytest.raises(EmptyGraph):
                uncolored_largest_double_star(g)
            return
        star = uncolored_largest_double_star(g)
        assert star.order == oracles.brute_double_star_order(g.m, g.n, g.edges())
        # the witness edge really has that many vertices around it
        assert g.has_edge(star.center_x, star.center_y)
        ydeg = sum(1 for x in range(g.m) if g.has_edge(x, star.center_y))
        assert star.order == g.degree(star.center_x) + ydeg

    @given(colored_graphs())
    @settings(max_examples=60, deadline=None)
    def test_colored_scan_oracle(self, host_col):
        host, col = host_col
        if host.edge_count == 0:
            return
        star = largest_double_star(host, col)
        best = max(
            oracles.brute_double_star_order(host.m, host.n, cls.edges())
            for cls in col.classes
        )
        assert star.order == best

    @given(colored_graphs())
    @settings(max_examples=60, deadline=None)
    def test_component_contains_double_star(self, host_col):
        host, col = host_col
        if host.edge_count == 0:
            return
        assert (
            largest_mono_component(host, col).order
            >= largest_double_star(host, col).order
        )

    def test_density_guarantee_all_k33_subgraphs(self):
        pairs = [(x, y) for x in range(3) for y in range(3)]
        for mask in range(1, 1 << 9):
            edges = [pairs[i] for i in range(9) if (mask >> i) & 1]
            g = from_edge_list(3, 3, edges)
            star = uncolored_largest_double_star(g)
            assert star.order * 9 >= g.edge_count * 6


class TestConjectureDegrees:
    def test_k33_r2(self):
        assert meets_conjecture_degrees(complete(3, 3), 2)

    def test_lower_bound_boundary(self):
        host, _ = lower_bound_construction(2, 1, 1)
        assert not meets_conjecture_degrees(host, 2)

    def test_k44_minus_matching(self):
        assert meets_conjecture_degrees(complete_minus_circulant(4, 4, 1), 2)


class TestJson:
    def test_uncolored_round_trip(self):
        g = complete_minus_circulant(4, 4, 1)
        doc = graph_json(g)
        host, col = parse_graph_json(json.loads(dumps_canonical(doc)))
        assert host == g and col is None

    def test_colored_round_trip(self):
        host, col = cyclic_one_factorization(4)
        doc = graph_json(host, col)
        host2, col2 = parse_graph_json(json.loads(dumps_canonical(doc)))
        assert host2 == host and col2 == col

    def test_canonical_bytes_stable(self):
        host, col = cyclic_one_factorization(3)
        assert dumps_canonical(graph_json(host, col)) == dumps_canonical(
            graph_json(host, col)
        )

    @given(colored_graphs())
    @settings(max_examples=40, deadline=None)
    def test_round_trip_any(self, host_col):
        host, col = host_col
        host2, col2 = parse_graph_json(graph_json(host, col))
        assert (host2, col2) == (host, col)


class TestColoringPartition:
    @given(colored_graphs())
    @settings(max_examples=60, deadline=None)
    def test_classes_partition_host(self, host_col):
        host, col = host_col
        assert sum(cls.edge_count for cls in col.classes) == host.edge_count
        seen = set()
        for x, y, _c in col.edges():
            assert (x, y) not in seen
            seen.add((x, y))
        assert seen == set(host.edges())

    def test_overlapping_classes_rejected(self):
        with pytest.raises(DuplicateEdge):
            coloring_from_triples(2, 2, 2, [(0, 0, 0), (0, 0, 1)])
