import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from edgex import (
    EdgeColoring,
    bipartition,
    demand_list_color,
    build_graph,
    complete_bipartite,
    cycle,
    exact_list_color,
    galvin_list_color,
    konig_color,
    make_list_assignment,
    max_degree,
    one_factorization,
    path,
    star,
    verify_proper,
)
from edgex.coloring import ListAssignment
from edgex.errors import (
    DemandViolationError,
    ListTooShortError,
    MissingEdgeError,
    NotBipartiteError,
    OddOrderError,
)

from helpers import (
    brute_force_list_coloring,
    connected_bipartite_catalog,
    enumerate_all_list_colorings,
    random_connected_bipartite,
    small_bipartite_graphs,
)

CATALOG = connected_bipartite_catalog(7)


def delta_lists(g, universe=None):
    """Every edge gets the same list 1..max_degree (or a given universe)."""
    colors = universe if universe is not None else tuple(range(1, max_degree(g) + 1))
    return make_list_assignment(g, {e: colors for e in g.edges})


@st.composite
def bipartite_graphs(draw, max_n=7):
    n = draw(st.integers(min_value=2, max_value=max_n))
    side = draw(st.lists(st.booleans(), min_size=n, max_size=n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n) if side[u] != side[v]]
    edges = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return build_graph([f"v{i}" for i in range(n)], edges)


@given(bipartite_graphs())
@settings(max_examples=80)
def test_konig_proper_with_tight_palette(g):
    col = konig_color(g)
    assert verify_proper(g, col).ok
    assert col.palette_size == max_degree(g)


@given(bipartite_graphs(), st.integers(min_value=0, max_value=3))
@settings(max_examples=60)
def test_galvin_from_shifted_delta_lists(g, shift):
    delta = max_degree(g)
    lists = delta_lists(g, tuple(range(1 + shift, delta + 1 + shift)))
    col = galvin_list_color(g, lists)
    assert verify_proper(g, col, lists).ok


class TestKonig:
    def test_c6_two_colors(self):
        g = cycle(6)
        col = konig_color(g)
        assert col.palette_size == 2
        assert verify_proper(g, col).ok
        assert set(col.assignment.values()) == {1, 2}

    def test_k33_three_perfect_matchings(self):
        g = complete_bipartite(3, 3)
        col = konig_color(g)
        assert col.palette_size == 3
        assert verify_proper(g, col).ok
        for c in (1, 2, 3):
            cls = [e for e, cc in col.assignment.items() if cc == c]
            assert len(cls) == 3
            assert len({v for e in cls for v in e}) == 6

    def test_edgeless(self):
        g = build_graph("abc", [])
        col = konig_color(g)
        assert col.palette_size == 0
        assert col.assignment == {}

    def test_rejects_odd_cycle(self):
        with pytest.raises(NotBipartiteError):
            konig_color(cycle(5))

    def test_exhaustive_small_bipartite(self):
        for g in small_bipartite_graphs(5):
            col = konig_color(g)
            assert verify_proper(g, col).ok
            assert col.palette_size == max_degree(g)
            used = set(col.assignment.values())
            assert used <= set(range(1, max_degree(g) + 1))

    def test_catalog_and_random_samples(self):
        rng = random.Random(1)
        graphs = CATALOG + [random_connected_bipartite(rng) for _ in range(40)]
        for g in graphs:
            col = konig_color(g)
            assert verify_proper(g, col).ok
            assert col.palette_size == max_degree(g)

    def test_deterministic(self):
        g = complete_bipartite(3, 4)
        assert konig_color(g) == konig_color(g)


class TestGalvin:
    def test_single_edge_odd_list(self):
        g = path(2)
        col = galvin_list_color(g, make_list_assignment(g, {(0, 1): (7,)}))
        assert col.assignment == {(0, 1): 7}

    def test_c4_lists_12(self):
        g = cycle(4)
        lists = delta_lists(g)
        # oracle first: of the 16 assignments from {1,2}^4 exactly 2 are proper
        proper = enumerate_all_list_colorings(g, lists)
        assert len(proper) == 2
        col = galvin_list_color(g, lists)
        assert col.assignment in proper

    def test_p3_staggered_lists(self):
        g = path(3)
        lists = make_list_assignment(g, {(0, 1): (1, 2), (1, 2): (2, 3)})
        proper = enumerate_all_list_colorings(g, lists)
        assert len(proper) == 3  # (1,2) (1,3) (2,3)
        col = galvin_list_color(g, lists)
        assert col.assignment in proper

    def test_rejects_short_lists(self):
        g = star(3)
        with pytest.raises(ListTooShortError):
            galvin_list_color(g, ListAssignment(lists={e: (1, 2) for e in g.edges}, demand={}))

    def test_rejects_non_bipartite(self):
        g = cycle(3)
        with pytest.raises(NotBipartiteError):
            galvin_list_color(g, ListAssignment(lists={e: (1, 2, 3) for e in g.edges}, demand={}))

    def test_catalog_random_lists_proper_and_in_list(self):
        rng = random.Random(2)
        for g in CATALOG:
            delta = max_degree(g)
            for _ in range(5):
                lists = make_list_assignment(
                    g,
                    {e: rng.sample(range(1, delta + 4), delta) for e in g.edges},
                )
                col = galvin_list_color(g, lists)
                assert verify_proper(g, col, lists).ok
                # same satisfiability verdict as the complete engine
                assert exact_list_color(g, lists) is not None

    def test_heterogeneous_list_sizes(self):
        rng = random.Random(13)
        for _ in range(40):
            g = random_connected_bipartite(rng, max_n=9)
            delta = max_degree(g)
            lists = make_list_assignment(
                g,
                {
                    e: rng.sample(range(1, delta + 5), rng.randint(delta, delta + 3))
                    for e in g.edges
                },
            )
            col = galvin_list_color(g, lists)
            assert verify_proper(g, col, lists).ok

    def test_deterministic(self):
        g = complete_bipartite(2, 3)
        lists = delta_lists(g, (2, 4, 6, 8))
        assert galvin_list_color(g, lists) == galvin_list_color(g, lists)


class TestExactListColor:
    def test_p3_same_singleton_lists_unsat(self):
        g = path(3)
        lists = make_list_assignment(g, {(0, 1): (1,), (1, 2): (1,)})
        assert exact_list_color(g, lists) is None

    def test_star_forced_unique(self):
        g = star(3)
        lists = make_list_assignment(g, {(0, 1): (1,), (0, 2): (2,), (0, 3): (3,)})
        col = exact_list_color(g, lists)
        assert col.assignment == {(0, 1): 1, (0, 2): 2, (0, 3): 3}

    def test_agrees_with_enumeration_oracle(self):
        rng = random.Random(3)
        for g in CATALOG:
            if len(g.edges) > 6:
                continue
            for _ in range(4):
                lists = make_list_assignment(
                    g,
                    {e: rng.sample(range(1, 5), rng.randint(1, 3)) for e in g.edges},
                )
                every = enumerate_all_list_colorings(g, lists)
                got = exact_list_color(g, lists)
                if every:
                    assert got is not None
                    assert got.assignment in every
                else:
                    assert got is None

    def test_works_on_odd_cycles_too(self):
        g = cycle(5)
        lists = make_list_assignment(g, {e: (1, 2, 3) for e in g.edges})
        col = exact_list_color(g, lists)
        assert col is not None and verify_proper(g, col, lists).ok

    def test_agrees_on_every_four_vertex_graph(self):
        # all 64 labeled graphs on 4 vertices, bipartite or not
        rng = random.Random(12)
        pairs = [(u, v) for u in range(4) for v in range(u + 1, 4)]
        for mask in range(1 << len(pairs)):
            edges = [pairs[i] for i in range(len(pairs)) if mask >> i & 1]
            g = build_graph("abcd", edges)
            if not g.edges:
                continue
            lists = make_list_assignment(
                g, {e: rng.sample(range(1, 5), rng.randint(1, 3)) for e in g.edges}
            )
            every = enumerate_all_list_colorings(g, lists)
            got = exact_list_color(g, lists)
            assert (got is None) == (not every)
            if got is not None:
                assert got.assignment in every

    def test_deterministic(self):
        g = cycle(6)
        lists = delta_lists(g, (1, 2, 3))
        assert exact_list_color(g, lists) == exact_list_color(g, lists)


class TestBkw:
    def test_p4_demand_sized_lists(self):
        g = path(4)
        lists = make_list_assignment(
            g, {e: range(1, max(g.degree(e[0]), g.degree(e[1])) + 1) for e in g.edges}
        )
        col = demand_list_color(g, lists)
        assert verify_proper(g, col, lists).ok
        for e in g.edges:
            assert col.assignment[e] <= lists.demand[e]

    def test_deficient_list_below_delta_succeeds(self):
        # star with a pendant path: edge (1,4) has both endpoints of degree
        # <= 2, so its demand-2 list stays below max degree 3
        g = build_graph("abcde", [(0, 1), (0, 2), (0, 3), (1, 4)])
        lists = make_list_assignment(
            g, {(0, 1): (1, 2, 3), (0, 2): (1, 2, 3), (0, 3): (1, 2, 3), (1, 4): (1, 2)}
        )
        assert brute_force_list_coloring(g, lists) is not None
        col = demand_list_color(g, lists)
        assert verify_proper(g, col, lists).ok

    def test_rejects_demand_violation(self):
        g = star(3)
        lists = ListAssignment(
            lists={(0, 1): (1, 2), (0, 2): (1, 2, 3), (0, 3): (1, 2, 3)},
            demand={e: 3 for e in g.edges},
        )
        with pytest.raises(DemandViolationError):
            demand_list_color(g, lists)

    def test_catalog_demand_lists_never_fail(self):
        rng = random.Random(4)
        for g in CATALOG:
            universe = range(1, max(6, max_degree(g)) + 1)
            for _ in range(3):
                lists = make_list_assignment(
                    g,
                    {
                        e: rng.sample(universe, max(g.degree(e[0]), g.degree(e[1])))
                        for e in g.edges
                    },
                )
                col = demand_list_color(g, lists)
                assert verify_proper(g, col, lists).ok


class TestOneFactorization:
    def test_order_two(self):
        assert one_factorization(2) == [[(0, 1)]]

    def test_order_four_partitions_k4(self):
        classes = one_factorization(4)
        assert len(classes) == 3
        union = [e for cls in classes for e in cls]
        assert sorted(union) == [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]

    @pytest.mark.parametrize("m", range(1, 9))
    def test_partition_property(self, m):
        order = 2 * m
        classes = one_factorization(order)
        assert len(classes) == order - 1
        seen = set()
        for cls in classes:
            assert len(cls) == m
            touched = [v for e in cls for v in e]
            assert sorted(touched) == list(range(order))  # perfect matching
            for e in cls:
                assert e not in seen
                seen.add(e)
        assert len(seen) == m * (order - 1)

    def test_odd_order_rejected(self):
        with pytest.raises(OddOrderError):
            one_factorization(5)
        with pytest.raises(OddOrderError):
            one_factorization(0)


class TestVerifyProper:
    def test_valid_c4(self):
        g = cycle(4)
        col = EdgeColoring(2, {(0, 1): 1, (1, 2): 2, (2, 3): 1, (0, 3): 2})
        assert verify_proper(g, col).ok

    def test_conflict_at_middle_vertex(self):
        g = path(3)
        col = EdgeColoring(2, {(0, 1): 1, (1, 2): 1})
        report = verify_proper(g, col)
        assert report.conflicts == (((0, 1), (1, 2)),)
        assert "vertex 1" in str(report)

    def test_off_list(self):
        g = path(2)
        lists = make_list_assignment(g, {(0, 1): (2, 3)})
        report = verify_proper(g, EdgeColoring(3, {(0, 1): 1}), lists)
        assert report.off_list == ((0, 1),)

    def test_off_palette(self):
        g = path(2)
        report = verify_proper(g, EdgeColoring(2, {(0, 1): 5}))
        assert report.off_palette == ((0, 1),)

    def test_missing_edge(self):
        g = path(3)
        with pytest.raises(MissingEdgeError):
            verify_proper(g, EdgeColoring(2, {(0, 1): 1}))

    def test_all_pairs_reported(self):
        g = star(3)
        col = EdgeColoring(3, {(0, 1): 2, (0, 2): 2, (0, 3): 2})
        assert len(verify_proper(g, col).conflicts) == 3


def test_bipartition_of_catalog_members():
    for g in CATALOG:
        bipartition(g)
