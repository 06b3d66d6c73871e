import random
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import brute
from conftest import graphs, random_graph
from folkman.graph import (GraphError, add_edge, bits, build_graph, chromatic_number,
                           clique_number, complement, complete_graph, complete_minus_cycle,
                           cycle_graph, delete_vertices, empty_graph, has_clique, independence_number,
                           join, maximal_independent_sets, remove_edge, standard_graph, vertex_set)


def assert_valid(g):
    full = (1 << g.n) - 1
    for v, row in enumerate(g.adj):
        assert not row >> v & 1
        assert not row & ~full
        for u in bits(row):
            assert g.adj[u] >> v & 1


def test_build_triangle_is_k3():
    g = build_graph(3, [(0, 1), (1, 2), (0, 2)])
    assert g == complete_graph(3)


def test_build_edgeless_pair():
    g = build_graph(2, [])
    assert g.num_edges() == 0
    assert clique_number(g) == 1


def test_build_c5_omega_alpha():
    g = build_graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])
    assert g == cycle_graph(5)
    # oracle: every pair and every triple
    assert brute.omega(g) == 2 and brute.alpha(g) == 2
    assert clique_number(g) == 2
    assert independence_number(g) == 2


def test_build_collapses_duplicates():
    g = build_graph(3, [(0, 1), (1, 0), (0, 1)])
    assert g.edges() == [(0, 1)]


@pytest.mark.parametrize("n, edges", [
    (0, []), (65, []), (3, [(0, 3)]), (3, [(1, 1)]), (3, [(-1, 2)]),
])
def test_build_rejects(n, edges):
    with pytest.raises(GraphError):
        build_graph(n, edges)


def test_standard_graphs():
    assert complete_graph(6).num_edges() == 15
    assert standard_graph("complete", 6).num_edges() == 15
    c7bar = standard_graph("complete_minus_cycle", 4, 3)
    assert c7bar.n == 7 and c7bar.num_edges() == 21 - 7
    assert brute.isomorphic(c7bar, complement(cycle_graph(7)))
    assert chromatic_number(standard_graph("cycle", 5)) == 3


@pytest.mark.parametrize("kind, params", [
    ("complete", (0,)), ("cycle", (2,)), ("complete_minus_cycle", (3, 3)),
    ("complete_minus_cycle", (5, 1)), ("petersen", (10,)),
])
def test_standard_graph_rejects(kind, params):
    with pytest.raises(GraphError):
        standard_graph(kind, *params)


def test_complement_examples():
    assert complement(complete_graph(5)) == empty_graph(5)
    assert brute.isomorphic(complement(cycle_graph(5)), cycle_graph(5))


@given(graphs(max_n=12))
def test_complement_involution(g):
    assert complement(complement(g)) == g
    assert_valid(complement(g))


def test_join_examples():
    w5 = join(complete_graph(1), cycle_graph(5))
    assert w5.n == 6 and brute.omega(w5) == 3 and clique_number(w5) == 3
    assert join(complete_graph(2), complete_graph(3)) == complete_graph(5)
    # K_{m-p-1} + co-C_{2p+1} with m = 5, p = 3 is K_8 - C_7
    lifted = join(complete_graph(1), complement(cycle_graph(7)))
    assert brute.isomorphic(lifted, complete_minus_cycle(5, 3))


def test_join_m4_p3_matches_complete_minus_cycle():
    # m - p - 1 = 0: the join degenerates to co-C7 itself
    assert brute.isomorphic(complement(cycle_graph(7)), complete_minus_cycle(4, 3))


def test_join_capacity():
    with pytest.raises(GraphError):
        join(complete_graph(40), complete_graph(30))


@settings(max_examples=200)
@given(graphs(max_n=7), graphs(max_n=6))
def test_join_clique_and_chromatic_additivity(g1, g2):
    j = join(g1, g2)
    assert_valid(j)
    assert clique_number(j) == clique_number(g1) + clique_number(g2)
    assert chromatic_number(j) == chromatic_number(g1) + chromatic_number(g2)


@given(graphs(max_n=9), st.integers(1, 4))
def test_chromatic_of_join_with_complete(g, t):
    assert chromatic_number(join(complete_graph(t), g)) == t + chromatic_number(g)


def test_clique_examples():
    k6e = remove_edge(complete_graph(6), 0, 1)
    assert clique_number(k6e) == 5
    c7bar = complement(cycle_graph(7))
    assert brute.alpha(cycle_graph(7)) == 3
    assert clique_number(c7bar) == 3
    assert clique_number(cycle_graph(5)) == 2
    assert has_clique(k6e, 5) and not has_clique(k6e, 6)


def test_independence_examples():
    assert independence_number(complete_graph(5)) == 1
    assert independence_number(cycle_graph(5)) == 2
    k7e = remove_edge(complete_graph(7), 2, 5)
    assert independence_number(k7e) == 2


def test_chromatic_examples():
    # co-C7: independent sets have size <= 2, so chi >= 4; brute force agrees
    c7bar = complement(cycle_graph(7))
    assert brute.chi(c7bar) == 4
    assert chromatic_number(c7bar) == 4
    for n in range(1, 8):
        assert chromatic_number(complete_graph(n)) == n
    assert chromatic_number(cycle_graph(5)) == 3


def test_chromatic_cap():
    assert chromatic_number(complete_graph(21)) is None
    assert chromatic_number(complete_graph(21), cap=21) == 21


@settings(max_examples=200)
@given(graphs(max_n=7))
def test_exact_numbers_match_brute_force(g):
    assert clique_number(g) == brute.omega(g)
    assert independence_number(g) == brute.alpha(g)
    assert chromatic_number(g) == brute.chi(g)


@settings(max_examples=200)
@given(graphs(max_n=12))
def test_alpha_is_omega_of_complement(g):
    assert independence_number(g) == clique_number(complement(g))
    for t in range(1, g.n + 2):
        assert has_clique(g, t) == (clique_number(g) >= t)


@settings(max_examples=200)
@given(graphs(max_n=11))
def test_omega_chi_n_sandwich(g):
    chi = chromatic_number(g)
    assert clique_number(g) <= chi <= g.n


@pytest.mark.parametrize("p", range(2, 6))
def test_complete_minus_cycle_clique_number(p):
    for m in range(p + 1, p + 5):
        g = complete_minus_cycle(m, p)
        assert g.n == m + p
        assert clique_number(g) == m - 1


def test_delete_vertices_examples():
    assert delete_vertices(complete_graph(6), vertex_set([0])) == complete_graph(5)
    rest = delete_vertices(cycle_graph(5), vertex_set([0, 2]))
    # remaining 1, 3, 4 renumbered 0, 1, 2; only 3-4 survives
    assert rest.edges() == [(1, 2)]
    g = cycle_graph(6)
    assert delete_vertices(g, 0) == g


def test_delete_vertices_p3_from_c5_path():
    # C5 minus one vertex is the path on 4 vertices, two independent ones leave P2 + K1
    g = delete_vertices(cycle_graph(5), vertex_set([0]))
    assert g.edges() == [(0, 1), (1, 2), (2, 3)]


def test_delete_vertices_errors():
    with pytest.raises(GraphError):
        delete_vertices(complete_graph(3), 0b111)
    with pytest.raises(GraphError):
        delete_vertices(complete_graph(3), 0b1000)


@given(graphs(min_n=2, max_n=10), st.data())
def test_delete_vertices_preserves_order(g, data):
    keep = [v for v in range(g.n) if data.draw(st.booleans())]
    if not keep:
        keep = [0]
    h = delete_vertices(g, g.all_vertices & ~vertex_set(keep))
    for i, j in combinations(range(len(keep)), 2):
        assert h.has_edge(i, j) == g.has_edge(keep[i], keep[j])


def test_add_remove_edge():
    k6e = remove_edge(complete_graph(6), 1, 4)
    assert add_edge(k6e, 1, 4) == complete_graph(6)
    path = remove_edge(complete_graph(3), 0, 1)
    assert clique_number(path) == 2
    with pytest.raises(GraphError):
        add_edge(complete_graph(3), 0, 1)
    with pytest.raises(GraphError):
        remove_edge(path, 0, 1)
    with pytest.raises(GraphError):
        add_edge(path, 2, 2)


@given(graphs(min_n=2, max_n=10), st.data())
def test_add_then_remove_is_identity(g, data):
    non_edges = g.non_edges()
    if not non_edges:
        return
    u, v = data.draw(st.sampled_from(non_edges))
    h = add_edge(g, u, v)
    assert h.num_edges() == g.num_edges() + 1
    assert remove_edge(h, u, v) == g
    assert g.non_edges() == non_edges  # original untouched


def test_maximal_independent_sets_c5():
    sets = maximal_independent_sets(cycle_graph(5))
    assert len(sets) == 5 and all(s.bit_count() == 2 for s in sets)


def test_maximal_independent_sets_random():
    rnd = random.Random(7)
    for _ in range(30):
        g = random_graph(rnd, rnd.randint(1, 8), 0.5)
        expected = brute.maximal_ktfree_subsets(g, 2)
        assert maximal_independent_sets(g) == expected
