import random
from itertools import product

import pytest

from oracles import atlas_graphs, brute_chromatic, brute_forest_partition_exists, brute_transversals
from toruscolor.dp_coloring import (
    Cover,
    choice_number,
    chosen_subgraph,
    chromatic_number,
    dp_chromatic_number,
    dp_color,
    f_threshold_holds,
    first_uncolorable_cover,
    full_covers,
    is_L_colorable,
    is_strictly_f_degenerate,
    strictly_f_degenerate_transversal,
    vertex_arboricity_at_most,
    verify_forest_partition,
    verify_L_coloring,
    verify_strictly_f_degenerate_transversal,
    verify_transversal,
)
from toruscolor.errors import InputError, SearchBoundExceeded
from toruscolor.families import complete_graph, cycle_graph, path_graph, petersen_graph, star_graph
from toruscolor.graph import Graph


def twisted_c4():
    return Cover.straight(cycle_graph(4), 2).with_matching(3, 0, [(1, 2), (2, 1)])


def random_cover(rng, g, max_size=3):
    sizes = {v: rng.randint(1, max_size) for v in g.vertices}
    m = {}
    for u, v in g.edges():
        left = list(range(1, sizes[u] + 1))
        right = list(range(1, sizes[v] + 1))
        rng.shuffle(right)
        m[(u, v)] = [(i, j) for i, j in zip(left, right) if rng.random() < 0.8]
    return Cover.build(g, sizes, m)


def test_c4_covers():
    t = dp_color(Cover.straight(cycle_graph(4), 2))
    assert t is not None and verify_transversal(Cover.straight(cycle_graph(4), 2), t)
    c = twisted_c4()
    assert dp_color(c) is None
    assert not any(verify_transversal(c, t) for t in brute_transversals(c))


def test_every_three_fold_cover_of_c4_is_colorable():
    for c in full_covers(cycle_graph(4), 3):
        t = dp_color(c)
        assert t is not None and verify_transversal(c, t)


def test_empty_list():
    c = Cover.build(path_graph(2), {0: 0, 1: 2})
    assert dp_color(c) is None


def test_cover_validation():
    g = path_graph(3)
    with pytest.raises(InputError):
        Cover.build(g, 2, {(0, 2): [(1, 1)]})
    with pytest.raises(InputError):
        Cover.build(g, 2, {(0, 1): [(1, 1), (1, 2)]})
    with pytest.raises(InputError):
        Cover.build(g, 2, {(0, 1): [(3, 1)]})
    with pytest.raises(InputError):
        Cover.build(g, {0: 1})


def test_matching_orientation_is_normalised():
    c = Cover.build(path_graph(2), 2, {(1, 0): [(1, 2)]})
    assert c.adjacent((0, 2), (1, 1))
    assert not c.adjacent((0, 1), (1, 2))


def test_dp_color_matches_brute_force():
    rng = random.Random(2)
    graphs = list(atlas_graphs(5))
    for _ in range(200):
        g = rng.choice(graphs)
        c = random_cover(rng, g)
        t = dp_color(c)
        exists = any(verify_transversal(c, s) for s in brute_transversals(c))
        assert (t is not None) == exists
        if t is not None:
            assert verify_transversal(c, t)


def test_f_one_is_dp_coloring():
    rng = random.Random(4)
    graphs = list(atlas_graphs(5))
    for _ in range(200):
        g = rng.choice(graphs)
        c = random_cover(rng, g)
        f = {x: 1 for x in c.cover_vertices()}
        a = strictly_f_degenerate_transversal(c, f)
        b = dp_color(c)
        assert (a is None) == (b is None)
        if a is not None:
            assert verify_transversal(c, a)


def test_f_two_means_forest():
    rng = random.Random(6)
    graphs = list(atlas_graphs(5))
    for _ in range(100):
        g = rng.choice(graphs)
        c = random_cover(rng, g)
        f = {x: 2 for x in c.cover_vertices()}
        for t in brute_transversals(c):
            adj = chosen_subgraph(c, t)
            h = Graph.from_adjacency({v: [u for u, _ in ns] for (v, _), ns in adj.items()})
            forest = h.m == h.n - len(h.components())
            assert verify_strictly_f_degenerate_transversal(c, f, t) == forest


def test_strict_degeneracy_checker():
    tri = {0: {1, 2}, 1: {0, 2}, 2: {0, 1}}
    assert not is_strictly_f_degenerate(tri, {0: 2, 1: 2, 2: 2})
    assert is_strictly_f_degenerate(tri, {0: 3, 1: 2, 2: 2})
    assert is_strictly_f_degenerate({}, {})
    assert not is_strictly_f_degenerate({0: set()}, {0: 0})


def test_k4_four_fold_straight():
    c = Cover.straight(complete_graph(4), 4)
    t = strictly_f_degenerate_transversal(c, {x: 1 for x in c.cover_vertices()})
    assert t is not None and sorted(t.values()) == [1, 2, 3, 4]


def test_f_range_and_threshold():
    c = Cover.straight(path_graph(2), 2)
    with pytest.raises(InputError):
        strictly_f_degenerate_transversal(c, {x: 3 for x in c.cover_vertices()})
    f = {(0, 1): 2, (0, 2): 2, (1, 1): 2, (1, 2): 1}
    assert not f_threshold_holds(c, f, 4)
    assert f_threshold_holds(c, f, 3)


def test_list_coloring():
    assert is_L_colorable(cycle_graph(4), {v: {1, 2} for v in range(4)}) is not None
    assert is_L_colorable(complete_graph(3), {v: {1, 2} for v in range(3)}) is None
    lists = {0: {"a"}, 1: {"a", "b"}, 2: {"b", "c"}}
    phi = is_L_colorable(path_graph(3), lists)
    assert verify_L_coloring(path_graph(3), lists, phi)


def test_theta_graph_straight_covers_agree():
    theta = Graph.from_edges(5, [(0, 1), (1, 4), (0, 2), (2, 4), (0, 3), (3, 4)])
    for sizes in product([1, 2], repeat=5):
        lists = {v: range(1, s + 1) for v, s in enumerate(sizes)}
        c = Cover.straight(theta, dict(enumerate(sizes)))
        assert (dp_color(c) is None) == (is_L_colorable(theta, lists) is None)


def test_chromatic_numbers():
    assert chromatic_number(petersen_graph()) == 3
    assert chromatic_number(complete_graph(5)) == 5
    for g in atlas_graphs(5):
        assert chromatic_number(g) == brute_chromatic(g)


@pytest.mark.parametrize("n", range(3, 8))
def test_dp_chromatic_number_of_cycles(n):
    assert dp_chromatic_number(cycle_graph(n)) == 3


def test_even_cycle_separates_dp_from_list():
    c4 = cycle_graph(4)
    assert choice_number(c4) == 2
    assert first_uncolorable_cover(c4, 2) is not None


def test_oracle_bounds():
    with pytest.raises(SearchBoundExceeded):
        list(full_covers(complete_graph(5), 4, bound=100))
    with pytest.raises(SearchBoundExceeded):
        dp_color(Cover.straight(complete_graph(6), 40), bound=1000)


def test_vertex_arboricity():
    assert vertex_arboricity_at_most(star_graph(4), 1) == [frozenset(range(5))]
    assert vertex_arboricity_at_most(complete_graph(5), 2) is None
    parts = vertex_arboricity_at_most(complete_graph(5), 3)
    assert verify_forest_partition(complete_graph(5), parts, 3)
    assert vertex_arboricity_at_most(complete_graph(7), 2) is None
    assert vertex_arboricity_at_most(Graph([]), 1) == []


def test_arboricity_matches_brute_force():
    for g in atlas_graphs(5):
        for k in (1, 2):
            parts = vertex_arboricity_at_most(g, k)
            assert (parts is not None) == brute_forest_partition_exists(g, k)
            if parts is not None:
                assert verify_forest_partition(g, parts, k)


def test_forest_partition_verifier():
    g = cycle_graph(4)
    assert not verify_forest_partition(g, [set(range(4))])
    assert verify_forest_partition(g, [{0, 1}, {2, 3}])
    assert not verify_forest_partition(g, [{0, 1}, {1, 2, 3}])
