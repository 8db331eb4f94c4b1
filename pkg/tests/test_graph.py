from itertools import combinations

import networkx as nx
import pytest
from hypothesis import given, settings

from jellyspec.errors import Disconnected, DuplicateEdge, InvalidParams, OutOfRange, SelfLoop
from jellyspec.exact import spanning_tree_count
from jellyspec.graph import (
    Graph,
    JellyfishParams,
    bipartite_component_count,
    build_graph,
    coalescence,
    complement,
    complete_graph,
    components,
    count_subgraphs,
    cycle,
    cyclomatic_number,
    degree_sequence,
    disjoint_union,
    empty_graph,
    is_bipartite,
    is_connected,
    jellyfish,
    join,
    line_graph,
    path,
    star,
    sun,
)

from conftest import graphs, to_nx


def brute_counts(g: Graph) -> tuple[int, int, int]:
    """Triangles, 2-edge paths and 4-cycles by looking at every vertex subset."""
    tri = sum(
        1 for a, b, c in combinations(range(g.n), 3) if g.has_edge(a, b) and g.has_edge(b, c) and g.has_edge(a, c)
    )
    p3 = 0
    for a, b, c in combinations(range(g.n), 3):
        # each of the three vertices may be the middle of the path
        p3 += g.has_edge(a, b) and g.has_edge(b, c)
        p3 += g.has_edge(b, a) and g.has_edge(a, c)
        p3 += g.has_edge(a, c) and g.has_edge(c, b)
    c4 = 0
    for a, b, c, d in combinations(range(g.n), 4):
        for w, x, y, z in ((a, b, c, d), (a, b, d, c), (a, c, b, d)):
            c4 += g.has_edge(w, x) and g.has_edge(x, y) and g.has_edge(y, z) and g.has_edge(z, w)
    return tri, p3, c4


class TestBuildGraph:
    def test_triangle(self):
        g = build_graph(3, [(0, 1), (1, 2), (0, 2)])
        assert g.m == 3 and g == complete_graph(3)

    def test_single_vertex(self):
        g = build_graph(1, [])
        assert (g.n, g.m) == (1, 0)

    def test_four_cycle(self):
        g = build_graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
        assert degree_sequence(g) == (2, 2, 2, 2)

    @pytest.mark.parametrize(
        "edges, exc",
        [([(0, 3)], OutOfRange), ([(1, 1)], SelfLoop), ([(0, 1), (1, 0)], DuplicateEdge), ([(-1, 0)], OutOfRange)],
    )
    def test_errors(self, edges, exc):
        with pytest.raises(exc):
            build_graph(3, edges)


class TestFamilies:
    def test_jellyfish_1_3(self):
        g = jellyfish(1, 3)
        assert (g.n, g.m) == (6, 6)
        assert degree_sequence(g) == (3, 3, 3, 1, 1, 1)

    def test_jellyfish_2_4(self):
        g = jellyfish(2, 4)
        assert (g.n, g.m) == (12, 12)
        assert degree_sequence(g) == (4,) * 4 + (1,) * 8

    def test_jellyfish_spanning_trees_equal_cycle_length(self):
        assert spanning_tree_count(jellyfish(3, 5)) == 5

    def test_labeling_convention(self):
        p, q = 3, 4
        g = jellyfish(p, q)
        for c in range(q):
            assert g.has_edge(c, (c + 1) % q)
            assert sorted(v for v in g.neighbors(c) if v >= q) == list(range(q + c * p, q + c * p + p))

    @pytest.mark.parametrize("p, q", [(0, 3), (1, 2), (-1, 5)])
    def test_invalid(self, p, q):
        with pytest.raises(InvalidParams):
            jellyfish(p, q)

    def test_params_object(self):
        params = JellyfishParams(2, 5)
        assert params.order == 15
        assert jellyfish(params) == jellyfish(2, 5)

    def test_sun(self):
        assert sun(3) == jellyfish(1, 3)
        assert sun(4).n == 8 and is_bipartite(sun(4))
        assert sun(5).n == 10 and not is_bipartite(sun(5))
        with pytest.raises(InvalidParams):
            sun(2)

    def test_basic_families(self):
        assert degree_sequence(cycle(4)) == (2, 2, 2, 2)
        assert degree_sequence(star(3)) == (3, 1, 1, 1)
        assert star(3).degree(0) == 3
        assert path(2).edges() == [(0, 1)]
        for bad in (lambda: cycle(2), lambda: star(0), lambda: path(0)):
            with pytest.raises(InvalidParams):
                bad()

    @pytest.mark.parametrize("p, q", [(1, 3), (2, 5), (4, 4)])
    def test_jellyfish_structure(self, p, q):
        g = jellyfish(p, q)
        h = to_nx(g)
        assert nx.is_connected(h)
        cycles = nx.cycle_basis(h)
        assert len(cycles) == 1 and len(cycles[0]) == q
        assert cyclomatic_number(g) == 1


class TestOperations:
    def test_complement_examples(self):
        c4 = complement(cycle(4))
        assert c4.m == 2 and len(components(c4)) == 2
        assert complement(complete_graph(3)) == empty_graph(3)
        assert complement(empty_graph(5)).m == 10

    def test_union_join(self):
        u = disjoint_union(complete_graph(3), complete_graph(3))
        assert (u.n, u.m, len(components(u))) == (6, 6, 2)
        wheel = join(Graph(1, (0,)), cycle(5))
        assert wheel.degree(0) == 5 and wheel.m == 10

    def test_join_counts(self):
        g, h = path(3), cycle(4)
        j = join(g, h)
        assert j.m == g.m + h.m + g.n * h.n

    def test_coalescence_rebuilds_jellyfish(self):
        p, q = 2, 4
        g = cycle(q)
        for c in range(q):
            g = coalescence(g, c, star(p), 0)
        assert g == jellyfish(p, q)

    def test_coalescence_counts(self):
        g = coalescence(cycle(5), 2, star(3), 0)
        assert (g.n, g.m, g.degree(2)) == (8, 8, 5)
        with pytest.raises(OutOfRange):
            coalescence(cycle(5), 5, star(3), 0)

    def test_line_graph_examples(self):
        for q in (3, 4, 7):
            assert nx.is_isomorphic(to_nx(line_graph(cycle(q))), to_nx(cycle(q)))
        assert nx.is_isomorphic(to_nx(line_graph(star(3))), to_nx(complete_graph(3)))
        assert nx.is_isomorphic(to_nx(line_graph(path(4))), to_nx(path(3)))

    def test_line_graph_matches_networkx(self):
        g = jellyfish(2, 3)
        assert nx.is_isomorphic(to_nx(line_graph(g)), nx.line_graph(to_nx(g)))


class TestStructure:
    def test_bipartite_components(self):
        assert bipartite_component_count(jellyfish(2, 4)) == 1
        assert bipartite_component_count(jellyfish(1, 5)) == 0
        assert bipartite_component_count(disjoint_union(cycle(4), cycle(3))) == 1
        assert bipartite_component_count(empty_graph(3)) == 3

    def test_counts_examples(self):
        assert count_subgraphs(complete_graph(3)) == (1, 3, 0)
        assert count_subgraphs(cycle(4)) == (0, 4, 1)
        assert count_subgraphs(jellyfish(1, 3)) == brute_counts(jellyfish(1, 3)) == (1, 9, 0)
        assert count_subgraphs(complete_graph(4)) == brute_counts(complete_graph(4)) == (4, 12, 3)

    def test_cyclomatic(self):
        assert cyclomatic_number(path(6)) == 0
        assert cyclomatic_number(complete_graph(4)) == 3
        assert cyclomatic_number(jellyfish(3, 5)) == 1
        with pytest.raises(Disconnected):
            cyclomatic_number(empty_graph(2))


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=9))
def test_counts_match_brute_force(g):
    assert count_subgraphs(g) == brute_counts(g)


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=12))
def test_graph_invariants(g):
    assert sum(g.degrees()) == 2 * g.m
    for u in range(g.n):
        assert not g.has_edge(u, u)
        for v in g.neighbors(u):
            assert g.has_edge(v, u)
    c = complement(g)
    assert complement(c) == g
    assert g.m + c.m == g.n * (g.n - 1) // 2
    lg = line_graph(g)
    assert lg.n == g.m
    assert lg.m == sum(d * (d - 1) // 2 for d in g.degrees())


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=10))
def test_structure_matches_networkx(g):
    h = to_nx(g)
    assert is_connected(g) == (g.n <= 1 or nx.is_connected(h))
    assert sorted(map(sorted, components(g))) == sorted(sorted(c) for c in nx.connected_components(h))
    assert is_bipartite(g) == nx.is_bipartite(h)
    odd_everywhere = all(not nx.is_bipartite(h.subgraph(c)) for c in nx.connected_components(h))
    assert (bipartite_component_count(g) == 0) == odd_everywhere
