import random

import networkx as nx
import pytest

from geodex.families import (
    bowtie_graph,
    complete_bipartite_graph,
    complete_graph,
    cycle_graph,
    cycle_with_leaf,
    grid_graph,
    path_graph,
    paw_graph,
    petersen_graph,
    star_graph,
)
from geodex.generators import random_connected_graph, random_graph, random_tree
from geodex.graphs import (
    CapacityError,
    FamilyKind,
    Graph,
    GraphError,
    VertexSet,
    block_cut_tree,
    cartesian_product,
    closure,
    connected_components,
    format_graph,
    interval,
    parse_graph,
    recognize_family,
    simplicial_vertices,
)
from tests.support import oracle as naive


def as_naive(g: Graph):
    return naive.mk(g.n, g.edges())


def test_vertex_set_basics():
    s = VertexSet.of(0, 3, 5)
    assert 3 in s and 1 not in s
    assert s.members() == (0, 3, 5)
    assert len(s) == 3
    t = s.add(1)
    assert t.members() == (0, 1, 3, 5)
    assert s.members() == (0, 3, 5), "add must not mutate"
    assert (s & VertexSet.of(3, 4)).members() == (3,)
    assert (s | VertexSet.of(4)).members() == (0, 3, 4, 5)
    assert (s - VertexSet.of(0)).members() == (3, 5)
    assert VertexSet.of(0).issubset(s)
    assert not VertexSet.of(1).issubset(s)
    assert not VertexSet()
    with pytest.raises(CapacityError):
        VertexSet.of(128)


def test_parse_and_format_round_trip():
    text = "# a comment\nn 4\n0 1\n1 2\n\n2 3\n"
    g = parse_graph(text)
    assert g.n == 4
    assert g.edges() == [(0, 1), (1, 2), (2, 3)]
    again = parse_graph(format_graph(g))
    assert again.n == g.n and again.edges() == g.edges()


def test_parse_ignores_duplicate_edges():
    g = parse_graph("n 3\n0 1\n1 0\n0 1\n1 2\n")
    assert g.edges() == [(0, 1), (1, 2)]


def test_parse_errors_carry_line_numbers():
    with pytest.raises(GraphError, match="line 2"):
        parse_graph("n 3\n0 x\n")
    with pytest.raises(GraphError, match="self-loop"):
        parse_graph("n 3\n1 1\n")
    with pytest.raises(GraphError, match="range"):
        parse_graph("n 3\n0 3\n")
    with pytest.raises(GraphError):
        parse_graph("0 1\n1 2\n")
    with pytest.raises(CapacityError):
        parse_graph("n 200\n0 1\n")


def test_graph_rejects_self_loops_and_bad_ids():
    with pytest.raises(GraphError):
        Graph.from_edges(3, [(0, 0)])
    with pytest.raises(GraphError):
        Graph.from_edges(3, [(0, 5)])


def test_distances_match_naive_bfs():
    rng = random.Random(71)
    graphs = [path_graph(7), cycle_graph(8), petersen_graph(), paw_graph()]
    for _ in range(15):
        graphs.append(random_graph(rng.randint(2, 10), rng))
    for g in graphs:
        og = as_naive(g)
        for u in range(g.n):
            want = naive.bfs_dist(og, u)
            for v in range(g.n):
                if v in want:
                    assert g.distances.dist(u, v) == want[v]
                else:
                    assert not g.distances.reachable(u, v)


def test_interval_fixtures():
    c6 = cycle_graph(6)
    assert interval(c6, c6.distances, 0, 3).members() == tuple(range(6))
    c5 = cycle_graph(5)
    assert interval(c5, c5.distances, 0, 2).members() == (0, 1, 2)
    assert interval(c5, c5.distances, 2, 0).members() == (0, 1, 2)
    p4 = path_graph(4)
    assert interval(p4, p4.distances, 1, 1).members() == (1,)


def test_interval_errors_across_components():
    g = Graph.from_edges(4, [(0, 1), (2, 3)])
    with pytest.raises(GraphError):
        interval(g, g.distances, 0, 3)


def test_interval_symmetry_random():
    rng = random.Random(3)
    for _ in range(10):
        g = random_connected_graph(rng.randint(2, 9), rng)
        for u in range(g.n):
            for v in range(u + 1, g.n):
                a = interval(g, g.distances, u, v)
                b = interval(g, g.distances, v, u)
                assert a.bits == b.bits


def test_closure_fixture_and_properties():
    c5 = cycle_graph(5)
    got = closure(c5, c5.intervals, VertexSet.of(0, 2))
    assert got.members() == (0, 1, 2)

    rng = random.Random(9)
    for _ in range(20):
        g = random_graph(rng.randint(1, 9), rng)
        picks = [v for v in range(g.n) if rng.random() < 0.4]
        s = VertexSet.from_iterable(picks)
        cl = closure(g, g.intervals, s)
        assert s.issubset(cl), "extensive"
        bigger = s.add(rng.randrange(g.n)) if g.n else s
        cl2 = closure(g, g.intervals, bigger)
        assert cl.issubset(cl2), "monotone"
        og = as_naive(g)
        assert set(cl.members()) == set(naive.closure(og, frozenset(picks)))


def test_simplicial_vertices():
    assert simplicial_vertices(complete_graph(5)).members() == (0, 1, 2, 3, 4)
    assert simplicial_vertices(path_graph(5)).members() == (0, 4)
    assert simplicial_vertices(cycle_graph(6)).members() == ()
    assert simplicial_vertices(paw_graph()).members() == (1, 2, 3)

    rng = random.Random(17)
    for _ in range(15):
        g = random_graph(rng.randint(1, 10), rng)
        simp = simplicial_vertices(g)
        assert set(simp.members()) == naive.simplicial(as_naive(g))
        # a simplicial vertex is never interior to a geodesic
        for w in simp:
            for u in range(g.n):
                for v in range(g.n):
                    if w in (u, v) or not g.distances.reachable(u, v):
                        continue
                    assert w not in interval(g, g.distances, u, v)


def test_connected_components():
    g = Graph.from_edges(6, [(0, 1), (2, 3), (3, 4)])
    comps = connected_components(g)
    assert [c.members() for c in comps] == [(0, 1), (2, 3, 4), (5,)]


def test_block_cut_tree_against_networkx():
    rng = random.Random(2024)
    graphs = [paw_graph(), bowtie_graph(), path_graph(6), cycle_graph(5),
              cycle_with_leaf(4), petersen_graph()]
    for _ in range(40):
        graphs.append(random_connected_graph(rng.randint(2, 12), rng))
    for g in graphs:
        h = nx.Graph()
        h.add_nodes_from(range(g.n))
        h.add_edges_from(g.edges())
        bct = block_cut_tree(g)
        assert set(bct.articulation_points.members()) == \
            set(nx.articulation_points(h))
        ours = {frozenset(b.members()) for b in bct.blocks if len(b) >= 2}
        theirs = {frozenset(b) for b in nx.biconnected_components(h)}
        assert ours == theirs


def test_recognize_family_priorities():
    assert recognize_family(cycle_graph(7)).kind == FamilyKind.CYCLE
    assert recognize_family(complete_graph(5)).kind == FamilyKind.COMPLETE
    assert recognize_family(star_graph(4)).kind == FamilyKind.STAR
    assert recognize_family(complete_bipartite_graph(2, 3)).kind == \
        FamilyKind.COMPLETE_BIPARTITE
    assert recognize_family(path_graph(9)).kind == FamilyKind.PATH
    # paw is both a block graph and a cactus; block graph wins
    assert recognize_family(paw_graph()).kind == FamilyKind.BLOCK_GRAPH
    assert recognize_family(cycle_with_leaf(4)).kind == FamilyKind.CACTUS
    assert recognize_family(petersen_graph()).kind == FamilyKind.GENERAL
    rng = random.Random(5)
    assert recognize_family(random_tree(9, rng)).kind == FamilyKind.TREE


def test_grid_tag_only_from_product_metadata():
    g = grid_graph([2, 3])
    assert recognize_family(g).kind == FamilyKind.GRID
    raw = Graph.from_edges(g.n, g.edges())
    assert recognize_family(raw).kind != FamilyKind.GRID


def test_recognize_family_rejects_disconnected():
    with pytest.raises(GraphError):
        recognize_family(Graph.from_edges(4, [(0, 1), (2, 3)]))


def test_cartesian_product_counts():
    c4ish = cartesian_product([path_graph(2), path_graph(2)])
    assert c4ish.n == 4 and len(c4ish.edges()) == 4
    assert all(len(c4ish.neighbors(v)) == 2 for v in range(4))

    grid33 = cartesian_product([path_graph(3), path_graph(3)])
    assert grid33.n == 9 and len(grid33.edges()) == 12

    prism = cartesian_product([complete_graph(2), complete_graph(3)])
    assert prism.n == 6 and len(prism.edges()) == 9

    with pytest.raises(GraphError):
        cartesian_product([])


def test_product_distance_additivity_spot():
    ga, gb = paw_graph(), path_graph(3)
    prod = cartesian_product([ga, gb])
    for u1 in range(ga.n):
        for y1 in range(gb.n):
            for u2 in range(ga.n):
                for y2 in range(gb.n):
                    a = u1 * gb.n + y1
                    b = u2 * gb.n + y2
                    assert prod.distances.dist(a, b) == \
                        ga.distances.dist(u1, u2) + gb.distances.dist(y1, y2)


def test_induced_subgraph():
    g = bowtie_graph()
    sub, old_ids = g.induced(VertexSet.of(0, 1, 2))
    assert sub.n == 3 and len(sub.edges()) == 3
    assert old_ids == [0, 1, 2]
