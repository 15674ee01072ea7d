import random

import pytest

from geodex.engine import Outcome, Position, grundy
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
from geodex.generators import (
    glued_at_vertex,
    random_block_graph,
    random_cactus,
    random_tree,
)
from geodex.graphs import Graph, GraphError, VertexSet
from geodex.solvers import (
    CactusTypeTag,
    ComponentPosition,
    PendantSelected,
    SelectedVertex,
    TwoSelected,
    classify_cactus_position,
    component_grundy,
    solve_auto,
    solve_block_graph,
    solve_cactus,
    solve_tree,
    split_at_selected_articulation,
)


def test_named_fixture_values():
    assert solve_block_graph(paw_graph()) == 0
    assert solve_cactus(paw_graph()) == 0
    assert grundy(Position(paw_graph())) == 0
    assert solve_block_graph(bowtie_graph()) == 1
    assert solve_cactus(bowtie_graph()) == 1
    assert grundy(Position(bowtie_graph())) == 1


def test_solve_tree_random_suite():
    rng = random.Random(1001)
    for _ in range(40):
        t = random_tree(rng.randint(1, 12), rng)
        assert solve_tree(t) == grundy(Position(t))


def test_solve_tree_with_selected_vertex():
    rng = random.Random(1002)
    for _ in range(20):
        t = random_tree(rng.randint(2, 11), rng)
        u = rng.randrange(t.n)
        want = grundy(Position(t, VertexSet.of(u)))
        assert solve_tree(t, VertexSet.of(u)) == want


def test_solve_block_graph_random_suite():
    rng = random.Random(1003)
    for _ in range(40):
        g = random_block_graph(rng.randint(1, 12), rng)
        assert solve_block_graph(g) == grundy(Position(g))


def test_solve_cactus_random_suite():
    rng = random.Random(1004)
    for _ in range(40):
        g = random_cactus(rng.randint(1, 12), rng)
        assert solve_cactus(g) == grundy(Position(g))


def test_cactus_solver_covers_trees_too():
    rng = random.Random(1005)
    for _ in range(10):
        t = random_tree(rng.randint(1, 10), rng)
        assert solve_cactus(t) == solve_tree(t)


def test_solvers_reject_wrong_families():
    with pytest.raises(GraphError):
        solve_tree(cycle_graph(5))
    with pytest.raises(GraphError):
        solve_block_graph(cycle_with_leaf(4))
    with pytest.raises(GraphError):
        solve_cactus(complete_graph(4))
    with pytest.raises(GraphError):
        solve_cactus(petersen_graph())


def test_split_at_selected_articulation_xor():
    rng = random.Random(1006)
    for _ in range(15):
        a = random_cactus(rng.randint(2, 6), rng)
        b = random_tree(rng.randint(2, 6), rng)
        g = glued_at_vertex(a, b, rng.randrange(a.n), rng.randrange(b.n))
        from geodex.graphs import block_cut_tree
        arts = block_cut_tree(g).articulation_points.members()
        if not arts:
            continue
        u = rng.choice(arts)
        parts = split_at_selected_articulation(g, u)
        total = 0
        for part in parts:
            total ^= component_grundy(part)
        assert total == grundy(Position(g, VertexSet.of(u)))


def test_pendant_gadget_matches_literal_leaf():
    rng = random.Random(1007)
    for _ in range(12):
        t = random_tree(rng.randint(2, 9), rng)
        w = rng.randrange(t.n)
        gadget = ComponentPosition(t, w, PendantSelected(w))
        grown = Graph.from_edges(t.n + 1, t.edges() + [(w, t.n)])
        want = grundy(Position(grown, VertexSet.of(t.n)))
        assert component_grundy(gadget) == want


def test_two_selected_component_positions():
    rng = random.Random(1008)
    for _ in range(12):
        g = random_cactus(rng.randint(3, 10), rng)
        u, v = rng.sample(range(g.n), 2)
        pos = ComponentPosition(g, u, TwoSelected(u, v, VertexSet()))
        want = grundy(Position(g, VertexSet.of(u, v)))
        assert component_grundy(pos) == want


def test_classify_cactus_positions():
    c5 = cycle_graph(5)
    assert classify_cactus_position(
        ComponentPosition(c5, 0, SelectedVertex(0))) == \
        CactusTypeTag.CYCLE_BASE

    p4 = path_graph(4)
    assert classify_cactus_position(
        ComponentPosition(p4, 0, SelectedVertex(0))) == CactusTypeTag.TREE_BASE

    # a selected vertex inside a cycle block of a bigger cactus
    g = cycle_with_leaf(5)
    assert classify_cactus_position(
        ComponentPosition(g, 0, SelectedVertex(0))) == CactusTypeTag.TYPE_I
    assert classify_cactus_position(
        ComponentPosition(g, 1, PendantSelected(1))) == CactusTypeTag.TYPE_II
    assert classify_cactus_position(
        ComponentPosition(g, 1, TwoSelected(1, 3, VertexSet()))) == \
        CactusTypeTag.TYPE_III

    # everything already covered: P3 with both ends selected
    p3 = path_graph(3)
    done = ComponentPosition(p3, 0, TwoSelected(0, 2, VertexSet.of(1)))
    assert classify_cactus_position(done) == CactusTypeTag.EMPTY
    with pytest.raises(GraphError):
        classify_cactus_position(
            ComponentPosition(petersen_graph(), 0, SelectedVertex(0)))


def test_solve_auto_routing():
    sol = solve_auto(path_graph(9))
    assert (sol.grundy, sol.solver) == (1, "closed-form")

    sol = solve_auto(petersen_graph())
    assert (sol.grundy, sol.solver) == (0, "brute")

    sol = solve_auto(bowtie_graph())
    assert (sol.grundy, sol.solver) == (1, "block")

    rng = random.Random(1009)
    cac = random_cactus(11, rng)
    sol = solve_auto(cac)
    assert sol.solver in ("cactus", "tree", "closed-form")
    assert sol.grundy == grundy(Position(cac))

    sol = solve_auto(grid_graph([2, 4]))
    assert sol.grundy is None
    assert sol.outcome == Outcome.P
    assert sol.solver == "closed-form"

    sol = solve_auto(complete_bipartite_graph(2, 3))
    assert (sol.grundy, sol.solver) == (2, "closed-form")


def test_solve_auto_disconnected_xor():
    a, b = star_graph(3), cycle_graph(5)
    g = Graph.from_edges(
        a.n + b.n, a.edges() + [(u + a.n, v + a.n) for u, v in b.edges()])
    sol = solve_auto(g)
    assert sol.grundy == grundy(Position(g))
    assert sol.solver == "mixed" or sol.solver == "closed-form"
    assert sol.outcome == (Outcome.N if sol.grundy else Outcome.P)
