"""Polynomial decomposition solvers for trees, block graphs, and cacti.

All three follow the same playbook: a move covers a geodesic between the
new vertex and whatever is already selected, the covered cut vertices
disconnect the rest, and each hanging piece becomes an independent game
whose boundary behaves like a selected vertex. Values of the pieces
combine by nim-sum, and the value of a position is the mex over moves.

The boundary bookkeeping:

- a consumed anchor is a covered boundary vertex; the piece plays exactly
  like the induced subgraph with that vertex selected;
- a pendant-selected boundary is one step weaker: a virtual selected leaf
  hangs off the boundary vertex, which itself is still uncovered and
  selectable (one extra move available there).

Every solver is cross-validated against the search oracle on randomized
suites, so a bookkeeping mistake here fails loudly in the tests.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from enum import Enum

from .engine import GrundyValue, Outcome, Position, grundy as oracle_grundy
from .formulas import closed_form_lookup, grundy_cycle_selected
from .graphs import (
    FamilyKind,
    Graph,
    GraphClassTag,
    GraphError,
    VertexSet,
    block_cut_tree,
    connected_components,
    is_block_graph,
    is_cactus,
    is_tree,
    recognize_family,
)

_DEBUG = bool(os.environ.get("GEODEX_DEBUG"))


def _mex(values) -> int:
    seen = 0
    for v in values:
        seen |= 1 << v
    return (~seen & (seen + 1)).bit_length() - 1


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _flood(adj, allowed: int, start: int) -> int:
    """Connected chunk of `allowed` containing the `start` bits."""
    comp = start & allowed | start
    frontier = comp
    while frontier:
        nxt = 0
        for u in _bits(frontier):
            nxt |= adj[u]
        nxt &= allowed & ~comp
        comp |= nxt
        frontier = nxt
    return comp


# ---------------------------------------------------------------------------
# Component positions (the public face of the decomposition bookkeeping)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SelectedVertex:
    """The boundary vertex itself is selected."""

    vertex: int


@dataclass(frozen=True)
class PendantSelected:
    """A virtual selected leaf hangs off the boundary vertex."""

    vertex: int


@dataclass(frozen=True)
class TwoSelected:
    """Two selected vertices; the geodesic between them is covered."""

    u: int
    v: int
    covered: VertexSet


BoundaryKind = SelectedVertex | PendantSelected | TwoSelected


@dataclass(frozen=True)
class ComponentPosition:
    """An induced piece of a position with its boundary condition.

    ``graph`` uses its own dense ids; ``source_vertices`` maps them back to
    the host graph when the piece came out of a split. ``covered`` holds
    closure-covered but unselected vertices.
    """

    graph: Graph
    attach: int | None
    boundary_kind: BoundaryKind
    covered: VertexSet = VertexSet()
    source_vertices: tuple[int, ...] | None = None

    def __post_init__(self) -> None:
        n = self.graph.n
        kind = self.boundary_kind
        for v in self.selected():
            if v >= n:
                raise GraphError(f"boundary vertex {v} is not in the component")
        if isinstance(kind, PendantSelected) and kind.vertex >= n:
            raise GraphError("pendant boundary vertex is not in the component")
        if self.attach is not None and self.attach >= n:
            raise GraphError("attach vertex is not in the component")
        # the TwoSelected variant carries the crossed geodesic itself; fold
        # it into the component-wide covered set, selected vertices excluded
        extra = kind.covered.bits if isinstance(kind, TwoSelected) else 0
        merged = (self.covered.bits | extra) & ~self.selected().bits
        if not VertexSet(merged).issubset(self.graph.vertices):
            raise GraphError("covered set mentions vertices outside the component")
        if merged != self.covered.bits:
            object.__setattr__(self, "covered", VertexSet(merged))

    def selected(self) -> VertexSet:
        kind = self.boundary_kind
        if isinstance(kind, SelectedVertex):
            return VertexSet.of(kind.vertex)
        if isinstance(kind, TwoSelected):
            return VertexSet.of(kind.u, kind.v)
        return VertexSet()  # the pendant is virtual, not a graph vertex


@dataclass(frozen=True)
class PositionSum:
    """Vertex-disjoint components; the total value is the nim-sum."""

    components: tuple[ComponentPosition, ...]

    def __iter__(self):
        return iter(self.components)

    def __len__(self) -> int:
        return len(self.components)


class CactusTypeTag(Enum):
    TYPE_I = "selected vertex on a simple cycle"
    TYPE_II = "selected vertex hanging off the cycles"
    TYPE_III = "two selected vertices on one cycle, geodesic covered"
    TREE_BASE = "tree component"
    CYCLE_BASE = "bare cycle component"
    EMPTY = "fully covered component"


def split_at_selected_articulation(g: Graph, u: int) -> PositionSum:
    """Split the position (g, {u}) at a selected articulation point.

    Each attached component keeps u, selected; nim-summing the component
    values gives the original value because no geodesic crosses u between
    different components without u interior to it.
    """
    bct = block_cut_tree(g)
    if u not in bct.articulation_points:
        raise GraphError(f"vertex {u} is not an articulation point")
    rest = g.vertices.bits & ~(1 << u)
    parts = []
    while rest:
        start = rest & -rest
        comp = _flood(g.adj, rest, start)
        rest &= ~comp
        region = VertexSet(comp | (1 << u))
        sub, old_ids = g.induced(region)
        new_u = old_ids.index(u)
        parts.append(ComponentPosition(
            graph=sub, attach=new_u, boundary_kind=SelectedVertex(new_u),
            covered=VertexSet(), source_vertices=tuple(old_ids)))
    return PositionSum(tuple(parts))


# ---------------------------------------------------------------------------
# Trees
# ---------------------------------------------------------------------------


class _TreeDP:
    """Subtree values with a virtual selected pendant at the boundary.

    edge_value(parent, child) is the value of the subtree hanging below
    the edge, boundary at child, pendant standing in for everything on
    the parent side. A move inside covers the path up to the boundary and
    leaves one pendant-gadget per subtree hanging off that path.
    """

    def __init__(self, g: Graph):
        self.g = g
        self.memo: dict[tuple[int, int], int] = {}

    def edge_value(self, parent: int, child: int) -> int:
        key = (parent, child)
        hit = self.memo.get(key)
        if hit is not None:
            return hit
        vals: list[int] = []
        self._collect(child, parent, 0, vals)
        val = _mex(vals)
        self.memo[key] = val
        return val

    def _collect(self, x: int, parent: int, acc: int, vals: list[int]) -> None:
        children = [z for z in self.g.neighbors(x) if z != parent]
        below = {z: self.edge_value(x, z) for z in children}
        sibs = 0
        for v in below.values():
            sibs ^= v
        vals.append(acc ^ sibs)  # the move that selects x itself
        for z in children:
            self._collect(z, x, acc ^ sibs ^ below[z], vals)

    def rooted_value(self, u: int) -> int:
        total = 0
        for z in self.g.neighbors(u):
            total ^= self.edge_value(u, z)
        return total


def solve_tree(t: Graph, s: VertexSet | None = None) -> GrundyValue:
    """Grundy value of a tree, empty or with one selected vertex."""
    if not is_tree(t):
        raise GraphError("solve_tree needs a connected acyclic graph")
    dp = _TreeDP(t)
    if s is not None and len(s) > 1:
        raise GraphError("solve_tree handles at most one selected vertex")
    if s:
        (u,) = s.members()
        return dp.rooted_value(u)
    return _mex(dp.rooted_value(u) for u in range(t.n))


# ---------------------------------------------------------------------------
# Block graphs
# ---------------------------------------------------------------------------


class _BlockDP:
    """Regions of a block graph with a pendant-selected boundary.

    value(region, w, consumed): the region plays with a virtual selected
    leaf at w; consumed means w itself is covered as well (equivalently,
    w is selected). A move y covers the unique geodesic w..y; each clique
    along it sheds its unused vertices as pendant-gadget components, and
    each covered path vertex sheds its hanging branches as consumed-anchor
    components.
    """

    def __init__(self, g: Graph):
        self.g = g
        self.adj = g.adj
        self.masks = g.intervals.masks
        self.dist = g.distances.d
        self.memo: dict[tuple[int, int, bool], int] = {}

    def value(self, region: int, w: int, consumed: bool) -> int:
        key = (region, w, consumed)
        hit = self.memo.get(key)
        if hit is not None:
            return hit
        vals: list[int] = []
        if not consumed:
            vals.append(self.value(region, w, True))
        for y in _bits(region & ~(1 << w)):
            vals.append(self._move_value(region, w, y))
        val = _mex(vals)
        self.memo[key] = val
        return val

    def _move_value(self, region: int, w: int, y: int) -> int:
        path_mask = self.masks[w][y] & region
        path = sorted(_bits(path_mask), key=lambda x: self.dist[w][x])
        if _DEBUG:
            assert path[0] == w and path[-1] == y
        total = 0
        cliques: list[int] = []
        for a, b in zip(path, path[1:]):
            clique = ((1 << a) | (1 << b) | (self.adj[a] & self.adj[b])) & region
            cliques.append(clique)
            for r in _bits(clique & ~(1 << a) & ~(1 << b)):
                branch = _flood(self.adj, region & ~(clique ^ (1 << r)), 1 << r)
                total ^= self.value(branch, r, False)
        for j, x in enumerate(path):
            blocked = 0
            if j > 0:
                blocked |= cliques[j - 1]
            if j < len(cliques):
                blocked |= cliques[j]
            blocked &= ~(1 << x)
            branch = _flood(self.adj, region & ~blocked, 1 << x)
            if branch != 1 << x:
                total ^= self.value(branch, x, True)
        return total


def solve_block_graph(g: Graph) -> GrundyValue:
    """Grundy value of a block graph (every block a clique), empty start."""
    if not is_block_graph(g):
        raise GraphError("solve_block_graph needs every block to be a clique")
    dp = _BlockDP(g)
    total = 0
    for comp in connected_components(g):
        total ^= _mex(dp.value(comp.bits, u, True) for u in comp)
    return total


# ---------------------------------------------------------------------------
# Cacti
# ---------------------------------------------------------------------------


class _CactusDP:
    """Regions of a cactus with one or two consumed anchors.

    Invariants: anchors are covered; the covered set is exactly the
    geodesic closure of the anchors inside the region; every region is
    isometric in the host graph, so the host interval table is exact.
    A move extends the covered set by the geodesics to both anchors; the
    uncovered remainder splits into chunks touching at most two covered
    vertices each (a cut vertex, or two entry points on one cycle).
    """

    def __init__(self, g: Graph):
        self.g = g
        self.adj = g.adj
        self.masks = g.intervals.masks
        self.dist = g.distances.d
        self.memo: dict[tuple[int, int, tuple[int, ...]], int] = {}

    def value(self, region: int, covered: int, anchors: tuple[int, ...]) -> int:
        moves = region & ~covered
        if not moves:
            return 0
        key = (region, covered, anchors)
        hit = self.memo.get(key)
        if hit is not None:
            return hit
        val = self._base_value(region, covered, anchors, moves)
        if val is None:
            val = _mex(self._move_value(region, covered, anchors, v)
                       for v in _bits(moves))
        self.memo[key] = val
        return val

    def _base_value(self, region: int, covered: int,
                    anchors: tuple[int, ...], moves: int) -> int | None:
        """Closed-form shortcuts for bare cycles and consumed-anchor trees."""
        size = region.bit_count()
        edges2 = sum((self.adj[v] & region).bit_count() for v in _bits(region))
        if edges2 == 2 * size and all(
                (self.adj[v] & region).bit_count() == 2 for v in _bits(region)):
            if len(anchors) == 1:
                return grundy_cycle_selected(size)
            d = self.dist[anchors[0]][anchors[1]]
            return grundy_cycle_selected(size, d)
        if edges2 == 2 * (size - 1) and len(anchors) == 1:
            sub, old_ids = self.g.induced(VertexSet(region))
            return solve_tree(sub, VertexSet.of(old_ids.index(anchors[0])))
        return None

    def _move_value(self, region: int, covered: int,
                    anchors: tuple[int, ...], v: int) -> int:
        ncov = covered | (1 << v)
        for a in anchors:
            ncov |= self.masks[a][v] & region
        total = 0
        rest = region & ~ncov
        while rest:
            start = rest & -rest
            chunk = _flood(self.adj, rest, start)
            rest &= ~chunk
            attach = 0
            for u in _bits(chunk):
                attach |= self.adj[u]
            attach &= ncov & region
            k = attach.bit_count()
            if k == 1:
                c = attach.bit_length() - 1
                total ^= self.value(chunk | attach, attach, (c,))
            elif k == 2:
                bits = list(_bits(attach))
                c1, c2 = bits
                arc = self.masks[c1][c2] & region
                if _DEBUG:
                    assert arc & chunk == 0
                total ^= self.value(chunk | arc, arc, (c1, c2))
            else:
                raise AssertionError(
                    "uncovered chunk touches more than two covered vertices; "
                    "input is not a cactus")
        return total


def solve_cactus(g: Graph) -> GrundyValue:
    """Grundy value of a cactus (every block an edge or a cycle)."""
    if not is_cactus(g):
        raise GraphError(
            "solve_cactus needs every block to be an edge or a cycle")
    dp = _CactusDP(g)
    total = 0
    for comp in connected_components(g):
        total ^= _mex(dp.value(comp.bits, 1 << u, (u,)) for u in comp)
    return total


# ---------------------------------------------------------------------------
# Component dispatch and classification
# ---------------------------------------------------------------------------


def _attach_leaf(g: Graph, w: int) -> Graph:
    """g plus one extra leaf (id g.n) attached at w."""
    return Graph.from_edges(g.n + 1, g.edges() + [(w, g.n)])


def component_grundy(c: ComponentPosition) -> GrundyValue:
    """Value of one component position via the family-matched machinery."""
    g = c.graph
    kind = c.boundary_kind
    if isinstance(kind, SelectedVertex):
        return _grundy_with_selected(g, kind.vertex)
    if isinstance(kind, PendantSelected):
        grown = _attach_leaf(g, kind.vertex)
        return _grundy_with_selected(grown, g.n)
    return _grundy_with_two_selected(g, kind.u, kind.v)


def _grundy_with_selected(g: Graph, u: int) -> GrundyValue:
    if is_tree(g):
        return solve_tree(g, VertexSet.of(u))
    if is_block_graph(g):
        dp = _BlockDP(g)
        comp = _flood(g.adj, g.vertices.bits, 1 << u)
        val = dp.value(comp, u, True)
        for other in connected_components(g):
            if u not in other:
                val ^= _mex(dp.value(other.bits, x, True) for x in other)
        return val
    if is_cactus(g):
        dp = _CactusDP(g)
        comp = _flood(g.adj, g.vertices.bits, 1 << u)
        val = dp.value(comp, 1 << u, (u,))
        for other in connected_components(g):
            if u not in other:
                val ^= _mex(dp.value(other.bits, 1 << x, (x,)) for x in other)
        return val
    return oracle_grundy(Position(g, VertexSet.of(u)))


def _grundy_with_two_selected(g: Graph, u: int, v: int) -> GrundyValue:
    if is_cactus(g):
        dp = _CactusDP(g)
        comp = _flood(g.adj, g.vertices.bits, 1 << u)
        if v not in VertexSet(comp):
            raise GraphError("the two selected vertices must share a component")
        covered = (dp.masks[u][v] | (1 << u) | (1 << v)) & comp
        val = dp.value(comp, covered, (u, v))
        for other in connected_components(g):
            if u not in other:
                val ^= _mex(dp.value(other.bits, 1 << x, (x,)) for x in other)
        return val
    return oracle_grundy(Position(g, VertexSet.of(u, v)))


def classify_cactus_position(c: ComponentPosition) -> CactusTypeTag:
    """Which rewriting case a cactus component falls under.

    A pendant-selected boundary counts as a selected leaf (the virtual
    leaf). A selected vertex sitting in the tree part between cycles also
    lands in the leaf case: its decomposition never touches a cycle
    directly.
    """
    g = c.graph
    if not is_cactus(g):
        raise GraphError("classification needs a cactus component")
    selected = c.selected()
    pendant = isinstance(c.boundary_kind, PendantSelected)
    if len(selected) > 2:
        raise GraphError("component has more than two selected vertices")
    moves = g.vertices.bits & ~(c.covered.bits | selected.bits)
    if not moves:
        return CactusTypeTag.EMPTY
    degs = [g.degree(x) for x in range(g.n)]
    if g.n >= 3 and all(d == 2 for d in degs):
        return CactusTypeTag.CYCLE_BASE
    if is_tree(g):
        return CactusTypeTag.TREE_BASE
    if isinstance(c.boundary_kind, TwoSelected):
        return CactusTypeTag.TYPE_III
    if pendant:
        return CactusTypeTag.TYPE_II
    (u,) = selected.members()
    bct = block_cut_tree(g)
    on_cycle = any(len(b) >= 3 and u in b for b in bct.blocks)
    return CactusTypeTag.TYPE_I if on_cycle else CactusTypeTag.TYPE_II


# ---------------------------------------------------------------------------
# Routing
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class AutoSolution:
    """What solve_auto answered and which solver produced it."""

    value: GrundyValue | Outcome
    solver: str
    tag: GraphClassTag | None

    @property
    def grundy(self) -> GrundyValue | None:
        return self.value if isinstance(self.value, int) else None

    @property
    def outcome(self) -> Outcome:
        if isinstance(self.value, Outcome):
            return self.value
        return Outcome.N if self.value else Outcome.P


_DECOMP_ROUTES = {
    FamilyKind.TREE: ("tree", solve_tree),
    FamilyKind.BLOCK_GRAPH: ("block", solve_block_graph),
    FamilyKind.CACTUS: ("cactus", solve_cactus),
}


def solve_auto(g: Graph, *, budget: int | None = None,
               deadline: float | None = None) -> AutoSolution:
    """Route to the cheapest solver that answers exactly.

    Closed forms first, then the decomposition solvers, then the search
    oracle. Grid-tagged graphs come back as an outcome only; every other
    route returns a Grundy value. Disconnected graphs nim-sum their
    components (grid components fall back to search for a value there).
    """
    comps = connected_components(g)
    if len(comps) != 1:
        total = 0
        solvers = []
        for comp in comps:
            sub, _ = g.induced(comp)
            part = solve_auto(sub, budget=budget, deadline=deadline)
            if part.grundy is None:
                part = AutoSolution(
                    oracle_grundy(Position(sub), budget=budget,
                                  deadline=deadline), "brute",
                    part.tag)
            total ^= part.grundy
            solvers.append(part.solver)
        label = solvers[0] if len(set(solvers)) == 1 else "mixed"
        return AutoSolution(total, label, None)

    tag = recognize_family(g)
    closed = closed_form_lookup(g, tag)
    if closed is not None:
        return AutoSolution(closed, "closed-form", tag)
    route = _DECOMP_ROUTES.get(tag.kind)
    if route is not None:
        name, fn = route
        return AutoSolution(fn(g), name, tag)
    value = oracle_grundy(Position(g), budget=budget, deadline=deadline)
    return AutoSolution(value, "brute", tag)
