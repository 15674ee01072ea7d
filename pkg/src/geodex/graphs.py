"""Graph representation and geodesic machinery for the closed geodetic game.

Vertices are dense integers 0..n-1. Vertex sets are bitmasks wrapped in
:class:`VertexSet`; adjacency is stored as one neighbor mask per vertex so
interval and closure queries reduce to integer ops. Everything here is
immutable after construction and safe for concurrent reads.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field, replace
from enum import Enum
from functools import cached_property

CAPACITY = 128

# Distance sentinel for vertex pairs in different components. Large enough
# that no hop count on a CAPACITY-vertex graph can reach it.
UNREACHABLE = 1 << 30


class GraphError(ValueError):
    """Malformed graph input (parse errors, self-loops, bad ids)."""


class CapacityError(GraphError):
    """Graph exceeds the fixed vertex capacity."""


def _bits(mask: int):
    """Iterate set bit indices of an int mask, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class VertexSet:
    """Immutable set of vertex ids backed by a bitmask (capacity 128)."""

    bits: int = 0

    def __post_init__(self) -> None:
        if self.bits < 0 or self.bits >> CAPACITY:
            raise CapacityError(f"vertex set exceeds capacity {CAPACITY}")

    @classmethod
    def of(cls, *vertices: int) -> "VertexSet":
        return cls.from_iterable(vertices)

    @classmethod
    def from_iterable(cls, vertices) -> "VertexSet":
        bits = 0
        for v in vertices:
            if v < 0 or v >= CAPACITY:
                raise CapacityError(f"vertex id {v} outside capacity {CAPACITY}")
            bits |= 1 << v
        return cls(bits)

    def __contains__(self, v: int) -> bool:
        return 0 <= v < CAPACITY and (self.bits >> v) & 1 == 1

    def __iter__(self):
        return _bits(self.bits)

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __bool__(self) -> bool:
        return self.bits != 0

    def __or__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet(self.bits | other.bits)

    def __and__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet(self.bits & other.bits)

    def __sub__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet(self.bits & ~other.bits)

    def add(self, v: int) -> "VertexSet":
        if v < 0 or v >= CAPACITY:
            raise CapacityError(f"vertex id {v} outside capacity {CAPACITY}")
        return VertexSet(self.bits | (1 << v))

    def issubset(self, other: "VertexSet") -> bool:
        return self.bits & ~other.bits == 0

    def members(self) -> tuple[int, ...]:
        return tuple(_bits(self.bits))

    def __repr__(self) -> str:
        return f"VertexSet({{{', '.join(map(str, self))}}})"


class FamilyKind(Enum):
    COMPLETE = "complete"
    STAR = "star"
    COMPLETE_BIPARTITE = "complete-bipartite"
    CYCLE = "cycle"
    PATH = "path"
    GRID = "grid"
    TREE = "tree"
    BLOCK_GRAPH = "block-graph"
    CACTUS = "cactus"
    GENERAL = "general"


@dataclass(frozen=True)
class GraphClassTag:
    """Most specific recognized family plus its parameters.

    params meaning by kind: COMPLETE/CYCLE/PATH carry (n,), STAR carries
    (leaf count,), COMPLETE_BIPARTITE carries (m, n) with m <= n, GRID
    carries the dimension tuple. Structural kinds carry no params.
    """

    kind: FamilyKind
    params: tuple[int, ...] = ()


@dataclass(frozen=True)
class Graph:
    """Immutable simple undirected graph with bitmask adjacency.

    ``adj[v]`` is the neighbor mask of v. ``label`` caches a family tag
    when one is known at construction time (products of paths carry their
    grid tag); ``factors`` keeps the product construction metadata.
    """

    n: int
    adj: tuple[int, ...]
    label: GraphClassTag | None = None
    factors: tuple["Graph", ...] | None = None

    def __post_init__(self) -> None:
        if self.n > CAPACITY:
            raise CapacityError(
                f"graph has {self.n} vertices, capacity is {CAPACITY}")
        if len(self.adj) != self.n:
            raise GraphError("adjacency length disagrees with vertex count")
        for v, mask in enumerate(self.adj):
            if (mask >> v) & 1:
                raise GraphError(f"self-loop at vertex {v}")
            if mask >> self.n:
                raise GraphError(f"neighbor mask of {v} references bad ids")
            for u in _bits(mask):
                if not (self.adj[u] >> v) & 1:
                    raise GraphError("adjacency is not symmetric")

    @classmethod
    def from_edges(cls, n: int, edges, label: GraphClassTag | None = None,
                   factors: tuple["Graph", ...] | None = None) -> "Graph":
        if n < 0:
            raise GraphError("negative vertex count")
        if n > CAPACITY:
            raise CapacityError(f"graph has {n} vertices, capacity is {CAPACITY}")
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) references a vertex >= {n}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj), label, factors)

    @property
    def vertices(self) -> VertexSet:
        return VertexSet((1 << self.n) - 1 if self.n else 0)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in _bits(self.adj[u])
                if u < v]

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(_bits(self.adj[v]))

    @cached_property
    def distances(self) -> "DistanceMatrix":
        return all_pairs_distances(self)

    @cached_property
    def intervals(self) -> "IntervalTable":
        return _build_interval_table(self)

    def induced(self, region: VertexSet) -> tuple["Graph", list[int]]:
        """Induced subgraph on ``region`` plus the old-id list (new id order)."""
        old_ids = list(region)
        new_id = {old: i for i, old in enumerate(old_ids)}
        edges = [(new_id[u], new_id[v]) for u, v in self.edges()
                 if u in region and v in region]
        return Graph.from_edges(len(old_ids), edges), old_ids


@dataclass(frozen=True)
class DistanceMatrix:
    """All-pairs hop counts; UNREACHABLE marks cross-component pairs."""

    d: tuple[tuple[int, ...], ...]

    def dist(self, u: int, v: int) -> int:
        return self.d[u][v]

    def reachable(self, u: int, v: int) -> bool:
        return self.d[u][v] != UNREACHABLE


@dataclass(frozen=True)
class IntervalTable:
    """Precomputed geodesic intervals as one mask per vertex pair.

    mask(u, v) is every vertex on some shortest u-v path; zero when u and v
    sit in different components. Built once per graph and shared read-only
    by the solvers, so closure is a pure union of masks.
    """

    masks: tuple[tuple[int, ...], ...]

    def mask(self, u: int, v: int) -> int:
        return self.masks[u][v]


@dataclass(frozen=True)
class BlockCutTree:
    """Biconnected blocks, articulation points, and their incidence."""

    articulation_points: VertexSet
    blocks: tuple[VertexSet, ...]
    # block index -> articulation vertices lying in that block
    block_cut_incidence: tuple[tuple[int, ...], ...]


def parse_graph(text: str) -> Graph:
    """Parse the edge-list format: comments with '#', `n <count>`, `u v` lines."""
    n: int | None = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if n is None:
            if len(parts) != 2 or parts[0] != "n":
                raise GraphError(
                    f"line {lineno}: expected header 'n <count>', got {line!r}")
            try:
                n = int(parts[1])
            except ValueError:
                raise GraphError(f"line {lineno}: bad vertex count {parts[1]!r}")
            if n < 0:
                raise GraphError(f"line {lineno}: negative vertex count")
            if n > CAPACITY:
                raise CapacityError(
                    f"line {lineno}: {n} vertices exceeds capacity {CAPACITY}")
            continue
        if len(parts) != 2:
            raise GraphError(f"line {lineno}: expected '<u> <v>', got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphError(f"line {lineno}: non-integer vertex id in {line!r}")
        if u == v:
            raise GraphError(f"line {lineno}: self-loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(
                f"line {lineno}: vertex id out of range 0..{n - 1}")
        key = (min(u, v), max(u, v))
        if key in seen:
            continue
        seen.add(key)
        edges.append(key)
    if n is None:
        raise GraphError("missing 'n <count>' header line")
    return Graph.from_edges(n, edges)


def format_graph(g: Graph) -> str:
    """Serialize back to the edge-list format (round-trips parse_graph)."""
    lines = [f"n {g.n}"]
    lines += [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def all_pairs_distances(g: Graph) -> DistanceMatrix:
    """BFS from every vertex; UNREACHABLE between components."""
    rows = []
    for src in range(g.n):
        dist = [UNREACHABLE] * g.n
        dist[src] = 0
        frontier = 1 << src
        seen = frontier
        hops = 0
        while frontier:
            hops += 1
            nxt = 0
            for u in _bits(frontier):
                nxt |= g.adj[u]
            nxt &= ~seen
            for u in _bits(nxt):
                dist[u] = hops
            seen |= nxt
            frontier = nxt
        rows.append(tuple(dist))
    return DistanceMatrix(tuple(rows))


def _build_interval_table(g: Graph) -> IntervalTable:
    d = g.distances.d
    n = g.n
    masks = [[0] * n for _ in range(n)]
    for u in range(n):
        masks[u][u] = 1 << u
        for v in range(u + 1, n):
            duv = d[u][v]
            if duv == UNREACHABLE:
                continue
            m = 0
            for w in range(n):
                if d[u][w] + d[w][v] == duv:
                    m |= 1 << w
            masks[u][v] = m
            masks[v][u] = m
    return IntervalTable(tuple(tuple(row) for row in masks))


def interval(g: Graph, dm: DistanceMatrix, u: int, v: int) -> VertexSet:
    """Vertices on some shortest u-v path; errors across components."""
    if not (0 <= u < g.n and 0 <= v < g.n):
        raise GraphError("interval endpoint out of range")
    if dm.dist(u, v) == UNREACHABLE:
        raise GraphError(f"vertices {u} and {v} are in different components")
    return VertexSet(g.intervals.mask(u, v))


def closure(g: Graph, it: IntervalTable, s: VertexSet) -> VertexSet:
    """Union of intervals over all pairs of s (one application, not iterated)."""
    out = 0
    members = s.members()
    for i, u in enumerate(members):
        out |= 1 << u
        for v in members[i + 1:]:
            out |= it.mask(u, v)
    return VertexSet(out)


def simplicial_vertices(g: Graph) -> VertexSet:
    """Vertices whose neighborhood is a clique (degree 0 and 1 included)."""
    out = 0
    for v in range(g.n):
        nb = g.adj[v]
        ok = True
        for u in _bits(nb):
            if nb & ~g.adj[u] & ~(1 << u):
                ok = False
                break
        if ok:
            out |= 1 << v
    return VertexSet(out)


def connected_components(g: Graph) -> list[VertexSet]:
    """Partition into components, ordered by smallest member id."""
    remaining = (1 << g.n) - 1 if g.n else 0
    comps = []
    while remaining:
        start = remaining & -remaining
        comp = start
        frontier = start
        while frontier:
            nxt = 0
            for u in _bits(frontier):
                nxt |= g.adj[u]
            nxt &= ~comp
            comp |= nxt
            frontier = nxt
        comps.append(VertexSet(comp))
        remaining &= ~comp
    return comps


def block_cut_tree(g: Graph) -> BlockCutTree:
    """Iterative biconnected-components decomposition (Hopcroft-Tarjan).

    Blocks are vertex sets; every edge lands in exactly one block. Isolated
    vertices contribute no block.
    """
    n = g.n
    disc = [0] * n           # discovery index, 0 = unvisited
    low = [0] * n
    parent = [-1] * n
    arts = 0
    blocks: list[int] = []
    edge_stack: list[tuple[int, int]] = []
    counter = itertools.count(1)

    for root in range(n):
        if disc[root]:
            continue
        root_children = 0
        # stack entries: (vertex, iterator over its neighbors)
        stack = [(root, iter(g.neighbors(root)))]
        disc[root] = low[root] = next(counter)
        while stack:
            v, it = stack[-1]
            advanced = False
            for w in it:
                if not disc[w]:
                    parent[w] = v
                    edge_stack.append((v, w))
                    disc[w] = low[w] = next(counter)
                    stack.append((w, iter(g.neighbors(w))))
                    advanced = True
                    break
                if w != parent[v] and disc[w] < disc[v]:
                    edge_stack.append((v, w))
                    low[v] = min(low[v], disc[w])
            if advanced:
                continue
            stack.pop()
            if not stack:
                continue
            u = stack[-1][0]
            low[u] = min(low[u], low[v])
            if low[v] >= disc[u]:
                # u closes a block: everything above the tree edge (u, v)
                # on the edge stack belongs to it
                if u == root:
                    root_children += 1
                block = 0
                while True:
                    a, b = edge_stack.pop()
                    block |= (1 << a) | (1 << b)
                    if (a, b) == (u, v):
                        break
                blocks.append(block)
                if u != root or root_children > 1:
                    arts |= 1 << u
        assert not edge_stack

    art_set = VertexSet(arts)
    incidence = tuple(
        tuple(v for v in _bits(b & arts)) for b in blocks)
    return BlockCutTree(art_set, tuple(VertexSet(b) for b in blocks),
                        incidence)


def _is_path_shaped(g: Graph) -> bool:
    if g.n == 0:
        return False
    if len(connected_components(g)) != 1:
        return False
    m = sum(g.degree(v) for v in range(g.n)) // 2
    return m == g.n - 1 and all(g.degree(v) <= 2 for v in range(g.n))


def _bipartition(g: Graph) -> tuple[int, int] | None:
    """Two-color a connected graph; returns the side masks or None."""
    color = [-1] * g.n
    color[0] = 0
    frontier = [0]
    while frontier:
        v = frontier.pop()
        for u in _bits(g.adj[v]):
            if color[u] == -1:
                color[u] = color[v] ^ 1
                frontier.append(u)
            elif color[u] == color[v]:
                return None
    a = sum(1 << v for v in range(g.n) if color[v] == 0)
    b = sum(1 << v for v in range(g.n) if color[v] == 1)
    return a, b


def recognize_family(g: Graph) -> GraphClassTag:
    """Most specific family tag under a fixed priority order.

    Priority: complete > star > complete bipartite > cycle > path > grid >
    tree > block graph > cactus > general. Grid tags come only from the
    product constructor's metadata, never re-inferred from adjacency.
    """
    if g.n == 0 or len(connected_components(g)) != 1:
        raise GraphError("family recognition needs a nonempty connected graph")
    n = g.n
    degs = [g.degree(v) for v in range(n)]
    m = sum(degs) // 2

    if all(d == n - 1 for d in degs):
        return GraphClassTag(FamilyKind.COMPLETE, (n,))
    if n >= 3:
        centers = [v for v in range(n) if degs[v] == n - 1]
        if len(centers) == 1 and all(
                degs[v] == 1 for v in range(n) if v != centers[0]):
            return GraphClassTag(FamilyKind.STAR, (n - 1,))
    sides = _bipartition(g)
    if sides is not None:
        a, b = sides
        ca, cb = a.bit_count(), b.bit_count()
        if min(ca, cb) >= 2 and m == ca * cb:
            return GraphClassTag(FamilyKind.COMPLETE_BIPARTITE,
                                 (min(ca, cb), max(ca, cb)))
    if n >= 3 and all(d == 2 for d in degs):
        return GraphClassTag(FamilyKind.CYCLE, (n,))
    if _is_path_shaped(g):
        return GraphClassTag(FamilyKind.PATH, (n,))
    if g.label is not None and g.label.kind is FamilyKind.GRID:
        return g.label
    if m == n - 1:
        return GraphClassTag(FamilyKind.TREE)
    bct = block_cut_tree(g)
    if _blocks_are_cliques(g, bct):
        return GraphClassTag(FamilyKind.BLOCK_GRAPH)
    if _blocks_are_edges_or_cycles(g, bct):
        return GraphClassTag(FamilyKind.CACTUS)
    return GraphClassTag(FamilyKind.GENERAL)


def _block_edge_count(g: Graph, block: VertexSet) -> int:
    return sum((g.adj[v] & block.bits).bit_count() for v in block) // 2


def _blocks_are_cliques(g: Graph, bct: BlockCutTree) -> bool:
    for block in bct.blocks:
        k = len(block)
        if _block_edge_count(g, block) != k * (k - 1) // 2:
            return False
    return True


def _blocks_are_edges_or_cycles(g: Graph, bct: BlockCutTree) -> bool:
    for block in bct.blocks:
        k = len(block)
        if k == 2:
            continue
        if _block_edge_count(g, block) != k:
            return False
    return True


def is_tree(g: Graph) -> bool:
    """Connected and acyclic."""
    if g.n == 0:
        return False
    m = sum(g.degree(v) for v in range(g.n)) // 2
    return m == g.n - 1 and len(connected_components(g)) == 1


def is_block_graph(g: Graph) -> bool:
    """Every biconnected block induces a clique (components may vary)."""
    return _blocks_are_cliques(g, block_cut_tree(g))


def is_cactus(g: Graph) -> bool:
    """Every biconnected block is a single edge or a chordless cycle."""
    return _blocks_are_edges_or_cycles(g, block_cut_tree(g))


def cartesian_product(gs: list[Graph]) -> Graph:
    """Cartesian product; edges change exactly one coordinate.

    Vertex ids enumerate coordinate tuples in lexicographic order. When
    every factor is path shaped the result carries a grid tag with the
    factor sizes as dimensions.
    """
    if not gs:
        raise GraphError("product of an empty factor list")
    for f in gs:
        if f.n == 0:
            raise GraphError("product factor has no vertices")
    sizes = [f.n for f in gs]
    total = 1
    for s in sizes:
        total *= s
    if total > CAPACITY:
        raise CapacityError(
            f"product has {total} vertices, capacity is {CAPACITY}")

    coords = list(itertools.product(*(range(s) for s in sizes)))
    index = {c: i for i, c in enumerate(coords)}
    edges = []
    for c in coords:
        i = index[c]
        for axis, f in enumerate(gs):
            for w in f.neighbors(c[axis]):
                other = c[:axis] + (w,) + c[axis + 1:]
                j = index[other]
                if i < j:
                    edges.append((i, j))
    label = None
    if all(_is_path_shaped(f) for f in gs):
        label = GraphClassTag(FamilyKind.GRID, tuple(sizes))
    return Graph.from_edges(total, edges, label=label, factors=tuple(gs))
