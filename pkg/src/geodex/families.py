"""Constructors for the graph families used by the solvers and the CLI."""

from __future__ import annotations

from .graphs import Graph, GraphError, cartesian_product


def path_graph(n: int) -> Graph:
    if n < 1:
        raise GraphError("path needs at least one vertex")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs at least three vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise GraphError("complete graph needs at least one vertex")
    return Graph.from_edges(
        n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def star_graph(leaves: int) -> Graph:
    """Star with the center at id 0 and the given number of leaves."""
    if leaves < 1:
        raise GraphError("star needs at least one leaf")
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete_bipartite_graph(m: int, n: int) -> Graph:
    """Sides 0..m-1 and m..m+n-1, every cross edge present."""
    if m < 1 or n < 1:
        raise GraphError("both sides need at least one vertex")
    return Graph.from_edges(
        m + n, [(i, m + j) for i in range(m) for j in range(n)])


def grid_graph(dims: list[int]) -> Graph:
    """Cartesian product of paths with the given sizes."""
    if not dims:
        raise GraphError("grid needs at least one dimension")
    if any(d < 1 for d in dims):
        raise GraphError("grid dimensions must be positive")
    return cartesian_product([path_graph(d) for d in dims])


def paw_graph() -> Graph:
    """Triangle 0-1-2 with a pendant vertex 3 attached at 0."""
    return Graph.from_edges(4, [(0, 1), (1, 2), (2, 0), (0, 3)])


def bowtie_graph() -> Graph:
    """Two triangles sharing vertex 0."""
    return Graph.from_edges(
        5, [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)])


def chair_graph() -> Graph:
    """Five-vertex tree: path 0-1-2-3 with an extra leaf 4 on vertex 1."""
    return Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (1, 4)])


def cycle_with_leaf(n: int) -> Graph:
    """C_n on 0..n-1 plus a pendant vertex n attached at 0."""
    if n < 3:
        raise GraphError("cycle needs at least three vertices")
    edges = [(i, (i + 1) % n) for i in range(n)] + [(0, n)]
    return Graph.from_edges(n + 1, edges)


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


FAMILY_NAMES = (
    "path", "cycle", "complete", "star", "complete-bipartite", "grid",
    "paw", "bowtie", "chair", "cycle-with-leaf", "petersen",
    "random-tree", "random-block-graph", "random-cactus",
)


def named_graph(name: str, *, n: int | None = None, m: int | None = None,
                dims: list[int] | None = None, seed: int = 0) -> Graph:
    """Build a family member from CLI or API parameters.

    The random families are deterministic for a given (name, n, seed).
    """
    import random

    from .generators import random_block_graph, random_cactus, random_tree

    def need_n() -> int:
        if n is None:
            raise GraphError(f"family {name!r} needs --n")
        return n

    if name == "path":
        return path_graph(need_n())
    if name == "cycle":
        return cycle_graph(need_n())
    if name == "complete":
        return complete_graph(need_n())
    if name == "star":
        return star_graph(need_n())
    if name == "complete-bipartite":
        if m is None:
            raise GraphError("complete-bipartite needs --m and --n")
        return complete_bipartite_graph(m, need_n())
    if name == "grid":
        if not dims:
            raise GraphError("grid needs --dims, e.g. --dims 3,4")
        return grid_graph(dims)
    if name == "paw":
        return paw_graph()
    if name == "bowtie":
        return bowtie_graph()
    if name == "chair":
        return chair_graph()
    if name == "cycle-with-leaf":
        return cycle_with_leaf(need_n())
    if name == "petersen":
        return petersen_graph()
    if name in ("random-tree", "random-block-graph", "random-cactus"):
        rng = random.Random(seed)
        maker = {"random-tree": random_tree,
                 "random-block-graph": random_block_graph,
                 "random-cactus": random_cactus}[name]
        return maker(need_n(), rng)
    raise GraphError(
        f"unknown family {name!r}; known: {', '.join(FAMILY_NAMES)}")
