"""Seeded random graph generators for the verification suites."""

from __future__ import annotations

import heapq
import random

from .graphs import Graph


def random_tree(n: int, rng: random.Random) -> Graph:
    """Uniform labeled tree via a random parent sequence decode."""
    if n < 1:
        raise ValueError("tree needs at least one vertex")
    if n <= 2:
        return Graph.from_edges(n, [(0, 1)] if n == 2 else [])
    seq = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for v in seq:
        degree[v] += 1
    edges = []
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    for v in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, v))
        degree[v] -= 1
        if degree[v] == 1:
            heapq.heappush(leaves, v)
    u, w = sorted(leaves)[:2]
    edges.append((u, w))
    return Graph.from_edges(n, edges)


def random_block_graph(n: int, rng: random.Random) -> Graph:
    """Grow a connected block graph by gluing cliques (sizes 2..5)."""
    if n < 1:
        raise ValueError("block graph needs at least one vertex")
    edges: list[tuple[int, int]] = []
    size = 1
    while size < n:
        attach = rng.randrange(size)
        clique = min(rng.randint(2, 5), n - size + 1)
        fresh = list(range(size, size + clique - 1))
        members = [attach] + fresh
        for i, a in enumerate(members):
            for b in members[i + 1:]:
                edges.append((a, b))
        size += clique - 1
    return Graph.from_edges(n, edges)


def random_cactus(n: int, rng: random.Random) -> Graph:
    """Grow a connected cactus by gluing cycles (lengths 3..7) and bridges."""
    if n < 1:
        raise ValueError("cactus needs at least one vertex")
    edges: list[tuple[int, int]] = []
    size = 1
    while size < n:
        attach = rng.randrange(size)
        if rng.random() < 0.4 or n - size < 2:
            edges.append((attach, size))
            size += 1
            continue
        length = min(rng.randint(3, 7), n - size + 1)
        ring = [attach] + list(range(size, size + length - 1))
        for a, b in zip(ring, ring[1:]):
            edges.append((a, b))
        edges.append((ring[-1], ring[0]))
        size += length - 1
    return Graph.from_edges(n, edges)


def random_connected_graph(n: int, rng: random.Random,
                           extra_edge_prob: float = 0.25) -> Graph:
    """Random tree plus independent extra edges; always connected."""
    base = random_tree(n, rng)
    edges = set(base.edges())
    for u in range(n):
        for v in range(u + 1, n):
            if (u, v) not in edges and rng.random() < extra_edge_prob:
                edges.add((u, v))
    return Graph.from_edges(n, sorted(edges))


def random_graph(n: int, rng: random.Random, edge_prob: float = 0.4) -> Graph:
    """Random graph, possibly disconnected."""
    edges = [(u, v) for u in range(n) for v in range(u + 1, n)
             if rng.random() < edge_prob]
    return Graph.from_edges(n, edges)


def glued_at_vertex(g1: Graph, g2: Graph, v1: int, v2: int) -> Graph:
    """Identify v1 of g1 with v2 of g2; the joint becomes an articulation
    point whenever both sides have other vertices."""
    remap = {}
    nxt = g1.n
    for v in range(g2.n):
        if v == v2:
            remap[v] = v1
        else:
            remap[v] = nxt
            nxt += 1
    edges = g1.edges() + [(remap[a], remap[b]) for a, b in g2.edges()]
    return Graph.from_edges(g1.n + g2.n - 1, edges)
