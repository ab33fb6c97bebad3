"""Named graph families and random chordal graph generators."""

from __future__ import annotations

import random

from .graph import Graph, bits, mask_of

FIGURE1_EDGES = [
    ("a", "b"), ("a", "c"), ("b", "c"), ("b", "d"), ("b", "e"), ("c", "d"),
    ("d", "e"), ("d", "g"), ("e", "f"), ("e", "g"), ("f", "g"),
]


def figure1() -> Graph:
    """The seven-vertex chordal graph on ``a..g`` used as the running example."""
    labels = "abcdefg"
    edges = [(labels.index(u), labels.index(v)) for u, v in FIGURE1_EDGES]
    return Graph.from_edges(7, edges, list(labels))


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def empty_graph(n: int) -> Graph:
    return Graph.from_edges(n, [])


def disjoint_union(*graphs: Graph) -> Graph:
    edges = []
    offset = 0
    for g in graphs:
        edges.extend((u + offset, v + offset) for u, v in g.edges())
        offset += g.n
    return Graph.from_edges(offset, edges)


def random_chordal_graph(n: int, rng: random.Random, connected: bool = True) -> Graph:
    """Random chordal graph grown along a clique tree.

    Each new vertex is attached to a random subset of one existing maximal
    clique, so it is simplicial when added and the result stays chordal.
    With ``connected=False`` a new vertex may start a fresh component.
    """
    if n <= 0:
        return Graph.from_edges(0, [])
    adj = [0] * n
    cliques = [1]
    for v in range(1, n):
        if not connected and rng.random() < 0.15:
            cliques.append(1 << v)
            continue
        host = rng.choice(cliques)
        members = list(bits(host))
        k = rng.randint(1, len(members))
        nbrs = mask_of(rng.sample(members, k))
        for u in bits(nbrs):
            adj[u] |= 1 << v
        adj[v] = nbrs
        new = nbrs | 1 << v
        if nbrs == host:
            cliques[cliques.index(host)] = new
        else:
            cliques.append(new)
    return Graph(n, tuple(adj))


def random_tree(n: int, rng: random.Random) -> Graph:
    return Graph.from_edges(n, [(v, rng.randrange(v)) for v in range(1, n)])


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    return Graph.from_edges(
        n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    )
